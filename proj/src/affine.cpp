#include "framecheck/affine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace framecheck {

namespace {

Rational support_radius(const Piecewise& pw) {
    Interval hull = pw.support_hull();
    if (hull.empty()) return Rational(0);
    return std::max(rational_abs(hull.lo), rational_abs(hull.hi));
}

void require_engine(const AffineSystem& sys, const char* who) {
    if (sys.dim() != 1)
        throw std::invalid_argument(std::string(who) + ": the exact engine is 1-D");
    for (const auto& gen : sys.gens) {
        if (!gen.is_exact())
            throw std::invalid_argument(std::string(who) + ": profiles must be exact");
    }
    if (!sys.dilation.expansive)
        throw std::invalid_argument(std::string(who) + ": dilation must be expansive");
}

void require_shared_integer_dilation(const AffineSystem& f, const AffineSystem& g,
                                     const char* who) {
    if (f.dilation != g.dilation)
        throw std::invalid_argument(std::string(who) + ": mismatched dilation matrices");
    if (!f.dilation.integer_valued)
        throw std::invalid_argument(std::string(who) + ": dilation must be integer-valued");
    if (!f.translation.is_identity() || !g.translation.is_identity())
        throw std::invalid_argument(std::string(who) + ": translation lattice must be identity "
                                                       "(conjugate the system first)");
    if (f.generator_count() != g.generator_count())
        throw std::invalid_argument(std::string(who) + ": generator counts differ");
}

// q-feasibility for the j >= 0 dilated cross terms: the j = 0 box joined with
// the origin covers every scaled-down level.
Box dilated_shift_box(const AffineSystem& f, const AffineSystem& g, double tol_zero) {
    Box box;
    for (size_t i = 0; i < f.gens.size(); ++i) {
        Box diff = support_difference(g.gens[i], f.gens[i], tol_zero);
        box = box.sides.empty() ? diff : box_hull(box, diff);
    }
    if (box.sides.empty()) return box;
    for (auto& side : box.sides) {
        side.lo = std::min(side.lo, Rational(0));
        side.hi = std::max(side.hi, Rational(0));
    }
    return box;
}

}  // namespace

AffineSystem::AffineSystem(DilationMatrix a, std::vector<Profile> psi, Convention conv)
    : AffineSystem(std::move(a), RMatrix(), std::move(psi), conv) {}

AffineSystem::AffineSystem(DilationMatrix a, RMatrix x, std::vector<Profile> psi, Convention conv)
    : dilation(std::move(a)), translation(std::move(x)), gens(std::move(psi)), convention(conv) {
    if (gens.empty()) throw std::invalid_argument("affine system: no generators");
    if (!dilation.expansive) throw std::invalid_argument("affine system: dilation not expansive");
    if (translation.rows() == 0) translation = RMatrix::identity(dilation.dim());
    if (translation.rows() != dilation.dim() || translation.det() == 0)
        throw std::invalid_argument("affine system: invalid translation matrix");
    for (const auto& gen : gens) {
        if (gen.dim() != dilation.dim())
            throw std::invalid_argument("affine system: generator dimension mismatch");
    }
}

std::vector<Interval> fundamental_annulus(const DilationMatrix& a) {
    if (a.dim() != 1) throw std::invalid_argument("fundamental_annulus: 1-D only");
    Rational mag = rational_abs(a.factor());
    return {Interval(-mag, rational(-1)), Interval(rational(1), mag)};
}

Profile affine_cross_term(const AffineSystem& F, const AffineSystem& G,
                          const std::vector<Rational>& q) {
    require_engine(F, "affine_cross_term");
    require_engine(G, "affine_cross_term");
    require_shared_integer_dilation(F, G, "affine_cross_term");
    if (q.size() != 1) throw std::invalid_argument("affine_cross_term: shift dimension");
    Rational a = F.dilation.factor();
    if (!is_integer(q[0]) || is_integer(q[0] / a))
        throw std::invalid_argument("affine_cross_term: shift is not a coset representative "
                                    "(q must be an integer outside A^* Z^d)");
    Rational bound(0);
    for (size_t i = 0; i < F.gens.size(); ++i) {
        Rational r = support_radius(F.gens[i].piecewise()) + support_radius(G.gens[i].piecewise());
        bound = std::max(bound, r);
    }
    Rational mag = rational_abs(a);
    Rational q_abs = rational_abs(q[0]);
    Piecewise total;
    Rational power(1);      // a^j
    Rational magnitude(1);  // |a|^j
    for (int j = 0; magnitude * q_abs <= bound; ++j) {
        for (size_t i = 0; i < F.gens.size(); ++i) {
            Piecewise fj = F.gens[i].piecewise().scale_arg(power);
            Piecewise gj = G.gens[i].piecewise().scale_arg(power);
            total = total + fj.conjugate() * gj.shift_arg(q[0]);
        }
        power *= a;
        magnitude *= mag;
    }
    return Profile::exact(total);
}

Profile calderon_mixed_symbol(const AffineSystem& F, const AffineSystem& G,
                              const std::vector<Interval>& window) {
    require_engine(F, "calderon_mixed_symbol");
    require_engine(G, "calderon_mixed_symbol");
    if (F.dilation != G.dilation)
        throw std::invalid_argument("calderon_mixed_symbol: mismatched dilation matrices");
    if (F.generator_count() != G.generator_count())
        throw std::invalid_argument("calderon_mixed_symbol: generator counts differ");
    Rational a = F.dilation.factor();
    for (const auto& w : window) {
        if (w.empty()) continue;
        if (w.lo <= 0 && w.hi >= 0)
            throw std::invalid_argument("calderon_mixed_symbol: window touches 0 (the dilation "
                                        "orbit there is infinite)");
    }
    IntervalSet domain(window);
    Piecewise total;
    for (size_t i = 0; i < F.gens.size(); ++i) {
        if (F.gens[i].piecewise().is_zero() || G.gens[i].piecewise().is_zero()) continue;
        std::set<int> levels;
        for (const auto& w : domain.parts()) {
            for (int j : dilate_index_range(F.gens[i], a, w)) levels.insert(j);
        }
        // Keep only levels where the synthesis side can also be nonzero.
        std::set<int> keep;
        for (const auto& w : domain.parts()) {
            for (int j : dilate_index_range(G.gens[i], a, w)) {
                if (levels.count(j)) keep.insert(j);
            }
        }
        for (int j : keep) {
            Rational power(1);
            for (int t = 0; t < std::abs(j); ++t) power *= a;
            if (j < 0) power = 1 / power;
            Piecewise fj = F.gens[i].piecewise().scale_arg(power);
            Piecewise gj = G.gens[i].piecewise().scale_arg(power);
            total = total + (fj.conjugate() * gj).restricted(domain);
        }
    }
    return Profile::exact(total.restricted(domain));
}

Profile calderon_mixed_symbol(const AffineSystem& F, const AffineSystem& G) {
    return calderon_mixed_symbol(F, G, fundamental_annulus(F.dilation));
}

namespace {

// Shared body of the equal-dilation checks: enumerates the feasible coset
// representatives and tests every dilated cross term conj(analysis)synthesis.
void equal_dilation_cross_terms(const AffineSystem& analysis, const AffineSystem& synthesis,
                                const std::string& label, double tol_zero, Verdict& verdict) {
    Box qbox = dilated_shift_box(analysis, synthesis, tol_zero);
    std::vector<std::vector<Rational>> qs;
    if (!qbox.empty()) qs = enumerate_q(analysis.dilation, qbox);
    verdict.record({label + "-q-box", qbox, static_cast<long>(qs.size())});
    for (const auto& q : qs) {
        Profile t = affine_cross_term(analysis, synthesis, q);
        detail::require_zero_profile(t, label, q, tol_zero, verdict);
    }
}

void require_symbol_equals(const Profile& symbol, const CRational& target,
                           const std::vector<Interval>& window, const std::string& label,
                           double tol_zero, Verdict& verdict) {
    Piecewise diff = symbol.piecewise().minus_const_on(target, IntervalSet(window));
    detail::require_zero_profile(Profile::exact(diff), label, {}, tol_zero, verdict);
}

}  // namespace

Verdict check_affine_orthogonality(const AffineSystem& Psi, const AffineSystem& Phi,
                                   double tol_zero) {
    require_engine(Psi, "check_affine_orthogonality");
    require_engine(Phi, "check_affine_orthogonality");
    require_shared_integer_dilation(Psi, Phi, "check_affine_orthogonality");
    Verdict verdict;
    equal_dilation_cross_terms(Psi, Phi, "dilated-cross-term", tol_zero, verdict);
    Profile symbol = calderon_mixed_symbol(Psi, Phi);
    detail::require_zero_profile(symbol, "calderon-sum", {}, tol_zero, verdict);
    verdict.finalize();
    return verdict;
}

AqeClassification classify_aqe(const AffineSystem& Psi, const AffineSystem& Phi,
                               double tol_zero) {
    require_engine(Psi, "classify_aqe");
    require_engine(Phi, "classify_aqe");
    require_shared_integer_dilation(Psi, Phi, "classify_aqe");
    AqeClassification out;
    equal_dilation_cross_terms(Phi, Psi, "dilated-cross-term", tol_zero, out.detail);
    out.detail.finalize();
    out.commutant_holds = out.detail.holds;
    if (out.commutant_holds) out.symbol = calderon_mixed_symbol(Phi, Psi);
    return out;
}

namespace {

// Condition family at scale zero: sum_i conj(analysis_i(xi)) synth_i(xi + k)
// over every integer k in the feasibility box.
void translate_cross_terms(const std::vector<Piecewise>& analysis,
                           const std::vector<Piecewise>& synthesis, const std::string& label,
                           double tol_zero, Verdict& verdict) {
    Box kbox;
    for (size_t i = 0; i < analysis.size(); ++i) {
        Box diff = box_minkowski_diff(Box::of(synthesis[i].support_hull()),
                                      Box::of(analysis[i].support_hull()));
        kbox = kbox.sides.empty() ? diff : box_hull(kbox, diff);
    }
    auto ks = kbox.empty() ? std::vector<std::vector<Rational>>{} : integer_points(kbox);
    verdict.record({label + "-k-box", kbox, static_cast<long>(ks.size())});
    for (const auto& k : ks) {
        Piecewise total;
        for (size_t i = 0; i < analysis.size(); ++i) {
            total = total + analysis[i].conjugate() * synthesis[i].shift_arg(k[0]);
        }
        detail::require_zero_profile(Profile::exact(total), label, k, tol_zero, verdict);
    }
}

// Condition family over positive scales with per-side dilations:
// sum_i sum_{j>0} conj(analysis_i(a^j xi)) synth_i(b^j (xi + k)) for integer k.
void positive_level_cross_terms(const std::vector<Piecewise>& analysis, const Rational& a,
                                const std::vector<Piecewise>& synthesis, const Rational& b,
                                const std::string& label, double tol_zero, Verdict& verdict) {
    Rational mag_a = rational_abs(a);
    Rational mag_b = rational_abs(b);
    if (mag_a == mag_b)
        throw std::invalid_argument("positive-level conditions need |A| != |B|: for |A| = |B| "
                                    "the scale-zero level sum does not reduce to a finite range");
    // Level bound 1: a k != 0 term needs |k| <= R_a/|a|^j + R_b/|b|^j.
    // Level bound 2: the k = 0 term needs the two magnitude windows
    // [m_a, R_a]/|a|^j and [m_b, R_b]/|b|^j to overlap.
    Rational r_a(0), r_b(0);
    Rational m_a(-1), m_b(-1);
    for (size_t i = 0; i < analysis.size(); ++i) {
        r_a = std::max(r_a, support_radius(analysis[i]));
        r_b = std::max(r_b, support_radius(synthesis[i]));
        auto da = analysis[i].support_distance_from_zero();
        auto db = synthesis[i].support_distance_from_zero();
        if (da && (m_a < 0 || *da < m_a)) m_a = *da;
        if (db && (m_b < 0 || *db < m_b)) m_b = *db;
    }
    if (r_a == 0 || r_b == 0) {
        verdict.record({label + "-j-range", Box(), 0, 1, 0});
        return;  // one side is identically zero
    }
    if (m_a == 0 || m_b == 0)
        throw std::invalid_argument("positive-level conditions need class-D generators");
    int j_hi = 0;
    {
        // bound 1, k != 0 (|k| >= 1)
        Rational va = r_a / mag_a;
        Rational vb = r_b / mag_b;
        int j = 1;
        while (va + vb >= 1) {
            j_hi = j;
            va /= mag_a;
            vb /= mag_b;
            ++j;
        }
        // bound 2, k = 0: the term needs m_a/|a|^j <= r_b/|b|^j and
        // m_b/|b|^j <= r_a/|a|^j, i.e. rho^j in [m_b/r_a, r_b/m_a] with
        // rho = |b|/|a| != 1. rho^j is strictly monotone, so the feasible j's
        // are capped by the exit of the window on rho's side.
        Rational rho = mag_b / mag_a;
        Rational low = m_b / r_a;
        Rational high = r_b / m_a;
        Rational rho_j = rho;
        int j2 = 0;
        for (j = 1; rho > 1 ? rho_j <= high : rho_j >= low; ++j) {
            j2 = j;
            rho_j *= rho;
        }
        j_hi = std::max(j_hi, j2);
    }
    Rational k_bound = r_a / mag_a + r_b / mag_b;
    Box kbox = Box::of(Interval(-k_bound, k_bound + 1));
    auto ks = integer_points(kbox);
    verdict.record({label + "-k-box", kbox, static_cast<long>(ks.size()), 1, j_hi});
    for (const auto& k : ks) {
        Piecewise total;
        Rational pa = a;
        Rational pb = b;
        for (int j = 1; j <= j_hi; ++j) {
            for (size_t i = 0; i < analysis.size(); ++i) {
                Piecewise aj = analysis[i].scale_arg(pa);
                Piecewise bj = synthesis[i].scale_arg(pb);
                total = total + aj.conjugate() * bj.shift_arg(k[0]);
            }
            pa *= a;
            pb *= b;
        }
        detail::require_zero_profile(Profile::exact(total), label, k, tol_zero, verdict);
    }
}

}  // namespace

Verdict check_quasi_affine_orthogonality(const AffineSystem& Psi, const AffineSystem& Phi,
                                         double tol_zero) {
    require_engine(Psi, "check_quasi_affine_orthogonality");
    require_engine(Phi, "check_quasi_affine_orthogonality");
    AffineSystem psi_c = conjugate_system(Psi);
    AffineSystem phi_c = conjugate_system(Phi);
    if (!psi_c.dilation.integer_valued)
        throw std::invalid_argument("check_quasi_affine_orthogonality: X^-1 A X must be an "
                                    "integer matrix");
    if (psi_c.dilation == phi_c.dilation)
        throw std::invalid_argument("check_quasi_affine_orthogonality: equal conjugated "
                                    "dilations; use the equal-dilation check");
    if (psi_c.generator_count() != phi_c.generator_count())
        throw std::invalid_argument("check_quasi_affine_orthogonality: generator counts differ");
    std::vector<Piecewise> psi_gens, phi_gens;
    for (const auto& g : psi_c.gens) psi_gens.push_back(g.piecewise());
    for (const auto& g : phi_c.gens) phi_gens.push_back(g.piecewise());
    Verdict verdict;
    translate_cross_terms(psi_gens, phi_gens, "translate-cross-term", tol_zero, verdict);
    positive_level_cross_terms(psi_gens, psi_c.dilation.factor(), phi_gens,
                               phi_c.dilation.factor(), "dilated-cross-term", tol_zero, verdict);
    verdict.finalize();
    return verdict;
}

Verdict check_affine_sufficient(const AffineSystem& Psi, const AffineSystem& Phi,
                                double tol_zero) {
    require_engine(Psi, "check_affine_sufficient");
    require_engine(Phi, "check_affine_sufficient");
    if (Psi.generator_count() != Phi.generator_count())
        throw std::invalid_argument("check_affine_sufficient: generator counts differ");
    Rational x_dual = dual_matrix(Psi.translation).at(0, 0);
    Rational y_dual = dual_matrix(Phi.translation).at(0, 0);
    std::vector<Piecewise> psi_gens, phi_gens;
    for (const auto& g : Psi.gens) psi_gens.push_back(g.piecewise().scale_arg(x_dual));
    for (const auto& g : Phi.gens) phi_gens.push_back(g.piecewise().scale_arg(y_dual));
    Verdict verdict;
    translate_cross_terms(psi_gens, phi_gens, "translate-cross-term", tol_zero, verdict);
    verdict.characterized = false;
    verdict.note = "sufficient condition only: failure leaves orthogonality undecided";
    verdict.finalize();
    return verdict;
}

Verdict check_parseval_superwavelet(const std::vector<AffineSystem>& systems, double tol_zero) {
    if (systems.empty())
        throw std::invalid_argument("check_parseval_superwavelet: empty system list");
    struct Component {
        DilationMatrix a;
        Profile psi;
    };
    std::vector<Component> comps;
    for (const auto& sys : systems) {
        require_engine(sys, "check_parseval_superwavelet");
        if (!sys.translation.is_identity())
            throw std::invalid_argument("check_parseval_superwavelet: X must be the identity");
        for (const auto& gen : sys.gens) comps.push_back({sys.dilation, gen});
    }
    bool equal_dilation = true;
    for (const auto& comp : comps) {
        if (comp.a != comps.front().a) equal_dilation = false;
        if (!comp.a.integer_valued)
            throw std::invalid_argument("check_parseval_superwavelet: dilations must be "
                                        "integer-valued");
    }
    Verdict verdict;
    auto single = [&](const Component& comp) {
        return AffineSystem(comp.a, {comp.psi});
    };
    auto pair_label = [](const char* base, size_t i, size_t j) {
        return std::string(base) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ")";
    };
    if (equal_dilation) {
        verdict.note = "equal dilation: direct-sum conditions";
        for (size_t i = 0; i < comps.size(); ++i) {
            for (size_t j = 0; j < comps.size(); ++j) {
                AffineSystem si = single(comps[i]);
                AffineSystem sj = single(comps[j]);
                Profile symbol = calderon_mixed_symbol(si, sj);
                CRational target = (i == j) ? CRational(Rational(1)) : CRational();
                require_symbol_equals(symbol, target, fundamental_annulus(comps[i].a),
                                      pair_label("calderon-delta", i, j), tol_zero, verdict);
                Verdict cross;
                equal_dilation_cross_terms(si, sj, pair_label("dilated-cross-term", i, j),
                                           tol_zero, cross);
                for (auto& v : cross.violations) verdict.add(std::move(v));
                for (auto& t : cross.truncation) verdict.record(std::move(t));
            }
        }
        verdict.finalize();
        return verdict;
    }
    verdict.note = "mixed dilations: per-component Parseval plus pairwise quasi-affine "
                   "orthogonality";
    for (size_t i = 0; i < comps.size(); ++i) {
        AffineSystem si = single(comps[i]);
        Profile symbol = calderon_mixed_symbol(si, si);
        require_symbol_equals(symbol, CRational(Rational(1)), fundamental_annulus(comps[i].a),
                              pair_label("component-calderon", i, i), tol_zero, verdict);
        Verdict cross;
        equal_dilation_cross_terms(si, si, pair_label("component-cross-term", i, i), tol_zero,
                                   cross);
        for (auto& v : cross.violations) verdict.add(std::move(v));
        for (auto& t : cross.truncation) verdict.record(std::move(t));
    }
    for (size_t i = 0; i < comps.size(); ++i) {
        for (size_t j = 0; j < comps.size(); ++j) {
            if (i == j) continue;
            std::vector<Piecewise> ai{comps[i].psi.piecewise()};
            std::vector<Piecewise> sj{comps[j].psi.piecewise()};
            if (comps[i].a == comps[j].a) {
                Verdict cross = check_affine_orthogonality(single(comps[i]), single(comps[j]),
                                                           tol_zero);
                for (auto& v : cross.violations) {
                    v.condition = pair_label("equal-dilation-", i, j) + v.condition;
                    verdict.add(std::move(v));
                }
                continue;
            }
            translate_cross_terms(ai, sj, pair_label("translate-cross-term", i, j), tol_zero,
                                  verdict);
            positive_level_cross_terms(ai, comps[i].a.factor(), sj, comps[j].a.factor(),
                                       pair_label("dilated-cross-term", i, j), tol_zero,
                                       verdict);
        }
    }
    verdict.finalize();
    return verdict;
}

AffineSystem conjugate_system(const AffineSystem& sys) {
    if (sys.dim() != 1) throw std::invalid_argument("conjugate_system: 1-D only");
    if (sys.translation.det() == 0) throw std::invalid_argument("conjugate_system: singular X");
    RMatrix x_inv = sys.translation.inverse();
    RMatrix conjugated = x_inv * sys.dilation.mat * sys.translation;
    Rational x_dual = dual_matrix(sys.translation).at(0, 0);
    Rational det_abs = rational_abs(sys.translation.det());
    std::vector<Profile> gens;
    gens.reserve(sys.gens.size());
    for (const auto& gen : sys.gens) {
        Piecewise pw = gen.piecewise().scale_arg(x_dual).scaled_sqrt(1 / det_abs);
        gens.push_back(Profile::exact(std::move(pw)));
    }
    return AffineSystem(DilationMatrix::make(std::move(conjugated)), std::move(gens),
                        sys.convention);
}

}  // namespace framecheck
