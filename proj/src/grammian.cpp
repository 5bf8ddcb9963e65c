#include "framecheck/grammian.hpp"

#include <stdexcept>

namespace framecheck {

TranslationSystem::TranslationSystem(LatticeFamily f, std::vector<Profile> g, std::string r)
    : fam(std::move(f)), gens(std::move(g)), role(std::move(r)) {
    if (fam.size() != gens.size())
        throw std::invalid_argument("translation system: index sets differ");
    for (const auto& gen : gens) {
        if (gen.dim() != fam.dim())
            throw std::invalid_argument("translation system: dimension mismatch");
        if (gen.mode() != gens.front().mode())
            throw std::invalid_argument("translation system: mixed profile modes");
    }
}

TranslationSystem TranslationSystem::single(RMatrix lattice, Profile gen, std::string role) {
    LatticeFamily fam({"0"}, {std::move(lattice)});
    return TranslationSystem(std::move(fam), {std::move(gen)}, std::move(role));
}

namespace detail {

void require_zero_profile(const Profile& f, const std::string& condition,
                          const std::vector<Rational>& shift, double tol_zero, Verdict& verdict) {
    Violation v;
    v.condition = condition;
    v.shift = shift;
    if (f.mode() == Mode::Exact) {
        auto witness = f.piecewise().max_abs_witness();
        if (!witness) return;
        v.where = witness->piece;
        v.witness_xi = {witness->xi};
        v.value = witness->value;
    } else {
        auto witness = f.grid().max_abs_witness(tol_zero);
        if (!witness) return;
        v.witness_xi = witness->xi;
        v.value = witness->value;
    }
    verdict.add(std::move(v));
}

void require_same_family(const TranslationSystem& H, const TranslationSystem& G) {
    if (!(H.fam == G.fam) || H.fam.labels != G.fam.labels)
        throw std::invalid_argument("index-set mismatch between analysis and synthesis systems");
    if (H.dim() != G.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace detail

Profile cross_term(const TranslationSystem& H, const TranslationSystem& G,
                   const std::vector<Rational>& alpha) {
    detail::require_same_family(H, G);
    Profile total;
    bool any = false;
    for (size_t p : p_alpha(H.fam, alpha)) {
        Rational weight = 1 / rational_abs(H.fam.mats[p].det());
        Profile term = Profile::cross_product(H.gens[p], G.gens[p], alpha, weight);
        total = any ? Profile::sum(total, term) : term;
        any = true;
    }
    if (!any) {
        // alpha outside every dual lattice: empty sum.
        return Profile::exact(Piecewise());
    }
    return total;
}

Profile multiplier_symbol(const TranslationSystem& H, const TranslationSystem& G) {
    detail::require_same_family(H, G);
    std::vector<Rational> zero(H.dim(), Rational(0));
    Profile total;
    for (size_t p = 0; p < H.size(); ++p) {
        Rational weight = 1 / rational_abs(H.fam.mats[p].det());
        Profile term = Profile::cross_product(H.gens[p], G.gens[p], zero, weight);
        total = (p == 0) ? term : Profile::sum(total, term);
    }
    return total;
}

Box cross_term_bound(const TranslationSystem& H, const TranslationSystem& G, double tol_zero) {
    Box box;
    for (size_t p = 0; p < H.size(); ++p) {
        Box diff = support_difference(G.gens[p], H.gens[p], tol_zero);
        box = box.sides.empty() ? diff : box_hull(box, diff);
    }
    return box;
}

Verdict check_translation_commutant(const TranslationSystem& H, const TranslationSystem& G,
                                    double tol_zero) {
    detail::require_same_family(H, G);
    Verdict verdict;
    Box bound = cross_term_bound(H, G, tol_zero);
    auto alphas = enumerate_alpha(H.fam, bound);
    verdict.record({"alpha-box", bound, static_cast<long>(alphas.size())});
    for (const auto& alpha : alphas) {
        Profile t = cross_term(H, G, alpha);
        detail::require_zero_profile(t, "cross-term", alpha, tol_zero, verdict);
    }
    verdict.finalize();
    return verdict;
}

Verdict check_orthogonality(const TranslationSystem& H, const TranslationSystem& G,
                            double tol_zero) {
    Verdict verdict = check_translation_commutant(H, G, tol_zero);
    Profile s = multiplier_symbol(H, G);
    detail::require_zero_profile(s, "multiplier-symbol", {}, tol_zero, verdict);
    verdict.finalize();
    return verdict;
}

namespace {

// s == 1 a.e. on R^d. Compactly supported symbols always fail: the witness is
// placed just past the support hull.
void require_symbol_is_one_everywhere(const Profile& s, double tol_zero, Verdict& verdict) {
    if (s.mode() == Mode::Exact) {
        Interval hull = s.piecewise().support_hull();
        Interval domain = hull.empty() ? Interval(rational(-1), rational(1))
                                       : Interval(hull.lo - 1, hull.hi + 1);
        Piecewise diff =
            s.piecewise().minus_const_on(CRational(Rational(1)), IntervalSet({domain}));
        detail::require_zero_profile(Profile::exact(diff), "multiplier-symbol-not-one", {},
                                     tol_zero, verdict);
        return;
    }
    const Grid& grid = s.grid();
    Box extent;
    for (int i = 0; i < grid.dim(); ++i) {
        Rational top = grid.origin()[i] + grid.step() * Rational(grid.shape()[i]);
        extent.sides.emplace_back(grid.origin()[i], top);
    }
    Grid diff = grid.minus_const_on({1.0, 0.0}, {extent}, nullptr);
    auto witness = diff.max_abs_witness(tol_zero);
    if (witness) {
        Violation v;
        v.condition = "multiplier-symbol-not-one";
        v.witness_xi = witness->xi;
        v.value = witness->value;
        verdict.add(std::move(v));
    }
    // The grid covers only the model band; the symbol vanishes beyond it.
    Violation v;
    v.condition = "multiplier-symbol-not-one";
    v.witness_xi = {extent.sides[0].hi};
    v.value = {-1.0, 0.0};
    v.detail = "symbol vanishes outside the sampled band";
    verdict.add(std::move(v));
}

}  // namespace

Verdict check_duality(const TranslationSystem& H, const TranslationSystem& G, bool lattice_check,
                      double tol_zero) {
    if (H.fam.single_lattice() && G.fam.single_lattice() &&
        H.fam.mats.front() != G.fam.mats.front()) {
        Verdict verdict;
        if (lattice_check) {
            Violation v;
            v.condition = "lattice-mismatch";
            v.detail = "analysis lattice " + H.fam.mats.front().str() +
                       " differs from synthesis lattice " + G.fam.mats.front().str() +
                       "; distinct translation lattices never produce dual frames";
            verdict.add(std::move(v));
        } else {
            Violation v;
            v.condition = "translation-commutant-obstruction";
            v.detail = "with C != D the operator intertwines distinct translation groups; it "
                       "commutes with the C-lattice only if it vanishes, so it cannot be the "
                       "identity";
            verdict.add(std::move(v));
            Verdict zero = check_cross_lattice_zero(G, H, tol_zero);
            verdict.note = zero.holds ? "the mixed operator is the zero operator"
                                      : "the mixed operator is nonzero and non-diagonal";
        }
        verdict.finalize();
        return verdict;
    }
    Verdict verdict = check_translation_commutant(H, G, tol_zero);
    Profile s = multiplier_symbol(H, G);
    require_symbol_is_one_everywhere(s, tol_zero, verdict);
    verdict.finalize();
    return verdict;
}

namespace {

// g_p(C' xi) as a profile (exact 1-D only).
Piecewise precompose_dual(const Profile& gen, const RMatrix& lattice) {
    Rational dual = dual_matrix(lattice).at(0, 0);
    return gen.piecewise().scale_arg(dual);
}

}  // namespace

Verdict check_cross_lattice_zero(const TranslationSystem& G, const TranslationSystem& H,
                                 double tol_zero) {
    if (G.size() != H.size())
        throw std::invalid_argument("cross-lattice: index sets differ in size");
    if (!G.fam.single_lattice() || !H.fam.single_lattice())
        throw std::invalid_argument("cross-lattice: each system must carry a single lattice");
    if (G.dim() != 1 || G.mode() != Mode::Exact || H.mode() != Mode::Exact)
        throw std::invalid_argument("cross-lattice: exact 1-D systems required");
    Verdict verdict;
    const RMatrix& c = G.fam.mats.front();
    const RMatrix& d = H.fam.mats.front();
    std::vector<Piecewise> gc, hd;
    gc.reserve(G.size());
    hd.reserve(H.size());
    Box kbox;
    for (size_t p = 0; p < G.size(); ++p) {
        gc.push_back(precompose_dual(G.gens[p], c));
        hd.push_back(precompose_dual(H.gens[p], d));
        Box diff = box_minkowski_diff(Box::of(hd.back().support_hull()),
                                      Box::of(gc.back().support_hull()));
        kbox = kbox.sides.empty() ? diff : box_hull(kbox, diff);
    }
    auto ks = integer_points(kbox);
    verdict.record({"k-box", kbox, static_cast<long>(ks.size())});
    for (const auto& k : ks) {
        Piecewise total;
        for (size_t p = 0; p < G.size(); ++p) {
            total = total + gc[p].conjugate() * hd[p].shift_arg(k[0]);
        }
        detail::require_zero_profile(Profile::exact(total), "cross-lattice-term", k, tol_zero,
                                     verdict);
    }
    bool terms_zero = verdict.violations.empty();
    if (G.size() == 1) {
        // Equivalent periodization-product form for singly generated systems:
        // sum_m |g(C'(xi+m))|^2 * sum_k |h(D'(xi+k))|^2 == 0 a.e.
        auto periodization = [&](const Piecewise& f) {
            Piecewise total;
            Interval cell(rational(0), rational(1));
            Box shifts = box_minkowski_diff(Box::of(f.support_hull()), Box::of(cell));
            for (const auto& m : integer_points_closed(shifts)) {
                Piecewise shifted = f.shift_arg(m[0]);
                total = total + (shifted.conjugate() * shifted).restricted(IntervalSet({cell}));
            }
            return total;
        };
        Piecewise product = periodization(gc[0]) * periodization(hd[0]);
        bool product_zero = product.is_zero();
        if (!product_zero) {
            detail::require_zero_profile(Profile::exact(product), "periodization-product", {},
                                         tol_zero, verdict);
        }
        if (product_zero != terms_zero) {
            Violation v;
            v.condition = "internal-inconsistency";
            v.detail = "per-shift terms and periodization product disagree";
            verdict.add(std::move(v));
        } else {
            verdict.note = "periodization-product form agrees";
        }
    }
    verdict.finalize();
    return verdict;
}

Rational estimate_lic(const TranslationSystem& S, const Profile& f, const Box& truncation,
                      TruncationRecord* record) {
    if (S.mode() != Mode::Exact || f.mode() != Mode::Exact || S.dim() != 1)
        throw std::invalid_argument("estimate_lic: exact 1-D systems required");
    if (!f.in_class_d())
        throw std::invalid_argument("estimate_lic: f must have compact support bounded away "
                                    "from 0");
    const Piecewise& fp = f.piecewise();
    Piecewise f_sq = fp.conjugate() * fp;
    IntervalSet f_supp = fp.support();
    Interval f_hull = fp.support_hull();
    Rational total(0);
    long count = 0;
    Box kbox_report;
    for (size_t p = 0; p < S.size(); ++p) {
        const RMatrix& c = S.fam.mats[p];
        Rational weight = 1 / rational_abs(c.det());
        const Piecewise& g = S.gens[p].piecewise();
        Piecewise g_sq = g.conjugate() * g;
        // f(xi + C'k) meets supp f only when C'k lands in supp f - supp f.
        Box diff = box_minkowski_diff(Box::of(f_hull), Box::of(f_hull));
        Box kbox = c.transpose().image_bbox(diff);
        if (!truncation.sides.empty()) kbox = box_intersect(kbox, truncation);
        kbox_report = kbox_report.sides.empty() ? kbox : box_hull(kbox_report, kbox);
        Rational c_dual = dual_matrix(c).at(0, 0);
        for (const auto& k : integer_points_closed(kbox)) {
            Rational beta = c_dual * k[0];
            Piecewise shifted = f_sq.shift_arg(beta);
            Piecewise integrand = (shifted * g_sq).restricted(f_supp);
            if (integrand.is_zero()) continue;
            CRational value = integrand.integral_exact(f_hull);
            total += value.re * weight;
            ++count;
        }
    }
    if (record) *record = {"lic-k-box", kbox_report, count};
    return total;
}

}  // namespace framecheck
