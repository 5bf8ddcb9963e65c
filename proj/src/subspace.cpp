#include "framecheck/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace framecheck {

namespace {

Box box_shifted(const Box& box, const std::vector<Rational>& by, bool negate) {
    Box out = box;
    for (size_t i = 0; i < out.sides.size(); ++i) {
        Rational v = negate ? Rational(-by[i]) : by[i];
        out.sides[i] = out.sides[i].shifted(v);
    }
    return out;
}

}  // namespace

SpectralSet::SpectralSet(int d, std::vector<Box> bs) : dims(d), boxes(std::move(bs)) {
    boxes.erase(std::remove_if(boxes.begin(), boxes.end(), [](const Box& b) { return b.empty(); }),
                boxes.end());
    for (const auto& box : boxes) {
        if (box.dim() != dims) throw std::invalid_argument("spectral set: dimension mismatch");
    }
    if (dims == 1) {
        // Normal form: disjoint sorted intervals.
        std::vector<Interval> parts;
        parts.reserve(boxes.size());
        for (const auto& box : boxes) parts.push_back(box.sides[0]);
        IntervalSet normalized(std::move(parts));
        boxes.clear();
        for (const auto& iv : normalized.parts()) boxes.push_back(Box::of(iv));
        return;
    }
    for (size_t i = 0; i < boxes.size(); ++i) {
        for (size_t j = i + 1; j < boxes.size(); ++j) {
            if (!box_intersect(boxes[i], boxes[j]).empty())
                throw std::invalid_argument("spectral set: overlapping boxes");
        }
    }
}

bool SpectralSet::empty() const { return boxes.empty(); }

Rational SpectralSet::measure() const {
    Rational total(0);
    for (const auto& box : boxes) {
        Rational volume(1);
        for (const auto& side : box.sides) volume *= side.length();
        total += volume;
    }
    return total;
}

IntervalSet SpectralSet::intervals() const {
    if (dims != 1) throw std::logic_error("spectral set: 1-D view of a d >= 2 set");
    std::vector<Interval> parts;
    parts.reserve(boxes.size());
    for (const auto& box : boxes) parts.push_back(box.sides[0]);
    return IntervalSet(std::move(parts));
}

bool SpectralSet::closure_contains_origin() const {
    for (const auto& box : boxes) {
        bool inside = true;
        for (const auto& side : box.sides) {
            if (side.lo > 0 || side.hi < 0) {
                inside = false;
                break;
            }
        }
        if (inside) return true;
    }
    return false;
}

Box SpectralSet::hull() const {
    Box out;
    for (const auto& box : boxes) out = out.sides.empty() ? box : box_hull(out, box);
    return out;
}

namespace {

// Condition 1 of the duality theorems: symbol == 1 a.e. on E.
void require_symbol_one_on_set(const Profile& s, const SpectralSet& E, const std::string& label,
                               double tol_zero, Verdict& verdict) {
    if (s.mode() == Mode::Exact) {
        Piecewise diff = s.piecewise().minus_const_on(CRational(Rational(1)), E.intervals());
        detail::require_zero_profile(Profile::exact(diff), label, {}, tol_zero, verdict);
        return;
    }
    bool covered = true;
    Grid diff = s.grid().minus_const_on({1.0, 0.0}, E.boxes, &covered);
    if (!covered) {
        Violation v;
        v.condition = label;
        v.detail = "sample grid does not cover the spectrum set";
        verdict.add(std::move(v));
    }
    detail::require_zero_profile(Profile::sampled(std::move(diff)), label, {}, tol_zero, verdict);
}

// Restrict a profile to a set of boxes (shifted copy of E).
Profile restrict_profile(const Profile& f, const SpectralSet& E,
                         const std::vector<Rational>& minus_shift) {
    if (f.mode() == Mode::Exact) {
        IntervalSet domain = E.intervals().shifted(-minus_shift[0]);
        return Profile::exact(f.piecewise().restricted(domain));
    }
    std::vector<Box> domain;
    domain.reserve(E.boxes.size());
    for (const auto& box : E.boxes) domain.push_back(box_shifted(box, minus_shift, true));
    return Profile::sampled(f.grid().restricted(domain));
}

// Feasible alpha for condition 2: the term lives on (E - alpha), needs
// xi in supp h_p and xi + alpha in E cap supp g_p.
Box subspace_alpha_box(const TranslationSystem& H, const TranslationSystem& G,
                       const SpectralSet& E, double tol_zero) {
    Box ehull = E.hull();
    Box out;
    for (size_t p = 0; p < H.size(); ++p) {
        Box gs = G.gens[p].support_box(tol_zero);
        Box hs = H.gens[p].support_box(tol_zero);
        if (gs.empty() || hs.empty()) continue;
        Box diff = box_minkowski_diff(box_intersect(ehull, gs), hs);
        if (diff.empty()) continue;
        out = out.sides.empty() ? diff : box_hull(out, diff);
    }
    return out;
}

bool distinct_single_lattices(const TranslationSystem& H, const TranslationSystem& G,
                              Verdict& verdict) {
    if (H.fam.single_lattice() && G.fam.single_lattice() &&
        H.fam.mats.front() != G.fam.mats.front()) {
        Violation v;
        v.condition = "lattice-mismatch";
        v.detail = "a system on lattice " + H.fam.mats.front().str() +
                   " can never be a subspace dual to one on " + G.fam.mats.front().str();
        verdict.add(std::move(v));
        verdict.finalize();
        return true;
    }
    return false;
}

}  // namespace

Verdict check_subspace_dual(const TranslationSystem& H, const TranslationSystem& G,
                            const SpectralSet& E, double tol_zero) {
    if (H.dim() != E.dim() || G.dim() != E.dim())
        throw std::invalid_argument("check_subspace_dual: dimension mismatch");
    Verdict verdict;
    if (distinct_single_lattices(H, G, verdict)) return verdict;
    detail::require_same_family(H, G);
    Profile s = multiplier_symbol(H, G);
    require_symbol_one_on_set(s, E, "symbol-on-set", tol_zero, verdict);
    Box abox = subspace_alpha_box(H, G, E, tol_zero);
    auto alphas = enumerate_alpha(H.fam, abox);
    verdict.record({"alpha-box", abox, static_cast<long>(alphas.size())});
    for (const auto& alpha : alphas) {
        Profile term = restrict_profile(cross_term(H, G, alpha), E, alpha);
        detail::require_zero_profile(term, "cross-term-on-set", alpha, tol_zero, verdict);
    }
    verdict.finalize();
    return verdict;
}

Verdict check_sufficient_subspace_dual(const TranslationSystem& H, const TranslationSystem& G,
                                       const SpectralSet& E, double tol_zero) {
    if (H.dim() != E.dim() || G.dim() != E.dim())
        throw std::invalid_argument("check_sufficient_subspace_dual: dimension mismatch");
    Verdict verdict;
    if (distinct_single_lattices(H, G, verdict)) return verdict;
    Verdict commutant = check_translation_commutant(H, G, tol_zero);
    for (auto& v : commutant.violations) verdict.add(std::move(v));
    for (auto& t : commutant.truncation) verdict.record(std::move(t));
    Profile s = multiplier_symbol(H, G);
    require_symbol_one_on_set(s, E, "symbol-on-set", tol_zero, verdict);
    verdict.characterized = false;
    verdict.note = "symmetric sufficient condition: holding implies mutual subspace duality";
    verdict.finalize();
    return verdict;
}

Verdict check_plancherel_frame(const TranslationSystem& G, const SpectralSet& E,
                               double tol_zero) {
    Verdict verdict = check_subspace_dual(G, G, E, tol_zero);
    verdict.note = "self-dual case h_p = g_p";
    return verdict;
}

Verdict check_affine_subspace_dual(const AffineSystem& Phi, const AffineSystem& Psi,
                                   const SpectralSet& E, double tol_zero) {
    if (Phi.dim() != E.dim() || Psi.dim() != E.dim())
        throw std::invalid_argument("check_affine_subspace_dual: dimension mismatch");
    bool all_zero = true;
    for (const auto& g : Phi.gens) all_zero = all_zero && g.is_zero(tol_zero);
    for (const auto& g : Psi.gens) all_zero = all_zero && g.is_zero(tol_zero);
    Verdict verdict;
    if (E.closure_contains_origin()) {
        if (!all_zero)
            throw std::domain_error("check_affine_subspace_dual: the two-sided dilation sum is "
                                    "not finitely computable on a set touching 0");
        Violation v;
        v.condition = "calderon-on-set";
        v.detail = "all generators vanish; the reconstruction sum is 0, not 1";
        verdict.add(std::move(v));
        verdict.finalize();
        return verdict;
    }
    std::vector<Interval> window;
    for (const auto& iv : E.intervals().parts()) window.push_back(iv);
    Profile symbol = calderon_mixed_symbol(Phi, Psi, window);
    Piecewise diff = symbol.piecewise().minus_const_on(CRational(Rational(1)), E.intervals());
    detail::require_zero_profile(Profile::exact(diff), "calderon-on-set", {}, tol_zero, verdict);

    // Condition 2 feasibility: q in (E cap dilates of supp psi) - dilates of
    // supp phi; the j >= 0 dilates stay inside the hull joined with 0.
    auto hull_with_zero = [](Interval hull) {
        if (hull.empty()) return hull;
        hull.lo = std::min(hull.lo, Rational(0));
        hull.hi = std::max(hull.hi, Rational(0));
        return hull;
    };
    Box qbox;
    Interval ehull = E.intervals().hull();
    for (size_t i = 0; i < Psi.gens.size(); ++i) {
        Interval psi_hull = hull_with_zero(Psi.gens[i].piecewise().support_hull());
        Interval phi_hull = hull_with_zero(Phi.gens[i].piecewise().support_hull());
        if (psi_hull.empty() || phi_hull.empty()) continue;
        Interval feasible = Interval::intersect(ehull, psi_hull);
        if (feasible.empty()) continue;
        Box diff_box = Box::of(minkowski_diff(feasible, phi_hull));
        qbox = qbox.sides.empty() ? diff_box : box_hull(qbox, diff_box);
    }
    std::vector<std::vector<Rational>> qs;
    if (!qbox.empty()) qs = enumerate_q(Phi.dilation, qbox);
    verdict.record({"q-box", qbox, static_cast<long>(qs.size())});
    for (const auto& q : qs) {
        Profile term = affine_cross_term(Phi, Psi, q);
        Profile on_set = restrict_profile(term, E, q);
        detail::require_zero_profile(on_set, "dilated-cross-term-on-set", q, tol_zero, verdict);
    }
    verdict.finalize();
    return verdict;
}

}  // namespace framecheck
