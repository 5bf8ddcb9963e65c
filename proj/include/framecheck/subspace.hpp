#pragma once

#include "framecheck/affine.hpp"
#include "framecheck/grammian.hpp"

namespace framecheck {

// Spectrum set E of a translation-invariant subspace V_E = { f : supp f^ in E },
// stored as a finite union of disjoint half-open rational boxes.
struct SpectralSet {
    int dims = 1;
    std::vector<Box> boxes;

    SpectralSet() = default;
    SpectralSet(int d, std::vector<Box> bs);

    static SpectralSet interval(const Rational& lo, const Rational& hi) {
        return SpectralSet(1, {Box::of(Interval(lo, hi))});
    }

    int dim() const { return dims; }
    bool empty() const;
    Rational measure() const;
    // 1-D view (throws for d >= 2).
    IntervalSet intervals() const;
    bool closure_contains_origin() const;
    Box hull() const;
};

// Decides "H-translates are a V_E-subspace dual to G-translates":
//   (1) sum_p |det C_p|^-1 conj(h_p) g_p == 1 a.e. on E,
//   (2) for alpha in Lambda \ {0}: the cross term t_alpha vanishes a.e. on
//       E - alpha (equivalently conj(h_p(xi - alpha)) g_p(xi) vanishes on E).
// Direction-sensitive; systems must share one lattice family (distinct single
// lattices fail outright).
Verdict check_subspace_dual(const TranslationSystem& H, const TranslationSystem& G,
                            const SpectralSet& E, double tol_zero = 1e-10);

// Stronger symmetric sufficient condition: every cross term vanishes globally
// and the symbol is 1 a.e. on E. Holding implies mutual V_E-duality.
Verdict check_sufficient_subspace_dual(const TranslationSystem& H, const TranslationSystem& G,
                                       const SpectralSet& E, double tol_zero = 1e-10);

// Plancherel frame for V_E: the self-dual case H = G.
Verdict check_plancherel_frame(const TranslationSystem& G, const SpectralSet& E,
                               double tol_zero = 1e-10);

// Affine subspace duality: the two-sided Calderon sum equals 1 a.e. on E and
// every dilated cross term vanishes a.e. on E - q. E must stay away from 0.
Verdict check_affine_subspace_dual(const AffineSystem& Phi, const AffineSystem& Psi,
                                   const SpectralSet& E, double tol_zero = 1e-10);

}  // namespace framecheck
