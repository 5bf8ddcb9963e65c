#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framecheck/grammian.hpp"

namespace framecheck {

// Dilates-then-translates system: { D_A^n T_{Xz} psi_i }. The quasi-affine
// convention translates after renormalized dilates at negative scales, which
// makes the system shift invariant; the equal-dilation conditions below are
// the same for both conventions, so the flag is carried as metadata.
struct AffineSystem {
    enum class Convention { Affine, QuasiAffine };

    DilationMatrix dilation;
    RMatrix translation;  // X; identity unless stated
    std::vector<Profile> gens;
    Convention convention = Convention::Affine;

    AffineSystem() = default;
    AffineSystem(DilationMatrix a, std::vector<Profile> psi,
                 Convention conv = Convention::Affine);
    AffineSystem(DilationMatrix a, RMatrix x, std::vector<Profile> psi,
                 Convention conv = Convention::Affine);

    int dim() const { return dilation.dim(); }
    size_t generator_count() const { return gens.size(); }

    static AffineSystem dyadic(Profile psi) {
        return AffineSystem(DilationMatrix::scalar(rational(2)), {std::move(psi)});
    }
};

// The symmetric annulus +-[1, |a|) whose dilates tile R \ {0}; the canonical
// window for dilation-periodic identities.
std::vector<Interval> fundamental_annulus(const DilationMatrix& a);

// sum_i sum_{j>=0} conj(f_i(A^j xi)) g_i(A^j(xi + q)) with the j-sum made
// exactly finite by support arithmetic. q must lie outside A^* Z^d (and be
// nonzero). Both systems must share the dilation and have X = I.
Profile affine_cross_term(const AffineSystem& F, const AffineSystem& G,
                          const std::vector<Rational>& q);

// s(xi) = sum_i sum_{j in Z} conj(f_i(A^j xi)) g_i(A^j xi) on the window;
// satisfies s(A xi) = s(xi), so the window determines the symbol a.e.
Profile calderon_mixed_symbol(const AffineSystem& F, const AffineSystem& G,
                              const std::vector<Interval>& window);
Profile calderon_mixed_symbol(const AffineSystem& F, const AffineSystem& G);

// Equal-dilation orthogonality (an iff, affine and quasi-affine alike):
// every dilated cross term vanishes and the Calderon sum vanishes.
Verdict check_affine_orthogonality(const AffineSystem& Psi, const AffineSystem& Phi,
                                   double tol_zero = 1e-10);

// Tests whether the mixed Grammian operators of the affine and quasi-affine
// pairs coincide and commute with integer translations (all dilated cross
// terms vanish); when they do, both are Fourier multipliers with the shared
// Calderon symbol, returned on the fundamental annulus.
struct AqeClassification {
    bool commutant_holds = false;
    std::optional<Profile> symbol;
    Verdict detail;
};
AqeClassification classify_aqe(const AffineSystem& Psi, const AffineSystem& Phi,
                               double tol_zero = 1e-10);

// Different dilations (quasi-affine, an iff): condition 1 is the pure
// translation condition at scale 0, condition 2 sums the j > 0 levels with
// per-system dilations. Conjugates by X / Y internally; X^-1 A X must be an
// integer matrix and the conjugated dilations must differ.
Verdict check_quasi_affine_orthogonality(const AffineSystem& Psi, const AffineSystem& Phi,
                                         double tol_zero = 1e-10);

// Sufficient condition for orthogonality with arbitrary (A, X) vs (B, Y):
// sum_i conj(psi_i(X' xi)) phi_i(Y'(xi + k)) == 0 a.e. for all integer k.
// The verdict is marked uncharacterized: failure leaves orthogonality open.
Verdict check_affine_sufficient(const AffineSystem& Psi, const AffineSystem& Phi,
                                double tol_zero = 1e-10);

// Joint system of component pairs (A_i, psi_i): Parseval property of the
// direct-sum system. Equal dilations use the two families of equations
// (Calderon deltas and dilated cross terms); distinct dilations require each
// component to be Parseval on its own and apply the pairwise cross conditions
// of the quasi-affine corollary.
Verdict check_parseval_superwavelet(const std::vector<AffineSystem>& systems,
                                    double tol_zero = 1e-10);

// D_X-conjugation: returns the X = I system with dilation X^-1 A X and
// generators |det X|^(-1/2) g(X' .); inverse of itself under X^-1.
AffineSystem conjugate_system(const AffineSystem& sys);

}  // namespace framecheck
