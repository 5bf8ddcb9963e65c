#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "framecheck/affine.hpp"
#include "framecheck/grammian.hpp"
#include "framecheck/verdict.hpp"

namespace framecheck {

// Cyclic-group stand-in for L^2(R), dimension 1: C^N in the frequency
// representation, bin m in [-N/2, N/2) at xi_m = m*B/N. Translation acts as
// modulation, so mixed dual Grammians assemble as exact finite sums; the only
// inexactness is floating rounding. The inner product carries the Riemann
// weight B/N, which makes diagonal entries match multiplier-symbol samples.
struct FiniteModel {
    int n = 256;
    Rational bandwidth = Rational(2);

    FiniteModel() = default;
    FiniteModel(int points, Rational band);

    Rational xi(int bin) const { return Rational(bin) * bandwidth / Rational(n); }
    int lowest_bin() const { return -n / 2; }
    double weight() const { return to_double(bandwidth) / n; }
    // Bin of a rational frequency; -1 when off-grid or out of band.
    int bin_of(const Rational& freq) const;
};

// One generator with its translation subgroup: `period` distinct translates
// (modulations e^{-2 pi i m z / period}), i.e. sample step N/period.
struct FiniteGen {
    long period = 1;
    Eigen::VectorXcd freq;
};

struct FiniteSystem {
    std::vector<FiniteGen> gens;

    long total_vectors() const;
};

// Samples a profile at the model bins; throws when the support exceeds the
// band (aliasing is never silent).
Eigen::VectorXcd sample_model(const Profile& gen, const FiniteModel& model);

// Translation system -> finite system: continuum lattice c maps to sample
// step c*B (must divide N integrally).
FiniteSystem make_finite_system(const TranslationSystem& sys, const FiniteModel& model);

// Affine system -> finite system with one generator per live scale. Scales
// whose dilated support leaves the band contribute zero and stop the range;
// a support straddling the band edge throws (partial aliasing). `quasi`
// switches the negative scales to the renormalized convention.
FiniteSystem make_affine_finite_system(const AffineSystem& sys, const FiniteModel& model,
                                       bool quasi);

// Theta = sum_p sum_z w <., T_z h_p> T_z g_p as a dense N x N matrix
// (analysis H, synthesis G).
Eigen::MatrixXcd assemble_grammian(const FiniteSystem& H, const FiniteSystem& G,
                                   const FiniteModel& model);

// Cross-lattice operator sum_p sum_k <., T_{c k} g_p> T_{d k} h_p with the
// shared index k running over one period of the pair.
Eigen::MatrixXcd assemble_cross_lattice(const FiniteSystem& G, const FiniteSystem& H,
                                        const FiniteModel& model);

double operator_norm(const Eigen::MatrixXcd& m);

// Modulation matrix of a translation by `samples` (frequency representation).
Eigen::MatrixXcd translation_matrix(const FiniteModel& model, long samples);

// Model dilation pair for an integer factor a >= 2: D maps bin m to a*m
// (definition D = sqrt(a) * upsample), its inverse reads bin a*m. On
// band-aligned vectors these compose exactly with the affine level maps.
Eigen::MatrixXcd model_dilation(const FiniteModel& model, long a);
Eigen::MatrixXcd model_dilation_inverse(const FiniteModel& model, long a);

// Affine block over scales n in [n_lo, n_hi] (analysis Psi, synthesis Phi,
// each with its own dilation).
Eigen::MatrixXcd assemble_affine_block(const AffineSystem& Psi, const AffineSystem& Phi,
                                       const FiniteModel& model, int n_lo, int n_hi);

struct MultiplierTest {
    double offdiag_max = 0.0;               // largest off-diagonal magnitude
    Eigen::VectorXcd diagonal;
};
MultiplierTest multiplier_test(const Eigen::MatrixXcd& theta, const FiniteModel& model);

// Finite-model upper frame bound: largest eigenvalue of the self-Grammian.
double bessel_bound(const FiniteSystem& sys, const FiniteModel& model);

// w_f(x) = <Theta T_x f, T_x f> over all N cyclic shifts; complex-valued for
// mixed Grammians, constant exactly when Theta is diagonal.
Eigen::VectorXcd translation_wobble(const Eigen::MatrixXcd& theta, const Eigen::VectorXcd& f,
                                    const FiniteModel& model);

struct ProjectionSplit {
    double b_norm = 0.0;  // ||P Theta Pperp||
    double c_norm = 0.0;  // ||Pperp Theta P||
    bool commutes = false;
};
ProjectionSplit projection_split_test(const Eigen::MatrixXcd& theta,
                                      const Eigen::VectorXd& p_diag, double tol);

struct RoundtripResult {
    double v_err = 0.0;
    double w_err = 0.0;
    bool preconditions_ok = true;
    std::string detail;
};
// Encode v and w with the joint coefficients <v,x_j> + <w,y_j> and decode with
// each synthesis family. Errors stay at rounding level exactly when the two
// systems are Parseval on their ranges and mutually orthogonal; precondition
// defects are measured and reported, not assumed.
RoundtripResult multiaccess_roundtrip(const FiniteSystem& X, const FiniteSystem& Y,
                                      const Eigen::VectorXcd& v, const Eigen::VectorXcd& w,
                                      const FiniteModel& model);

// || Theta_{Y+Z,X} - I ||: a dual plus an orthogonal perturbation stays dual.
Verdict dual_parametrization_check(const FiniteSystem& X, const FiniteSystem& Y_dual,
                                   const FiniteSystem& Z_orth, const FiniteModel& model,
                                   double tol = 1e-10);

// || assemble(H,G)^* - assemble(G,H) ||: the adjoint identity.
double adjoint_check(const FiniteSystem& H, const FiniteSystem& G, const FiniteModel& model);

// Identity off the DC bin, per direct-sum component: the finite analogue of
// "Parseval frame" for dilation systems (the orbit of xi = 0 is degenerate).
Eigen::MatrixXcd identity_off_dc(const FiniteModel& model);

// Self-Grammian of the direct-sum system on C^N + ... + C^N for equal-dilation
// components psi_i (scales and translates are shared across blocks).
Eigen::MatrixXcd assemble_superwavelet_grammian(const std::vector<AffineSystem>& components,
                                                const FiniteModel& model, bool quasi);

// ||Theta_super - blkdiag(I_offdc)||.
double superwavelet_parseval_defect(const std::vector<AffineSystem>& components,
                                    const FiniteModel& model, bool quasi);

}  // namespace framecheck
