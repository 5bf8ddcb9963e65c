#pragma once

#include <string>
#include <utility>
#include <vector>

#include "framecheck/grid.hpp"
#include "framecheck/piecewise.hpp"

namespace framecheck {

enum class Mode { Exact, Sampled };

// A generator seen through its Fourier transform: compact support, either an
// exact piecewise polynomial (dimension 1) or grid samples (any dimension).
// The same type carries multiplier symbols and cross terms.
class Profile {
public:
    Profile() : dim_(1), mode_(Mode::Exact) {}

    static Profile exact(Piecewise pw);
    static Profile sampled(Grid grid);

    int dim() const { return dim_; }
    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::Exact; }

    const Piecewise& piecewise() const;
    const Grid& grid() const;

    // Pointwise value; exact arithmetic inside exact mode.
    std::complex<double> eval(const std::vector<Rational>& xi) const;
    std::complex<double> eval1(const Rational& xi) const { return eval({xi}); }

    bool is_zero(double tol_zero) const;
    // Compact support bounded away from zero (class D membership); exact in
    // exact mode, tolerance-based support detection in sampled mode.
    bool in_class_d(double tol_zero = 1e-10) const;
    double sup_bound() const;

    // Half-open covering box of the support (empty for the zero profile).
    Box support_box(double tol_zero = 1e-10) const;

    // conj(a)(xi) * b(xi + shift), scaled by `weight`.
    static Profile cross_product(const Profile& a, const Profile& b,
                                 const std::vector<Rational>& shift, const Rational& weight);
    static Profile sum(const Profile& a, const Profile& b);
    Profile scaled(const Rational& factor) const;

    struct Witness {
        std::vector<Rational> xi;
        std::complex<double> value;
        std::string where;
    };
    std::optional<Witness> max_abs_witness(double tol_zero) const;

private:
    int dim_;
    Mode mode_;
    Piecewise pw_;
    Grid grid_;
};

// ---- built-in constructions ----------------------------------------------

Profile make_characteristic(const Rational& lo, const Rational& hi,
                            const CRational& value = CRational(Rational(1)));
// chi_[-1/2, 1/2)
Profile make_shannon_band();
// chi on [-1/2,-1/4) u [1/4,1/2): the spectral Shannon wavelet.
Profile make_shannon_wavelet();
// Symmetric nonnegative bump psi^(xi) = r(|xi|/c) - r(|xi|/(a c)) with r the
// linear ramp 0->1 on [1, a]; supported on +-[c, a^2 c] and
// sum_j psi^(a^j xi) = 1 for xi != 0 by telescoping. Requires a > 1, c > 0.
Profile make_frazier_jawerth(const Rational& a, const Rational& c);
// 1 on [-inner, inner], linear ramps to 0 at +-outer, supported [-outer, outer].
Profile make_plateau(const Rational& inner, const Rational& outer);
// (psi, phi) with psi the plateau(1/4, 1/2) and phi^ = psi^(.) + psi^(. - 1).
std::pair<Profile, Profile> make_bidual_pair();

// Name-dispatched construction; "bidual_pair" yields two profiles, the other
// names one. Throws std::invalid_argument for unknown names or bad parameters.
std::vector<Profile> build_named_profile(const std::string& name,
                                         const std::vector<Rational>& params);

// ---- support arithmetic ---------------------------------------------------

// All integers j with M^j(window) meeting supp(gen). Requires |scale| > 1 and
// gen in class D; the window's closure must avoid 0 (otherwise the range is
// infinite on one side). 1-D exact mode.
std::vector<int> dilate_index_range(const Profile& gen, const Rational& scale,
                                    const Interval& window);

// Bounding box of {u - v : u in supp(a), v in supp(b)}; shifts outside force
// conj(b^(xi)) a^(xi + shift) to vanish identically.
Box support_difference(const Profile& a, const Profile& b, double tol_zero = 1e-10);

}  // namespace framecheck
