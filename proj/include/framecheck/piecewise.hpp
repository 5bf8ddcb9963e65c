#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "framecheck/interval.hpp"
#include "framecheck/polynomial.hpp"

namespace framecheck {

struct Piece {
    Interval iv;
    Polynomial poly;
};

// Compactly supported piecewise polynomial on the line, zero outside its
// pieces. Values are sqrt(amp_sq) * poly(xi): the square root keeps unitary
// dilation prefactors |det X|^(-1/2) exact. amp_sq is folded into the
// coefficients whenever it is a perfect square, so it is 1 on every path that
// never conjugates by a non-square dilation.
class Piecewise {
public:
    Piecewise() : amp_sq_(1) {}
    explicit Piecewise(std::vector<Piece> pieces, Rational amp_sq = Rational(1));

    static Piecewise constant_on(const Interval& iv, const CRational& value);

    const std::vector<Piece>& pieces() const { return pieces_; }
    const Rational& amplitude_sq() const { return amp_sq_; }
    bool amplitude_is_one() const { return amp_sq_ == 1; }
    bool is_zero() const { return pieces_.empty(); }

    // Exact evaluation; requires amplitude 1 (throws otherwise).
    CRational eval_exact(const Rational& xi) const;
    std::complex<double> eval(const Rational& xi) const;

    Piecewise conjugate() const;
    Piecewise scaled(const CRational& factor) const;
    // Multiplies the function by sqrt(s_sq); s_sq > 0.
    Piecewise scaled_sqrt(const Rational& s_sq) const;
    // xi -> f(xi + v)
    Piecewise shift_arg(const Rational& v) const;
    // xi -> f(u*xi), u != 0
    Piecewise scale_arg(const Rational& u) const;

    friend Piecewise operator*(const Piecewise& a, const Piecewise& b);
    // Throws std::domain_error if the two amplitudes differ by a non-square
    // ratio (cannot happen along the engine's own call paths).
    friend Piecewise operator+(const Piecewise& a, const Piecewise& b);
    friend Piecewise operator-(const Piecewise& a, const Piecewise& b);

    Piecewise restricted(const IntervalSet& domain) const;
    // (f - c) as a piecewise function on `domain` (the complement of the
    // support inside the domain contributes the constant -c).
    Piecewise minus_const_on(const CRational& c, const IntervalSet& domain) const;

    IntervalSet support() const;
    Interval support_hull() const;
    // Distance from 0 to the closed support hull; nullopt when the support is
    // empty. Zero when the closure touches 0.
    std::optional<Rational> support_distance_from_zero() const;

    // Proven upper bound for sup |f|^2 (coefficient bound per piece).
    Rational sup_bound_sq() const;

    // Exact integral of f over an interval; requires amplitude 1.
    CRational integral_exact(const Interval& over) const;

    struct Witness {
        Rational xi;
        std::complex<double> value;
        Interval piece;
        Rational value_norm_sq;  // exact |poly(xi)|^2 * amp_sq
    };
    // Deterministic nonzero witness with the largest sampled |value|; nullopt
    // for the zero function. Samples deg+2 interior points per piece, enough
    // to catch any nonzero polynomial.
    std::optional<Witness> max_abs_witness() const;

    friend bool operator==(const Piecewise& a, const Piecewise& b);

private:
    void normalize();

    std::vector<Piece> pieces_;
    Rational amp_sq_;
};

}  // namespace framecheck
