#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace framecheck {

// All lattice and profile arithmetic runs over exact rationals; floating
// point appears only at evaluation boundaries (reports, the oracle).
using Rational = mpq_class;

// Parses "p/q" or "p" (base 10). Throws std::invalid_argument on malformed
// input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& value);

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

mpz_class rational_floor(const Rational& value);
mpz_class rational_ceil(const Rational& value);

inline Rational rational_abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

// True when |value| is the square of a rational; writes the nonnegative root.
bool perfect_square(const Rational& value, Rational* root);

// Complex number with rational real and imaginary parts. Closed under the
// profile algebra (products, sums, affine substitution), so exact-mode
// identities stay decidable.
struct CRational {
    Rational re;
    Rational im;

    CRational() : re(0), im(0) {}
    CRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    CRational(long r) : re(r), im(0) {}                 // NOLINT(google-explicit-constructor)
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRational conj() const { return {re, Rational(-im)}; }
    Rational norm_sq() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    friend CRational operator+(const CRational& a, const CRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend CRational operator-(const CRational& a, const CRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }
};

std::string format_crational(const CRational& value);

// Lexicographic comparison helpers for deterministic ordering of reports.
int compare(const Rational& a, const Rational& b);
int compare(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace framecheck
