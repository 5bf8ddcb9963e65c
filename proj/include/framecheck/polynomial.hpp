#pragma once

#include <vector>

#include "framecheck/rational.hpp"

namespace framecheck {

// Dense univariate polynomial over CRational. Input profiles carry degree <= 3;
// products and sums raise the degree (up to 12 in the local-integrability
// integrands), so the coefficient vector is unbounded.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<CRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const CRational& value) {
        return Polynomial(std::vector<CRational>{value});
    }
    // c0 + c1*x
    static Polynomial linear(const CRational& c0, const CRational& c1) {
        return Polynomial(std::vector<CRational>{c0, c1});
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<CRational>& coeffs() const { return c_; }

    CRational eval(const Rational& x) const;

    Polynomial conj() const;
    Polynomial scaled(const CRational& factor) const;

    // p(u*x + v), exact binomial substitution.
    Polynomial compose_affine(const Rational& u, const Rational& v) const;

    // Antiderivative with zero constant term.
    Polynomial antiderivative() const;
    // Integral over [a, b].
    CRational integral(const Rational& a, const Rational& b) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<CRational> c_;
};

}  // namespace framecheck
