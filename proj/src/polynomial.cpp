#include "framecheck/polynomial.hpp"

namespace framecheck {

CRational Polynomial::eval(const Rational& x) const {
    CRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = CRational(acc.re * x, acc.im * x) + *it;
    }
    return acc;
}

Polynomial Polynomial::conj() const {
    std::vector<CRational> out;
    out.reserve(c_.size());
    for (const auto& coeff : c_) out.push_back(coeff.conj());
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const CRational& factor) const {
    if (factor.is_zero()) return {};
    std::vector<CRational> out;
    out.reserve(c_.size());
    for (const auto& coeff : c_) out.push_back(coeff * factor);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::compose_affine(const Rational& u, const Rational& v) const {
    // Horner in the polynomial ring: acc = acc*(u x + v) + c_k.
    Polynomial acc;
    Polynomial arg = Polynomial::linear(CRational(v), CRational(u));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * arg + Polynomial::constant(*it);
    }
    return acc;
}

Polynomial Polynomial::antiderivative() const {
    if (c_.empty()) return {};
    std::vector<CRational> out(c_.size() + 1);
    for (size_t k = 0; k < c_.size(); ++k) {
        Rational den(static_cast<long>(k + 1));
        out[k + 1] = CRational(c_[k].re / den, c_[k].im / den);
    }
    return Polynomial(std::move(out));
}

CRational Polynomial::integral(const Rational& a, const Rational& b) const {
    Polynomial f = antiderivative();
    return f.eval(b) - f.eval(a);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<CRational> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < out.size(); ++k) {
        if (k < a.c_.size()) out[k] = out[k] + a.c_[k];
        if (k < b.c_.size()) out[k] = out[k] + b.c_[k];
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<CRational> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < out.size(); ++k) {
        if (k < a.c_.size()) out[k] = out[k] + a.c_[k];
        if (k < b.c_.size()) out[k] = out[k] - b.c_[k];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<CRational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        for (size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(out));
}

}  // namespace framecheck
