#include "framecheck/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace framecheck {

namespace {

// Collect the sorted distinct breakpoints of both operands.
std::vector<Rational> breakpoints(const Piecewise& a, const Piecewise& b) {
    std::vector<Rational> cuts;
    for (const auto& p : a.pieces()) {
        cuts.push_back(p.iv.lo);
        cuts.push_back(p.iv.hi);
    }
    for (const auto& p : b.pieces()) {
        cuts.push_back(p.iv.lo);
        cuts.push_back(p.iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

const Polynomial* piece_at(const std::vector<Piece>& pieces, const Rational& x) {
    for (const auto& p : pieces) {
        if (p.iv.contains(x)) return &p.poly;
        if (p.iv.lo > x) break;
    }
    return nullptr;
}

}  // namespace

Piecewise::Piecewise(std::vector<Piece> pieces, Rational amp_sq)
    : pieces_(std::move(pieces)), amp_sq_(std::move(amp_sq)) {
    if (amp_sq_ <= 0) throw std::invalid_argument("amplitude must be positive");
    normalize();
}

Piecewise Piecewise::constant_on(const Interval& iv, const CRational& value) {
    if (iv.empty() || value.is_zero()) return {};
    return Piecewise({Piece{iv, Polynomial::constant(value)}});
}

void Piecewise::normalize() {
    pieces_.erase(std::remove_if(pieces_.begin(), pieces_.end(),
                                 [](const Piece& p) { return p.iv.empty() || p.poly.is_zero(); }),
                  pieces_.end());
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.iv.lo < b.iv.lo; });
    for (size_t i = 0; i + 1 < pieces_.size(); ++i) {
        if (pieces_[i].iv.hi > pieces_[i + 1].iv.lo)
            throw std::invalid_argument("overlapping pieces");
    }
    // Merge touching pieces that continue with the same polynomial.
    std::vector<Piece> merged;
    for (auto& p : pieces_) {
        if (!merged.empty() && merged.back().iv.hi == p.iv.lo && merged.back().poly == p.poly) {
            merged.back().iv.hi = p.iv.hi;
        } else {
            merged.push_back(std::move(p));
        }
    }
    pieces_ = std::move(merged);
    if (pieces_.empty()) {
        amp_sq_ = 1;
        return;
    }
    if (amp_sq_ != 1) {
        Rational root;
        if (perfect_square(amp_sq_, &root)) {
            for (auto& p : pieces_) p.poly = p.poly.scaled(CRational(root));
            amp_sq_ = 1;
        }
    }
}

CRational Piecewise::eval_exact(const Rational& xi) const {
    if (amp_sq_ != 1)
        throw std::domain_error("eval_exact: irrational amplitude " + format_rational(amp_sq_));
    const Polynomial* poly = piece_at(pieces_, xi);
    return poly ? poly->eval(xi) : CRational();
}

std::complex<double> Piecewise::eval(const Rational& xi) const {
    const Polynomial* poly = piece_at(pieces_, xi);
    if (!poly) return {0.0, 0.0};
    std::complex<double> v = poly->eval(xi).to_complex();
    if (amp_sq_ != 1) v *= std::sqrt(to_double(amp_sq_));
    return v;
}

Piecewise Piecewise::conjugate() const {
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back({p.iv, p.poly.conj()});
    return Piecewise(std::move(out), amp_sq_);
}

Piecewise Piecewise::scaled(const CRational& factor) const {
    if (factor.is_zero()) return {};
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) out.push_back({p.iv, p.poly.scaled(factor)});
    return Piecewise(std::move(out), amp_sq_);
}

Piecewise Piecewise::scaled_sqrt(const Rational& s_sq) const {
    if (s_sq <= 0) throw std::invalid_argument("scaled_sqrt: factor must be positive");
    return Piecewise(pieces_, Rational(amp_sq_ * s_sq));
}

Piecewise Piecewise::shift_arg(const Rational& v) const {
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        out.push_back({p.iv.shifted(-v), p.poly.compose_affine(Rational(1), v)});
    }
    return Piecewise(std::move(out), amp_sq_);
}

Piecewise Piecewise::scale_arg(const Rational& u) const {
    if (u == 0) throw std::invalid_argument("scale_arg: zero scale");
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        out.push_back({p.iv.scaled_arg(u), p.poly.compose_affine(u, Rational(0))});
    }
    return Piecewise(std::move(out), amp_sq_);
}

Piecewise operator*(const Piecewise& a, const Piecewise& b) {
    std::vector<Piece> out;
    auto ia = a.pieces_.begin();
    auto ib = b.pieces_.begin();
    while (ia != a.pieces_.end() && ib != b.pieces_.end()) {
        Interval common = Interval::intersect(ia->iv, ib->iv);
        if (!common.empty()) out.push_back({common, ia->poly * ib->poly});
        if (ia->iv.hi <= ib->iv.hi) {
            ++ia;
        } else {
            ++ib;
        }
    }
    return Piecewise(std::move(out), Rational(a.amp_sq_ * b.amp_sq_));
}

Piecewise operator+(const Piecewise& a, const Piecewise& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Piecewise lhs = a;
    Piecewise rhs = b;
    if (lhs.amp_sq_ != rhs.amp_sq_) {
        Rational ratio = lhs.amp_sq_ / rhs.amp_sq_;
        Rational root;
        if (!perfect_square(ratio, &root))
            throw std::domain_error("sum of functions with incommensurable amplitudes");
        // sqrt(amp_a) = root * sqrt(amp_b): rescale lhs onto rhs's amplitude.
        for (auto& p : lhs.pieces_) p.poly = p.poly.scaled(CRational(root));
        lhs.amp_sq_ = rhs.amp_sq_;
    }
    std::vector<Piece> out;
    std::vector<Rational> cuts = breakpoints(lhs, rhs);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Interval cell(cuts[i], cuts[i + 1]);
        const Polynomial* pa = piece_at(lhs.pieces_, cell.lo);
        const Polynomial* pb = piece_at(rhs.pieces_, cell.lo);
        Polynomial sum;
        if (pa) sum = sum + *pa;
        if (pb) sum = sum + *pb;
        if (!sum.is_zero()) out.push_back({cell, std::move(sum)});
    }
    return Piecewise(std::move(out), lhs.amp_sq_);
}

Piecewise operator-(const Piecewise& a, const Piecewise& b) {
    return a + b.scaled(CRational(Rational(-1)));
}

Piecewise Piecewise::restricted(const IntervalSet& domain) const {
    std::vector<Piece> out;
    for (const auto& p : pieces_) {
        for (const auto& window : domain.parts()) {
            Interval common = Interval::intersect(p.iv, window);
            if (!common.empty()) out.push_back({common, p.poly});
        }
    }
    return Piecewise(std::move(out), amp_sq_);
}

Piecewise Piecewise::minus_const_on(const CRational& c, const IntervalSet& domain) const {
    if (c.is_zero()) return restricted(domain);
    if (amp_sq_ != 1)
        throw std::domain_error("minus_const_on: irrational amplitude");
    std::vector<Rational> cuts;
    for (const auto& iv : domain.parts()) {
        cuts.push_back(iv.lo);
        cuts.push_back(iv.hi);
    }
    for (const auto& p : pieces_) {
        cuts.push_back(p.iv.lo);
        cuts.push_back(p.iv.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Piece> out;
    Polynomial minus_c = Polynomial::constant(-c);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Interval cell(cuts[i], cuts[i + 1]);
        if (!domain.contains(cell.lo)) continue;
        const Polynomial* poly = piece_at(pieces_, cell.lo);
        Polynomial diff = poly ? (*poly + minus_c) : minus_c;
        if (!diff.is_zero()) out.push_back({cell, std::move(diff)});
    }
    return Piecewise(std::move(out));
}

IntervalSet Piecewise::support() const {
    std::vector<Interval> parts;
    parts.reserve(pieces_.size());
    for (const auto& p : pieces_) parts.push_back(p.iv);
    return IntervalSet(std::move(parts));
}

Interval Piecewise::support_hull() const {
    if (pieces_.empty()) return {};
    return {pieces_.front().iv.lo, pieces_.back().iv.hi};
}

std::optional<Rational> Piecewise::support_distance_from_zero() const {
    if (pieces_.empty()) return std::nullopt;
    Rational best(-1);
    for (const auto& p : pieces_) {
        Rational dist(0);
        if (p.iv.lo > 0) {
            dist = p.iv.lo;
        } else if (p.iv.hi < 0) {
            dist = -p.iv.hi;
        } else {
            return Rational(0);  // closure of [lo, hi) touches 0
        }
        if (best < 0 || dist < best) best = dist;
    }
    return best;
}

Rational Piecewise::sup_bound_sq() const {
    Rational best(0);
    for (const auto& p : pieces_) {
        Rational m = std::max(rational_abs(p.iv.lo), rational_abs(p.iv.hi));
        Rational bound(0);
        Rational power(1);
        for (const auto& coeff : p.poly.coeffs()) {
            bound += (rational_abs(coeff.re) + rational_abs(coeff.im)) * power;
            power *= m;
        }
        Rational sq = bound * bound;
        if (sq > best) best = sq;
    }
    return best * amp_sq_;
}

CRational Piecewise::integral_exact(const Interval& over) const {
    if (amp_sq_ != 1) throw std::domain_error("integral_exact: irrational amplitude");
    CRational total;
    for (const auto& p : pieces_) {
        Interval common = Interval::intersect(p.iv, over);
        if (common.empty()) continue;
        total = total + p.poly.integral(common.lo, common.hi);
    }
    return total;
}

std::optional<Piecewise::Witness> Piecewise::max_abs_witness() const {
    std::optional<Witness> best;
    double amp = std::sqrt(to_double(amp_sq_));
    for (const auto& p : pieces_) {
        int samples = p.poly.degree() + 2;
        Rational width = p.iv.hi - p.iv.lo;
        for (int k = 1; k <= samples; ++k) {
            Rational xi = p.iv.lo + width * rational(k, samples + 1);
            CRational value = p.poly.eval(xi);
            Rational norm_sq = value.norm_sq() * amp_sq_;
            if (norm_sq == 0) continue;
            if (!best || norm_sq > best->value_norm_sq) {
                best = Witness{xi, value.to_complex() * amp, p.iv, norm_sq};
            }
        }
    }
    return best;
}

bool operator==(const Piecewise& a, const Piecewise& b) {
    return a.amp_sq_ == b.amp_sq_ && [&] {
        if (a.pieces_.size() != b.pieces_.size()) return false;
        for (size_t i = 0; i < a.pieces_.size(); ++i) {
            if (!(a.pieces_[i].iv == b.pieces_[i].iv) || a.pieces_[i].poly != b.pieces_[i].poly)
                return false;
        }
        return true;
    }();
}

}  // namespace framecheck
