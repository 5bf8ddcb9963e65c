#include "framecheck/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace framecheck {

Interval Interval::scaled_arg(const Rational& u) const {
    if (u == 0) throw std::invalid_argument("scaled_arg: zero scale");
    Rational a = lo / u;
    Rational b = hi / u;
    if (u > 0) return {a, b};
    return {b, a};
}

Interval Interval::scaled(const Rational& u) const {
    if (u == 0) throw std::invalid_argument("scaled: zero scale");
    Rational a = lo * u;
    Rational b = hi * u;
    if (u > 0) return {a, b};
    return {b, a};
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::string Interval::str() const {
    return "[" + format_rational(lo) + ", " + format_rational(hi) + ")";
}

Interval minkowski_diff(const Interval& a, const Interval& b) {
    if (a.empty() || b.empty()) return {};
    return {a.lo - b.hi, a.hi - b.lo};
}

IntervalSet::IntervalSet(std::vector<Interval> parts) {
    parts.erase(std::remove_if(parts.begin(), parts.end(),
                               [](const Interval& iv) { return iv.empty(); }),
                parts.end());
    std::sort(parts.begin(), parts.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    // Merge touching/overlapping parts.
    for (const auto& iv : parts) {
        if (!parts_.empty() && iv.lo <= parts_.back().hi) {
            parts_.back().hi = std::max(parts_.back().hi, iv.hi);
        } else {
            parts_.push_back(iv);
        }
    }
}

bool IntervalSet::contains(const Rational& x) const {
    for (const auto& iv : parts_) {
        if (iv.contains(x)) return true;
        if (iv.lo > x) break;
    }
    return false;
}

Rational IntervalSet::measure() const {
    Rational total(0);
    for (const auto& iv : parts_) total += iv.length();
    return total;
}

Interval IntervalSet::hull() const {
    if (parts_.empty()) return {};
    return {parts_.front().lo, parts_.back().hi};
}

IntervalSet IntervalSet::intersect(const Interval& window) const {
    std::vector<Interval> out;
    for (const auto& iv : parts_) out.push_back(Interval::intersect(iv, window));
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const auto& iv : parts_) {
        for (const auto& jv : other.parts_) {
            out.push_back(Interval::intersect(iv, jv));
        }
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const auto& iv : parts_) {
        std::vector<Interval> remaining{iv};
        for (const auto& cut : other.parts_) {
            std::vector<Interval> next;
            for (const auto& piece : remaining) {
                Interval mid = Interval::intersect(piece, cut);
                if (mid.empty()) {
                    next.push_back(piece);
                    continue;
                }
                next.emplace_back(piece.lo, mid.lo);
                next.emplace_back(mid.hi, piece.hi);
            }
            remaining = std::move(next);
        }
        for (auto& piece : remaining) out.push_back(std::move(piece));
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::shifted(const Rational& v) const {
    std::vector<Interval> out;
    out.reserve(parts_.size());
    for (const auto& iv : parts_) out.push_back(iv.shifted(v));
    return IntervalSet(std::move(out));
}

bool Box::empty() const {
    if (sides.empty()) return true;
    for (const auto& iv : sides) {
        if (iv.empty()) return true;
    }
    return false;
}

bool Box::contains(const std::vector<Rational>& point) const {
    if (point.size() != sides.size()) return false;
    for (size_t i = 0; i < sides.size(); ++i) {
        if (!sides[i].contains(point[i])) return false;
    }
    return true;
}

std::string Box::str() const {
    std::string out = "(";
    for (size_t i = 0; i < sides.size(); ++i) {
        if (i) out += " x ";
        out += sides[i].str();
    }
    return out + ")";
}

Box box_intersect(const Box& a, const Box& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("box_intersect: dimension mismatch");
    Box out;
    out.sides.reserve(a.sides.size());
    for (size_t i = 0; i < a.sides.size(); ++i) {
        out.sides.push_back(Interval::intersect(a.sides[i], b.sides[i]));
    }
    return out;
}

Box box_minkowski_diff(const Box& a, const Box& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("box_minkowski_diff: dimension mismatch");
    Box out;
    out.sides.reserve(a.sides.size());
    for (size_t i = 0; i < a.sides.size(); ++i) {
        out.sides.push_back(minkowski_diff(a.sides[i], b.sides[i]));
    }
    return out;
}

Box box_hull(const Box& a, const Box& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.dim() != b.dim()) throw std::invalid_argument("box_hull: dimension mismatch");
    Box out;
    out.sides.reserve(a.sides.size());
    for (size_t i = 0; i < a.sides.size(); ++i) {
        out.sides.push_back(Interval::hull(a.sides[i], b.sides[i]));
    }
    return out;
}

namespace {

std::vector<std::vector<Rational>> enumerate_lattice(const Box& box, bool closed) {
    std::vector<std::vector<Rational>> out;
    int d = box.dim();
    if (d == 0) return out;
    std::vector<mpz_class> first(d), last(d), cur(d);
    for (int i = 0; i < d; ++i) {
        if (closed) {
            if (box.sides[i].lo > box.sides[i].hi) return out;
            first[i] = rational_ceil(box.sides[i].lo);
            last[i] = rational_floor(box.sides[i].hi);
        } else {
            if (box.sides[i].empty()) return out;
            first[i] = rational_ceil(box.sides[i].lo);
            // Largest k < hi; an integer hi is excluded when half-open.
            last[i] = rational_ceil(box.sides[i].hi) - 1;
        }
        if (first[i] > last[i]) return out;
        cur[i] = first[i];
    }
    while (true) {
        std::vector<Rational> pt;
        pt.reserve(d);
        for (int i = 0; i < d; ++i) pt.emplace_back(cur[i]);
        out.push_back(std::move(pt));
        int axis = d - 1;
        while (axis >= 0) {
            cur[axis] += 1;
            if (cur[axis] <= last[axis]) break;
            cur[axis] = first[axis];
            --axis;
        }
        if (axis < 0) break;
    }
    return out;
}

}  // namespace

std::vector<std::vector<Rational>> integer_points(const Box& box) {
    return enumerate_lattice(box, /*closed=*/false);
}

std::vector<std::vector<Rational>> integer_points_closed(const Box& box) {
    return enumerate_lattice(box, /*closed=*/true);
}

}  // namespace framecheck
