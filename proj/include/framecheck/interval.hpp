#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framecheck/rational.hpp"

namespace framecheck {

// Half-open rational interval [lo, hi). Half-open throughout the project:
// partitions have no double-counted endpoints and measure-zero overlaps of
// shifted supports are literally empty.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    bool empty() const { return lo >= hi; }
    Rational length() const { return empty() ? Rational(0) : Rational(hi - lo); }
    bool contains(const Rational& x) const { return lo <= x && x < hi; }

    Interval shifted(const Rational& v) const { return {lo + v, hi + v}; }
    // Preimage orientation: {x : u*x in [lo, hi)} stored as [min, max).
    // For u < 0 the true preimage is (hi/u, lo/u]; the half-open stand-in
    // differs only at the two endpoints, which carry no measure.
    Interval scaled_arg(const Rational& u) const;
    // Image {u*x : x in [lo, hi)}, same endpoint convention for u < 0.
    Interval scaled(const Rational& u) const;

    static Interval intersect(const Interval& a, const Interval& b) {
        return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    }
    static Interval hull(const Interval& a, const Interval& b);

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }

    std::string str() const;
};

// [a.lo - b.hi, a.hi - b.lo): covers {u - v : u in a, v in b}.
Interval minkowski_diff(const Interval& a, const Interval& b);

// Sorted, pairwise-disjoint, non-empty list of intervals.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> parts);

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool contains(const Rational& x) const;
    Rational measure() const;
    Interval hull() const;

    IntervalSet intersect(const Interval& window) const;
    IntervalSet intersect(const IntervalSet& other) const;
    // Set difference this \ other.
    IntervalSet subtract(const IntervalSet& other) const;
    IntervalSet shifted(const Rational& v) const;

private:
    std::vector<Interval> parts_;
};

// Axis-aligned half-open box in dimension d (possibly d = 1).
struct Box {
    std::vector<Interval> sides;

    Box() = default;
    explicit Box(std::vector<Interval> s) : sides(std::move(s)) {}
    static Box of(const Interval& iv) { return Box(std::vector<Interval>{iv}); }

    int dim() const { return static_cast<int>(sides.size()); }
    bool empty() const;
    bool contains(const std::vector<Rational>& point) const;
    std::string str() const;
};

Box box_intersect(const Box& a, const Box& b);
Box box_minkowski_diff(const Box& a, const Box& b);
Box box_hull(const Box& a, const Box& b);

// Exact list of integer points inside a half-open box, lexicographic order.
std::vector<std::vector<Rational>> integer_points(const Box& box);

// Same with every side treated as closed [lo, hi]; used for candidate
// enumeration from bounding boxes whose suprema may be attained.
std::vector<std::vector<Rational>> integer_points_closed(const Box& box);

}  // namespace framecheck
