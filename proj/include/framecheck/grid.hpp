#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "framecheck/interval.hpp"

namespace framecheck {

// Uniform complex samples on a d-dimensional axis-aligned grid with a shared
// step. This is the d >= 2 (and optional 1-D) representation: decisions are
// made per sample against a zero tolerance instead of per polynomial piece.
class Grid {
public:
    Grid() = default;
    Grid(std::vector<Rational> origin, Rational step, std::vector<long> shape,
         std::vector<std::complex<double>> values);

    int dim() const { return static_cast<int>(origin_.size()); }
    const std::vector<Rational>& origin() const { return origin_; }
    const Rational& step() const { return step_; }
    const std::vector<long>& shape() const { return shape_; }
    const std::vector<std::complex<double>>& values() const { return values_; }
    long size() const { return static_cast<long>(values_.size()); }

    // Value at a point: exact zero outside the grid box, sample value at a
    // grid point, error for off-grid points strictly inside the box.
    std::complex<double> eval(const std::vector<Rational>& xi) const;

    Grid conjugate() const;
    Grid scaled(std::complex<double> factor) const;

    // conj(a)(xi) * b(xi + shift). Requires equal steps and grid-aligned
    // shift/origin offsets; result lives on the overlap.
    static Grid cross_product(const Grid& a, const Grid& b, const std::vector<Rational>& shift);
    static Grid sum(const Grid& a, const Grid& b);

    bool is_zero(double tol) const;
    double max_abs() const;
    struct Witness {
        std::vector<Rational> xi;
        std::complex<double> value;
    };
    std::optional<Witness> max_abs_witness(double tol) const;

    // Smallest half-open box of cells [pt, pt + step) covering samples with
    // |value| > tol; empty box when all samples are below the tolerance.
    Box support_box(double tol) const;

    // Restrict to samples inside any of the boxes (others zeroed).
    Grid restricted(const std::vector<Box>& domain) const;
    // f - c on the domain boxes, f outside unchanged? No: the comparison
    // semantics: returns samples of (f - c) over the grid with c applied only
    // inside the domain; callers test is_zero afterwards. Grid must cover the
    // domain boxes, otherwise the uncovered part is reported via `covered`.
    Grid minus_const_on(std::complex<double> c, const std::vector<Box>& domain,
                        bool* covered) const;

    std::vector<Rational> point(long flat_index) const;
    std::optional<long> index_of(const std::vector<Rational>& xi) const;

private:
    std::vector<Rational> origin_;
    Rational step_{0};
    std::vector<long> shape_;
    std::vector<std::complex<double>> values_;
};

}  // namespace framecheck
