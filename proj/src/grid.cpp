#include "framecheck/grid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace framecheck {

namespace {

long flatten(const std::vector<long>& shape, const std::vector<long>& idx) {
    long flat = 0;
    for (size_t i = 0; i < shape.size(); ++i) flat = flat * shape[i] + idx[i];
    return flat;
}

bool next_index(const std::vector<long>& shape, std::vector<long>& idx) {
    int axis = static_cast<int>(shape.size()) - 1;
    while (axis >= 0) {
        if (++idx[axis] < shape[axis]) return true;
        idx[axis] = 0;
        --axis;
    }
    return false;
}

}  // namespace

Grid::Grid(std::vector<Rational> origin, Rational step, std::vector<long> shape,
           std::vector<std::complex<double>> values)
    : origin_(std::move(origin)), step_(std::move(step)), shape_(std::move(shape)),
      values_(std::move(values)) {
    if (step_ <= 0) throw std::invalid_argument("grid step must be positive");
    if (origin_.size() != shape_.size()) throw std::invalid_argument("grid shape mismatch");
    long total = 1;
    for (long s : shape_) {
        if (s <= 0) throw std::invalid_argument("grid shape must be positive");
        total *= s;
    }
    if (total != static_cast<long>(values_.size()))
        throw std::invalid_argument("grid value count mismatch");
}

std::optional<long> Grid::index_of(const std::vector<Rational>& xi) const {
    if (static_cast<int>(xi.size()) != dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<long> idx(origin_.size());
    for (size_t i = 0; i < origin_.size(); ++i) {
        Rational offset = (xi[i] - origin_[i]) / step_;
        if (!is_integer(offset)) return std::nullopt;
        mpz_class k = offset.get_num();
        if (k < 0 || k >= shape_[i]) return std::nullopt;
        idx[i] = k.get_si();
    }
    return flatten(shape_, idx);
}

std::complex<double> Grid::eval(const std::vector<Rational>& xi) const {
    if (static_cast<int>(xi.size()) != dim()) throw std::invalid_argument("dimension mismatch");
    bool inside = true;
    for (size_t i = 0; i < origin_.size(); ++i) {
        Rational top = origin_[i] + step_ * Rational(shape_[i]);
        if (xi[i] < origin_[i] || xi[i] >= top) inside = false;
    }
    if (!inside) return {0.0, 0.0};
    auto idx = index_of(xi);
    if (!idx) throw std::invalid_argument("point is off-grid");
    return values_[*idx];
}

Grid Grid::conjugate() const {
    Grid out = *this;
    for (auto& v : out.values_) v = std::conj(v);
    return out;
}

Grid Grid::scaled(std::complex<double> factor) const {
    Grid out = *this;
    for (auto& v : out.values_) v *= factor;
    return out;
}

Grid Grid::cross_product(const Grid& a, const Grid& b, const std::vector<Rational>& shift) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    if (static_cast<int>(shift.size()) != a.dim()) throw std::invalid_argument("shift dimension");
    if (a.step_ != b.step_) throw std::invalid_argument("incompatible grid steps");
    // Result at xi: conj(a(xi)) * b(xi + shift). Offsets must be grid-aligned.
    std::vector<long> off(a.dim());
    std::vector<long> lo(a.dim()), hi(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        Rational rel = (b.origin_[i] - shift[i] - a.origin_[i]) / a.step_;
        if (!is_integer(rel))
            throw std::invalid_argument("shift is not aligned with the sample grid");
        long r = static_cast<long>(rel.get_num().get_si());
        // a index range where both factors are defined: 0 <= ia < a.shape and
        // 0 <= ia - r < b.shape.
        lo[i] = std::max(0L, r);
        hi[i] = std::min(a.shape_[i], b.shape_[i] + r);
        if (lo[i] >= hi[i]) return {};
        off[i] = r;
    }
    std::vector<Rational> origin(a.dim());
    std::vector<long> shape(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        origin[i] = a.origin_[i] + a.step_ * Rational(lo[i]);
        shape[i] = hi[i] - lo[i];
    }
    long total = 1;
    for (long s : shape) total *= s;
    std::vector<std::complex<double>> values(total);
    std::vector<long> idx(a.dim(), 0);
    long flat = 0;
    do {
        std::vector<long> ia(a.dim()), ib(a.dim());
        for (int i = 0; i < a.dim(); ++i) {
            ia[i] = idx[i] + lo[i];
            ib[i] = ia[i] - off[i];
        }
        values[flat++] = std::conj(a.values_[flatten(a.shape_, ia)]) *
                         b.values_[flatten(b.shape_, ib)];
    } while (next_index(shape, idx));
    return Grid(std::move(origin), a.step_, std::move(shape), std::move(values));
}

Grid Grid::sum(const Grid& a, const Grid& b) {
    if (a.size() == 0) return b;
    if (b.size() == 0) return a;
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
    if (a.step_ != b.step_) throw std::invalid_argument("incompatible grid steps");
    std::vector<long> rel(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        Rational r = (b.origin_[i] - a.origin_[i]) / a.step_;
        if (!is_integer(r)) throw std::invalid_argument("misaligned grids in sum");
        rel[i] = static_cast<long>(r.get_num().get_si());
    }
    std::vector<Rational> origin(a.dim());
    std::vector<long> shape(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        long lo = std::min(0L, rel[i]);
        long hi = std::max(a.shape_[i], rel[i] + b.shape_[i]);
        origin[i] = a.origin_[i] + a.step_ * Rational(lo);
        shape[i] = hi - lo;
    }
    long total = 1;
    for (long s : shape) total *= s;
    std::vector<std::complex<double>> values(total);
    std::vector<long> idx(a.dim(), 0);
    long flat = 0;
    do {
        std::complex<double> v = 0.0;
        std::vector<long> ia(a.dim()), ib(a.dim());
        bool in_a = true, in_b = true;
        for (int i = 0; i < a.dim(); ++i) {
            Rational lo_off = (origin[i] - a.origin_[i]) / a.step_;
            long base = static_cast<long>(lo_off.get_num().get_si());
            ia[i] = idx[i] + base;
            ib[i] = ia[i] - rel[i];
            if (ia[i] < 0 || ia[i] >= a.shape_[i]) in_a = false;
            if (ib[i] < 0 || ib[i] >= b.shape_[i]) in_b = false;
        }
        if (in_a) v += a.values_[flatten(a.shape_, ia)];
        if (in_b) v += b.values_[flatten(b.shape_, ib)];
        values[flat++] = v;
    } while (next_index(shape, idx));
    return Grid(std::move(origin), a.step_, std::move(shape), std::move(values));
}

bool Grid::is_zero(double tol) const {
    for (const auto& v : values_) {
        if (std::abs(v) > tol) return false;
    }
    return true;
}

double Grid::max_abs() const {
    double best = 0.0;
    for (const auto& v : values_) best = std::max(best, std::abs(v));
    return best;
}

std::vector<Rational> Grid::point(long flat_index) const {
    std::vector<Rational> xi(origin_.size());
    long rem = flat_index;
    for (int i = dim() - 1; i >= 0; --i) {
        long k = rem % shape_[i];
        rem /= shape_[i];
        xi[i] = origin_[i] + step_ * Rational(k);
    }
    return xi;
}

std::optional<Grid::Witness> Grid::max_abs_witness(double tol) const {
    long best = -1;
    double best_abs = tol;
    for (long i = 0; i < size(); ++i) {
        double a = std::abs(values_[i]);
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (best < 0) return std::nullopt;
    return Witness{point(best), values_[best]};
}

Box Grid::support_box(double tol) const {
    std::vector<long> lo(dim(), std::numeric_limits<long>::max());
    std::vector<long> hi(dim(), -1);
    std::vector<long> idx(dim(), 0);
    if (values_.empty()) return {};
    long flat = 0;
    do {
        if (std::abs(values_[flat]) > tol) {
            for (int i = 0; i < dim(); ++i) {
                lo[i] = std::min(lo[i], idx[i]);
                hi[i] = std::max(hi[i], idx[i]);
            }
        }
        ++flat;
    } while (next_index(shape_, idx));
    Box out;
    for (int i = 0; i < dim(); ++i) {
        if (hi[i] < 0) return {};
        out.sides.emplace_back(origin_[i] + step_ * Rational(lo[i]),
                               origin_[i] + step_ * Rational(hi[i] + 1));
    }
    return out;
}

Grid Grid::restricted(const std::vector<Box>& domain) const {
    Grid out = *this;
    std::vector<long> idx(dim(), 0);
    long flat = 0;
    do {
        std::vector<Rational> xi = out.point(flat);
        bool inside = false;
        for (const auto& box : domain) {
            if (box.contains(xi)) {
                inside = true;
                break;
            }
        }
        if (!inside) out.values_[flat] = 0.0;
        ++flat;
    } while (next_index(shape_, idx));
    return out;
}

Grid Grid::minus_const_on(std::complex<double> c, const std::vector<Box>& domain,
                          bool* covered) const {
    Grid out = restricted(domain);
    if (covered) *covered = true;
    std::vector<long> idx(dim(), 0);
    long flat = 0;
    do {
        std::vector<Rational> xi = out.point(flat);
        for (const auto& box : domain) {
            if (box.contains(xi)) {
                out.values_[flat] -= c;
                break;
            }
        }
        ++flat;
    } while (next_index(shape_, idx));
    // Domain cells outside the grid extent are not represented; report that.
    if (covered) {
        for (const auto& box : domain) {
            for (int i = 0; i < dim() && !box.empty(); ++i) {
                Rational top = origin_[i] + step_ * Rational(shape_[i]);
                if (box.sides[i].lo < origin_[i] || box.sides[i].hi > top) *covered = false;
            }
        }
    }
    return out;
}

}  // namespace framecheck
