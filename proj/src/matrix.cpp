#include "framecheck/matrix.hpp"

#include <stdexcept>

namespace framecheck {

RMatrix::RMatrix(std::vector<std::vector<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    if (rows_ == 0) throw std::invalid_argument("empty matrix");
    cols_ = static_cast<int>(rows[0].size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("ragged matrix rows");
        for (const auto& value : row) a_.push_back(value);
    }
}

RMatrix RMatrix::identity(int d) {
    RMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
}

RMatrix RMatrix::transpose() const {
    RMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    }
    return out;
}

Rational RMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: non-square matrix");
    RMatrix work = *this;
    int n = rows_;
    Rational result(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(work.at(pivot, c), work.at(col, c));
            result = -result;
        }
        result *= work.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (work.at(r, col) == 0) continue;
            Rational factor = work.at(r, col) / work.at(col, col);
            for (int c = col; c < n; ++c) work.at(r, c) -= factor * work.at(col, c);
        }
    }
    return result;
}

RMatrix RMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: non-square matrix");
    int n = rows_;
    RMatrix work = *this;
    RMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("singular matrix");
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        Rational lead = work.at(col, col);
        for (int c = 0; c < n; ++c) {
            work.at(col, c) /= lead;
            inv.at(col, c) /= lead;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work.at(r, col) == 0) continue;
            Rational factor = work.at(r, col);
            for (int c = 0; c < n; ++c) {
                work.at(r, c) -= factor * work.at(col, c);
                inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

bool RMatrix::is_integer() const {
    for (const auto& value : a_) {
        if (!framecheck::is_integer(value)) return false;
    }
    return true;
}

bool RMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (at(r, c) != (r == c ? 1 : 0)) return false;
        }
    }
    return true;
}

std::vector<Rational> RMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    }
    return out;
}

Box RMatrix::image_bbox(const Box& box) const {
    if (box.empty()) return {};
    if (box.dim() != cols_) throw std::invalid_argument("image_bbox: dimension mismatch");
    int corners = 1 << cols_;
    Box out;
    out.sides.assign(rows_, Interval());
    bool first = true;
    for (int mask = 0; mask < corners; ++mask) {
        std::vector<Rational> corner(cols_);
        for (int i = 0; i < cols_; ++i) {
            corner[i] = (mask & (1 << i)) ? box.sides[i].hi : box.sides[i].lo;
        }
        std::vector<Rational> image = apply(corner);
        for (int r = 0; r < rows_; ++r) {
            if (first || image[r] < out.sides[r].lo) out.sides[r].lo = image[r];
            if (first || image[r] > out.sides[r].hi) out.sides[r].hi = image[r];
        }
        first = false;
    }
    return out;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: size mismatch");
    RMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int c = 0; c < b.cols_; ++c) {
            Rational acc(0);
            for (int k = 0; k < a.cols_; ++k) acc += a.at(r, k) * b.at(k, c);
            out.at(r, c) = acc;
        }
    }
    return out;
}

std::string RMatrix::str() const {
    std::string out = "[";
    for (int r = 0; r < rows_; ++r) {
        if (r) out += "; ";
        for (int c = 0; c < cols_; ++c) {
            if (c) out += ", ";
            out += format_rational(at(r, c));
        }
    }
    return out + "]";
}

RMatrix dual_matrix(const RMatrix& c) { return c.transpose().inverse(); }

}  // namespace framecheck
