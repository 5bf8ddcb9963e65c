#pragma once

#include <string>
#include <vector>

#include "framecheck/interval.hpp"
#include "framecheck/rational.hpp"

namespace framecheck {

// Small dense rational matrix (lattice and dilation matrices, d <= ~4).
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}
    explicit RMatrix(std::vector<std::vector<Rational>> rows);

    static RMatrix identity(int d);
    static RMatrix scalar(const Rational& value) {
        RMatrix m(1, 1);
        m.at(0, 0) = value;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[r * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }

    RMatrix transpose() const;
    Rational det() const;
    RMatrix inverse() const;  // throws std::domain_error when singular

    bool is_integer() const;
    bool is_identity() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    // Bounding box of the image of a box under this matrix (corner images).
    Box image_bbox(const Box& box) const;

    friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
    friend bool operator==(const RMatrix& a, const RMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RMatrix& a, const RMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

// C' = (C*)^(-1): the dual-lattice matrix (transpose inverse).
RMatrix dual_matrix(const RMatrix& c);

}  // namespace framecheck
