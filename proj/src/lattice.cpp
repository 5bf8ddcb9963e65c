#include "framecheck/lattice.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace framecheck {

LatticeFamily::LatticeFamily(std::vector<std::string> lbls, std::vector<RMatrix> ms)
    : labels(std::move(lbls)), mats(std::move(ms)) {
    if (labels.size() != mats.size())
        throw std::invalid_argument("lattice family: label/matrix count mismatch");
    if (mats.empty()) throw std::invalid_argument("lattice family: empty");
    int d = mats.front().rows();
    for (const auto& m : mats) {
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("lattice family: inconsistent dimensions");
        if (m.det() == 0) throw std::invalid_argument("lattice family: singular matrix");
    }
}

bool LatticeFamily::single_lattice() const {
    for (const auto& m : mats) {
        if (m != mats.front()) return false;
    }
    return true;
}

bool is_expansive(const RMatrix& m) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() == 1) return rational_abs(m.at(0, 0)) > 1;
    Eigen::MatrixXd md(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) md(r, c) = to_double(m.at(r, c));
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(md, /*computeEigenvectors=*/false);
    for (int i = 0; i < m.rows(); ++i) {
        if (std::abs(solver.eigenvalues()[i]) <= 1.0 + 1e-12) return false;
    }
    return true;
}

DilationMatrix DilationMatrix::make(RMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("dilation matrix must be square");
    if (m.det() == 0) throw std::invalid_argument("dilation matrix must be invertible");
    DilationMatrix out;
    out.expansive = is_expansive(m);
    out.integer_valued = m.is_integer();
    out.mat = std::move(m);
    return out;
}

Rational DilationMatrix::factor() const {
    if (mat.rows() != 1) throw std::logic_error("factor(): dilation is not 1-D");
    return mat.at(0, 0);
}

std::vector<std::vector<Rational>> enumerate_alpha(const LatticeFamily& fam, const Box& box) {
    std::vector<std::vector<Rational>> out;
    if (box.empty()) return out;
    if (box.dim() != fam.dim()) throw std::invalid_argument("enumerate_alpha: dimension mismatch");
    auto cmp = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        return compare(a, b) < 0;
    };
    std::set<std::vector<Rational>, decltype(cmp)> seen(cmp);
    for (const auto& c : fam.mats) {
        RMatrix dual = dual_matrix(c);
        // alpha = C' z in box  <=>  z in C^* box; enumerate a closed cover of
        // the candidate z's and keep the exact members.
        Box zbox = c.transpose().image_bbox(box);
        for (const auto& z : integer_points_closed(zbox)) {
            std::vector<Rational> alpha = dual.apply(z);
            if (!box.contains(alpha)) continue;
            bool zero = std::all_of(alpha.begin(), alpha.end(),
                                    [](const Rational& x) { return x == 0; });
            if (zero) continue;
            seen.insert(std::move(alpha));
        }
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

std::vector<size_t> p_alpha(const LatticeFamily& fam, const std::vector<Rational>& alpha) {
    if (static_cast<int>(alpha.size()) != fam.dim())
        throw std::invalid_argument("p_alpha: dimension mismatch");
    std::vector<size_t> out;
    for (size_t p = 0; p < fam.mats.size(); ++p) {
        std::vector<Rational> image = fam.mats[p].transpose().apply(alpha);
        if (is_integer_vector(image)) out.push_back(p);
    }
    return out;
}

std::vector<std::vector<Rational>> enumerate_q(const DilationMatrix& a, const Box& box) {
    if (!a.integer_valued) throw std::invalid_argument("enumerate_q: dilation must be integer");
    if (!a.expansive) throw std::invalid_argument("enumerate_q: dilation must be expansive");
    RMatrix a_star_inv = a.mat.transpose().inverse();
    std::vector<std::vector<Rational>> out;
    for (const auto& q : integer_points(box)) {
        // q = A^* z has the exact solution z = (A^*)^(-1) q.
        if (is_integer_vector(a_star_inv.apply(q))) continue;
        out.push_back(q);
    }
    return out;
}

bool is_integer_vector(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

}  // namespace framecheck
