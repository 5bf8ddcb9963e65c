#pragma once

#include <string>
#include <vector>

#include "framecheck/interval.hpp"
#include "framecheck/matrix.hpp"

namespace framecheck {

// Indexed family of invertible lattice matrices C_p. The family and the
// generator list of a translation system share indices by position.
struct LatticeFamily {
    std::vector<std::string> labels;
    std::vector<RMatrix> mats;

    LatticeFamily() = default;
    LatticeFamily(std::vector<std::string> lbls, std::vector<RMatrix> ms);

    int dim() const { return mats.empty() ? 0 : mats.front().rows(); }
    size_t size() const { return mats.size(); }
    bool single_lattice() const;

    friend bool operator==(const LatticeFamily& a, const LatticeFamily& b) {
        return a.mats == b.mats;
    }
};

struct DilationMatrix {
    RMatrix mat;
    bool expansive = false;
    bool integer_valued = false;

    static DilationMatrix make(RMatrix m);
    static DilationMatrix scalar(const Rational& a) { return make(RMatrix::scalar(a)); }

    int dim() const { return mat.rows(); }
    // 1-D convenience.
    Rational factor() const;

    friend bool operator==(const DilationMatrix& a, const DilationMatrix& b) {
        return a.mat == b.mat;
    }
    friend bool operator!=(const DilationMatrix& a, const DilationMatrix& b) {
        return !(a == b);
    }
};

// All eigenvalue moduli strictly above 1 (exact in dimension 1, numeric via
// the eigensolver otherwise).
bool is_expansive(const RMatrix& m);

// Nonzero points of Lambda = union_p C_p' Z^d inside the half-open box;
// exact, duplicate-free, lexicographically sorted.
std::vector<std::vector<Rational>> enumerate_alpha(const LatticeFamily& fam, const Box& box);

// P_alpha = { p : C_p^* alpha in Z^d }; returns indices into the family.
// alpha = 0 yields every index.
std::vector<size_t> p_alpha(const LatticeFamily& fam, const std::vector<Rational>& alpha);

// Integer points of the box outside A^* Z^d (coset representatives candidate
// set). Requires an integer-valued expansive dilation.
std::vector<std::vector<Rational>> enumerate_q(const DilationMatrix& a, const Box& box);

bool is_integer_vector(const std::vector<Rational>& v);

}  // namespace framecheck
