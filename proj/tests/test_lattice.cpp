#include <doctest.h>

#include "framecheck/lattice.hpp"

using namespace framecheck;

namespace {

RMatrix m1(long num, long den = 1) { return RMatrix::scalar(rational(num, den)); }

std::vector<Rational> vec1(long num, long den = 1) { return {rational(num, den)}; }

}  // namespace

TEST_CASE("dual_matrix is the inverse transpose") {
    CHECK(dual_matrix(RMatrix::identity(2)) == RMatrix::identity(2));
    CHECK(dual_matrix(m1(2)) == m1(1, 2));
    RMatrix shear({{rational(1), rational(1)}, {rational(0), rational(1)}});
    RMatrix expected({{rational(1), rational(0)}, {rational(-1), rational(1)}});
    CHECK(dual_matrix(shear) == expected);
    // Involution.
    CHECK(dual_matrix(dual_matrix(shear)) == shear);
    CHECK_THROWS_AS(dual_matrix(RMatrix({{rational(0)}})), std::domain_error);
}

TEST_CASE("rational matrix inverse and determinant") {
    RMatrix quincunx({{rational(1), rational(1)}, {rational(-1), rational(1)}});
    CHECK(quincunx.det() == rational(2));
    RMatrix prod = quincunx * quincunx.inverse();
    CHECK(prod == RMatrix::identity(2));
    CHECK(quincunx.is_integer());
    CHECK_FALSE(m1(1, 2).is_integer());
}

TEST_CASE("enumerate_alpha over unions of dual lattices") {
    LatticeFamily single({"0"}, {m1(1)});
    Box box = Box::of(Interval(rational(-3, 2), rational(3, 2)));
    auto alphas = enumerate_alpha(single, box);
    REQUIRE(alphas.size() == 2);
    CHECK(alphas[0] == vec1(-1));
    CHECK(alphas[1] == vec1(1));

    // C' = (C^*)^-1: the lattice matrix 2 contributes the dual lattice (1/2)Z.
    LatticeFamily two({"a", "b"}, {m1(1), m1(2)});
    Box unit = Box::of(Interval(rational(-1), rational(11, 10)));
    auto union_alphas = enumerate_alpha(two, unit);
    std::vector<std::vector<Rational>> expected{vec1(-1), vec1(-1, 2), vec1(1, 2), vec1(1)};
    CHECK(union_alphas == expected);

    CHECK(enumerate_alpha(single, Box::of(Interval(rational(1), rational(1)))).empty());

    // Every returned alpha admits at least one index in P_alpha.
    for (const auto& alpha : union_alphas) {
        CHECK_FALSE(p_alpha(two, alpha).empty());
    }
}

TEST_CASE("p_alpha membership") {
    LatticeFamily fam({"a", "b"}, {m1(1), m1(1, 3)});
    // alpha = 0 keeps the whole index set.
    CHECK(p_alpha(fam, vec1(0)) == std::vector<size_t>{0, 1});
    // C_b^* alpha = alpha/3 is not integral at alpha = 1.
    CHECK(p_alpha(fam, vec1(1)) == std::vector<size_t>{0});
    CHECK(p_alpha(fam, vec1(3)) == std::vector<size_t>{0, 1});

    // Affine-style family C_n = A^-n with A = 2: indices with n <= s survive
    // at alpha = 2^s q, q odd.
    std::vector<std::string> labels;
    std::vector<RMatrix> mats;
    for (int n = -2; n <= 3; ++n) {
        labels.push_back(std::to_string(n));
        Rational power(1);
        for (int t = 0; t < std::abs(n); ++t) power *= 2;
        if (n > 0) power = 1 / power;
        mats.push_back(RMatrix::scalar(power));  // A^-n
    }
    LatticeFamily affine(labels, mats);
    auto members = p_alpha(affine, vec1(4 * 3));  // s = 2, q = 3
    std::vector<size_t> expected;
    for (int n = -2; n <= 2; ++n) expected.push_back(static_cast<size_t>(n + 2));
    CHECK(members == expected);
}

TEST_CASE("enumerate_q lists coset representatives outside A* Z^d") {
    DilationMatrix two = DilationMatrix::scalar(rational(2));
    Box box = Box::of(Interval(rational(-3), rational(31, 10)));
    auto odd = enumerate_q(two, box);
    CHECK(odd == std::vector<std::vector<Rational>>{vec1(-3), vec1(-1), vec1(1), vec1(3)});

    DilationMatrix three = DilationMatrix::scalar(rational(3));
    auto q3 = enumerate_q(three, box);
    CHECK(q3 == std::vector<std::vector<Rational>>{vec1(-2), vec1(-1), vec1(1), vec1(2)});

    // Quincunx: A^* = [[1,1],[-1,1]] has index 2; inside [-1,1]^2 the
    // non-lattice integer points are the four unit vectors.
    RMatrix a({{rational(1), rational(-1)}, {rational(1), rational(1)}});
    DilationMatrix quincunx = DilationMatrix::make(a);
    CHECK(quincunx.expansive);
    Box square(std::vector<Interval>{Interval(rational(-1), rational(11, 10)),
                                     Interval(rational(-1), rational(11, 10))});
    auto qs = enumerate_q(quincunx, square);
    std::vector<std::vector<Rational>> expected{
        {rational(-1), rational(0)}, {rational(0), rational(-1)}, {rational(0), rational(1)},
        {rational(1), rational(0)}};
    CHECK(qs == expected);

    CHECK_THROWS_AS(enumerate_q(DilationMatrix::scalar(rational(3, 2)), box),
                    std::invalid_argument);
}

TEST_CASE("expansive detection") {
    CHECK(DilationMatrix::scalar(rational(2)).expansive);
    CHECK(DilationMatrix::scalar(rational(-2)).expansive);
    CHECK_FALSE(DilationMatrix::scalar(rational(1)).expansive);
    CHECK_FALSE(DilationMatrix::scalar(rational(1, 2)).expansive);
    RMatrix rotation({{rational(0), rational(-1)}, {rational(1), rational(0)}});
    CHECK_FALSE(DilationMatrix::make(rotation).expansive);  // eigenvalues on the unit circle
    RMatrix diag({{rational(2), rational(0)}, {rational(0), rational(3)}});
    CHECK(DilationMatrix::make(diag).expansive);
}

TEST_CASE("integer_points respects half-open boxes") {
    Box box = Box::of(Interval(rational(-1), rational(1)));
    auto pts = integer_points(box);
    CHECK(pts == std::vector<std::vector<Rational>>{vec1(-1), vec1(0)});
    auto closed = integer_points_closed(box);
    CHECK(closed == std::vector<std::vector<Rational>>{vec1(-1), vec1(0), vec1(1)});
}
