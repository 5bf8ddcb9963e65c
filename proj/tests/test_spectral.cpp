#include <doctest.h>

#include <random>

#include "framecheck/spectral.hpp"

using namespace framecheck;

namespace {

Rational random_rational(std::mt19937& rng, long max_den = 512, long span = 4) {
    std::uniform_int_distribution<long> den_pick(1, max_den);
    long den = den_pick(rng);
    std::uniform_int_distribution<long> num_pick(-span * den, span * den);
    return rational(num_pick(rng), den);
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/12") == rational(1, 4));
    CHECK(parse_rational("-1/4") == rational(-1, 4));
    CHECK(parse_rational("7") == rational(7));
    CHECK(format_rational(rational(-3, 6)) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    Rational root;
    CHECK(perfect_square(rational(9, 16), &root));
    CHECK(root == rational(3, 4));
    CHECK_FALSE(perfect_square(rational(1, 2), &root));
}

TEST_CASE("polynomial algebra is exact") {
    // p(x) = 1 - 2x + x^2, q(x) = x
    Polynomial p({CRational(1), CRational(rational(-2)), CRational(1)});
    Polynomial q({CRational(0), CRational(1)});
    CHECK((p * q).degree() == 3);
    CHECK(p.eval(rational(1, 2)).re == rational(1, 4));
    Polynomial shifted = p.compose_affine(rational(1), rational(1, 2));
    CHECK(shifted.eval(rational(0)) == p.eval(rational(1, 2)));
    Polynomial scaled = p.compose_affine(rational(3), rational(0));
    CHECK(scaled.eval(rational(1, 3)) == p.eval(rational(1)));
    CHECK(p.integral(rational(0), rational(1)).re == rational(1, 3));
}

TEST_CASE("piecewise evaluation and support") {
    Profile shannon = make_shannon_band();
    CHECK(shannon.eval1(rational(0)) == std::complex<double>(1.0, 0.0));
    CHECK(shannon.eval1(rational(-1, 2)) == std::complex<double>(1.0, 0.0));
    CHECK(shannon.eval1(rational(1, 2)) == std::complex<double>(0.0, 0.0));
    CHECK(shannon.eval1(rational(7)) == std::complex<double>(0.0, 0.0));
    CHECK_FALSE(shannon.in_class_d());
    CHECK(make_shannon_wavelet().in_class_d());
}

TEST_CASE("frazier-jawerth profiles match their stated supports") {
    Profile fj2 = make_frazier_jawerth(rational(2), rational(1, 128));
    Interval hull = fj2.piecewise().support_hull();
    CHECK(hull.lo == rational(-1, 32));
    CHECK(hull.hi == rational(1, 32));
    CHECK(*fj2.piecewise().support_distance_from_zero() == rational(1, 128));
    CHECK(fj2.piecewise().eval_exact(rational(1, 64)).re == 1);
    CHECK(fj2.piecewise().eval_exact(rational(-1, 64)).re == 1);
    CHECK(fj2.piecewise().eval_exact(rational(1, 32)).re == 0);

    Profile fj3 = make_frazier_jawerth(rational(3), rational(1, 27));
    Interval hull3 = fj3.piecewise().support_hull();
    CHECK(hull3.lo == rational(-1, 3));
    CHECK(hull3.hi == rational(1, 3));
    CHECK(*fj3.piecewise().support_distance_from_zero() == rational(1, 27));

    CHECK_THROWS_AS(make_frazier_jawerth(rational(1), rational(1, 4)), std::invalid_argument);
    CHECK_THROWS_AS(make_frazier_jawerth(rational(2), rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_named_profile("no_such_profile", {}), std::invalid_argument);
}

TEST_CASE("frazier-jawerth dilates form an exact partition of unity") {
    std::mt19937 rng(7);
    for (auto [a_num, c_num, c_den] : {std::tuple<long, long, long>{2, 1, 128},
                                       std::tuple<long, long, long>{3, 1, 27}}) {
        Rational a(a_num);
        Profile fj = make_frazier_jawerth(a, rational(c_num, c_den));
        const Piecewise& pw = fj.piecewise();
        for (int trial = 0; trial < 200; ++trial) {
            Rational xi = random_rational(rng);
            if (xi == 0) continue;
            // Sum psi(a^j xi) over every j that can reach the support.
            Rational inner = *pw.support_distance_from_zero();
            Rational outer = std::max(rational_abs(pw.support_hull().lo),
                                      rational_abs(pw.support_hull().hi));
            Rational mag = rational_abs(xi);
            CRational sum;
            Rational power(1);
            while (mag * power <= outer) {
                sum = sum + pw.eval_exact(xi * power);
                power *= a;
            }
            power = 1 / a;
            while (mag * power >= inner) {
                sum = sum + pw.eval_exact(xi * power);
                power /= a;
            }
            CHECK(sum.re == 1);
            CHECK(sum.im == 0);
        }
    }
}

TEST_CASE("bidual pair construction") {
    auto [psi, phi] = make_bidual_pair();
    CHECK(psi.piecewise().eval_exact(rational(0)).re == 1);
    CHECK(psi.piecewise().eval_exact(rational(1, 4)).re == 1);
    CHECK(psi.piecewise().eval_exact(rational(3, 8)).re == rational(1, 2));
    // phi(1) = psi(1) + psi(0) = 1
    CHECK(phi.piecewise().eval_exact(rational(1)).re == 1);
    Interval hull = phi.piecewise().support_hull();
    CHECK(hull.lo == rational(-1, 2));
    CHECK(hull.hi == rational(3, 2));
}

TEST_CASE("sampled mode agrees with exact mode at grid points") {
    Profile plateau = make_plateau(rational(1, 4), rational(1, 2));
    Rational step = rational(1, 64);
    std::vector<std::complex<double>> values;
    std::vector<Rational> origin{rational(-1)};
    for (long k = 0; k < 128; ++k) {
        values.push_back(plateau.eval1(origin[0] + step * Rational(k)));
    }
    Profile sampled = Profile::sampled(Grid(origin, step, {128}, values));
    for (long k = 0; k < 128; ++k) {
        Rational xi = origin[0] + step * Rational(k);
        CHECK(sampled.eval({xi}) == plateau.eval1(xi));
    }
    CHECK(sampled.eval({rational(5)}) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("dilate_index_range enumerates exactly") {
    Profile shannon_band = make_shannon_wavelet();
    auto js = dilate_index_range(shannon_band, rational(2), Interval(rational(1, 4), rational(1, 2)));
    CHECK(js == std::vector<int>{0});

    Profile fj2 = make_frazier_jawerth(rational(2), rational(1, 128));
    auto js2 = dilate_index_range(fj2, rational(2), Interval(rational(1, 2), rational(1)));
    CHECK(js2 == std::vector<int>{-6, -5});

    // A window disjoint from every dilate of the support.
    Profile one_sided = make_characteristic(rational(1, 4), rational(1, 2));
    auto js3 = dilate_index_range(one_sided, rational(2), Interval(rational(-2), rational(-1)));
    CHECK(js3.empty());

    CHECK_THROWS_AS(dilate_index_range(fj2, rational(1, 2), Interval(rational(1), rational(2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(dilate_index_range(make_shannon_band(), rational(2),
                                       Interval(rational(1), rational(2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(dilate_index_range(fj2, rational(2), Interval(rational(-1), rational(1))),
                    std::invalid_argument);
}

TEST_CASE("support_difference bounds every nonvanishing shift") {
    Profile a = make_characteristic(rational(0), rational(1, 4));
    Profile b = make_characteristic(rational(1, 2), rational(3, 4));
    Box box = support_difference(a, b);
    CHECK(box.sides[0].lo == rational(-3, 4));
    CHECK(box.sides[0].hi == rational(-1, 4));

    Profile sym = make_shannon_band();
    Box same = support_difference(sym, sym);
    CHECK(same.sides[0].lo == rational(-1));
    CHECK(same.sides[0].hi == rational(1));

    auto [psi, phi] = make_bidual_pair();
    Box mixed = support_difference(phi, psi);
    CHECK(mixed.sides[0].lo == rational(-1));
    CHECK(mixed.sides[0].hi == rational(2));

    // Soundness: conj(a(xi)) b(xi + alpha) == 0 whenever alpha is outside
    // support_difference(b, a).
    std::mt19937 rng(11);
    Box feasible = support_difference(b, a);
    int checked = 0;
    while (checked < 1000) {
        Rational xi = random_rational(rng);
        Rational alpha = random_rational(rng, 64, 3);
        if (feasible.contains({alpha})) continue;
        std::complex<double> product = std::conj(a.eval1(xi)) * b.eval1(xi + alpha);
        CHECK(product == std::complex<double>(0.0, 0.0));
        ++checked;
    }
}

TEST_CASE("piecewise sum and product keep half-open semantics") {
    // Shifted copies of a width-1 characteristic overlap only at a boundary
    // point, which the half-open convention excludes.
    Profile shannon = make_shannon_band();
    Piecewise shifted = shannon.piecewise().shift_arg(rational(-1));
    CHECK((shannon.piecewise() * shifted).is_zero());

    Piecewise sum = shannon.piecewise() + shifted;
    CHECK(sum.eval_exact(rational(1, 2)).re == 1);
    CHECK(sum.eval_exact(rational(-1, 2)).re == 1);
    CHECK(sum.eval_exact(rational(3, 2)).re == 0);
    CHECK(sum.support_hull().hi == rational(3, 2));
}

TEST_CASE("amplitude bookkeeping folds perfect squares") {
    Profile plateau = make_plateau(rational(1, 4), rational(1, 2));
    Piecewise quarter = plateau.piecewise().scaled_sqrt(rational(1, 4));
    CHECK(quarter.amplitude_is_one());  // 1/4 folds to a coefficient 1/2
    CHECK(quarter.eval_exact(rational(0)).re == rational(1, 2));

    Piecewise half = plateau.piecewise().scaled_sqrt(rational(1, 2));
    CHECK_FALSE(half.amplitude_is_one());
    CHECK_THROWS_AS(half.eval_exact(rational(0)), std::domain_error);
    CHECK(half.eval(rational(0)).real() == doctest::Approx(std::sqrt(0.5)));
    // Product of two sqrt(1/2)-scaled copies is rational again.
    Piecewise product = half.conjugate() * half;
    CHECK(product.amplitude_is_one());
    CHECK(product.eval_exact(rational(0)).re == rational(1, 2));
    // Adding profiles with incommensurable amplitudes is refused.
    CHECK_THROWS_AS(plateau.piecewise() + half, std::domain_error);
    // Equal amplitudes fold together.
    Piecewise doubled = half + half;
    CHECK(doubled.eval(rational(0)).real() == doctest::Approx(2.0 * std::sqrt(0.5)));
}
