#include <doctest.h>

#include <random>

#include "framecheck/affine.hpp"

using namespace framecheck;

namespace {

AffineSystem dyadic(Profile psi) { return AffineSystem::dyadic(std::move(psi)); }

bool has_condition_prefix(const Verdict& verdict, const std::string& prefix) {
    for (const auto& v : verdict.violations) {
        if (v.condition.rfind(prefix, 0) == 0) return true;
    }
    return false;
}

// Independent brute-force sum over dilation levels, exact arithmetic.
CRational brute_cross_term(const Piecewise& f, const Piecewise& g, const Rational& a,
                           const Rational& q, const Rational& xi, int j_max) {
    CRational sum;
    Rational power(1);
    for (int j = 0; j <= j_max; ++j) {
        sum = sum + f.eval_exact(power * xi).conj() * g.eval_exact(power * (xi + q));
        power *= a;
    }
    return sum;
}

CRational brute_calderon(const Piecewise& f, const Piecewise& g, const Rational& a,
                         const Rational& xi, int j_span) {
    CRational sum;
    Rational power(1);
    for (int j = 0; j <= j_span; ++j) {
        sum = sum + f.eval_exact(power * xi).conj() * g.eval_exact(power * xi);
        power *= a;
    }
    power = 1 / a;
    for (int j = 1; j <= j_span; ++j) {
        sum = sum + f.eval_exact(power * xi).conj() * g.eval_exact(power * xi);
        power /= a;
    }
    return sum;
}

Rational random_rational(std::mt19937& rng, long max_den, long span) {
    std::uniform_int_distribution<long> den_pick(1, max_den);
    long den = den_pick(rng);
    std::uniform_int_distribution<long> num_pick(-span * den, span * den);
    return rational(num_pick(rng), den);
}

}  // namespace

TEST_CASE("affine cross terms: vanishing cases and coset validation") {
    AffineSystem shannon = dyadic(make_shannon_wavelet());
    for (long q : {-3, -1, 1, 3}) {
        CHECK(affine_cross_term(shannon, shannon, {rational(q)}).is_zero(0));
    }
    CHECK_THROWS_AS(affine_cross_term(shannon, shannon, {rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(affine_cross_term(shannon, shannon, {rational(2)}), std::invalid_argument);
    CHECK_THROWS_AS(affine_cross_term(shannon, shannon, {rational(1, 2)}),
                    std::invalid_argument);
    AffineSystem triadic(DilationMatrix::scalar(rational(3)), {make_shannon_wavelet()});
    CHECK_THROWS_AS(affine_cross_term(shannon, triadic, {rational(1)}), std::invalid_argument);

    // Orbit-disjoint pair: one generator on the positive axis, the other on
    // the negative axis; positive dilations never mix them.
    AffineSystem pos = dyadic(make_characteristic(rational(1, 4), rational(1, 2)));
    AffineSystem neg = dyadic(make_characteristic(rational(-1, 2), rational(-1, 4)));
    CHECK(affine_cross_term(pos, neg, {rational(1)}).is_zero(0));
}

TEST_CASE("affine cross term matches an independent level sum") {
    Profile fj = make_frazier_jawerth(rational(2), rational(1, 128));
    AffineSystem sys = dyadic(fj);
    Profile term = affine_cross_term(sys, sys, {rational(1)});
    std::mt19937 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        Rational xi = random_rational(rng, 256, 2);
        CRational expected = brute_cross_term(fj.piecewise(), fj.piecewise(), rational(2),
                                              rational(1), xi, 24);
        CHECK(term.piecewise().eval_exact(xi) == expected);
    }
}

TEST_CASE("calderon symbol: Shannon tiles, disjoint orbits vanish") {
    AffineSystem shannon = dyadic(make_shannon_wavelet());
    Profile symbol = calderon_mixed_symbol(shannon, shannon);
    Piecewise diff = symbol.piecewise().minus_const_on(
        CRational(Rational(1)), IntervalSet(fundamental_annulus(shannon.dilation)));
    CHECK(diff.is_zero());

    AffineSystem pos = dyadic(make_characteristic(rational(1, 4), rational(1, 2)));
    AffineSystem neg = dyadic(make_characteristic(rational(-1, 2), rational(-1, 4)));
    CHECK(calderon_mixed_symbol(pos, neg).is_zero(0));

    CHECK_THROWS_AS(
        calderon_mixed_symbol(shannon, shannon, {Interval(rational(-1), rational(1))}),
        std::invalid_argument);
}

TEST_CASE("calderon symbol matches an independent two-sided sum") {
    Profile fj = make_frazier_jawerth(rational(2), rational(1, 128));
    AffineSystem sys = dyadic(fj);
    std::vector<Interval> window{Interval(rational(1, 100), rational(1))};
    Profile symbol = calderon_mixed_symbol(sys, sys, window);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        Rational xi = rational(1, 100) + random_rational(rng, 512, 1);
        if (!(rational(1, 100) <= xi && xi < rational(1))) continue;
        CRational expected =
            brute_calderon(fj.piecewise(), fj.piecewise(), rational(2), xi, 30);
        CHECK(symbol.piecewise().eval_exact(xi) == expected);
    }
}

TEST_CASE("equal-dilation orthogonality") {
    AffineSystem shannon = dyadic(make_shannon_wavelet());
    Verdict self = check_affine_orthogonality(shannon, shannon);
    CHECK_FALSE(self.holds);
    CHECK(has_condition_prefix(self, "calderon-sum"));

    // Consecutive dyadic bands: the cross Calderon sum sees disjoint bands at
    // every level and all dilated cross terms vanish.
    std::vector<Profile> bands =
        build_named_profile("symmetric_band", {rational(1, 8), rational(1, 4)});
    AffineSystem half_band = dyadic(bands[0]);
    CHECK(check_affine_orthogonality(shannon, half_band).holds);

    AffineSystem pos = dyadic(make_characteristic(rational(1, 4), rational(1, 2)));
    AffineSystem neg = dyadic(make_characteristic(rational(-1, 2), rational(-1, 4)));
    CHECK(check_affine_orthogonality(pos, neg).holds);
}

TEST_CASE("affine/quasi-affine equivalence classification") {
    AffineSystem shannon = dyadic(make_shannon_wavelet());
    AqeClassification same = classify_aqe(shannon, shannon);
    CHECK(same.commutant_holds);
    REQUIRE(same.symbol.has_value());
    Piecewise diff = same.symbol->piecewise().minus_const_on(
        CRational(Rational(1)), IntervalSet(fundamental_annulus(shannon.dilation)));
    CHECK(diff.is_zero());

    // Overlapping shifted bands break a dilated cross term.
    AffineSystem a = dyadic(make_characteristic(rational(1, 4), rational(3, 4)));
    AffineSystem b = dyadic(make_characteristic(rational(5, 4), rational(7, 4)));
    AqeClassification broken = classify_aqe(a, b);
    CHECK_FALSE(broken.commutant_holds);
    CHECK_FALSE(broken.symbol.has_value());
    REQUIRE_FALSE(broken.detail.violations.empty());
    CHECK_FALSE(broken.detail.violations.front().shift.empty());
    CHECK(broken.detail.violations.front().where.has_value());

    AffineSystem pos = dyadic(make_characteristic(rational(1, 4), rational(1, 2)));
    AffineSystem neg = dyadic(make_characteristic(rational(-1, 2), rational(-1, 4)));
    AqeClassification apart = classify_aqe(pos, neg);
    CHECK(apart.commutant_holds);
    REQUIRE(apart.symbol.has_value());
    CHECK(apart.symbol->is_zero(0));
}

TEST_CASE("quasi-affine orthogonality across dilations") {
    AffineSystem fj2(DilationMatrix::scalar(rational(2)),
                     {make_frazier_jawerth(rational(2), rational(1, 128))},
                     AffineSystem::Convention::QuasiAffine);
    AffineSystem fj3(DilationMatrix::scalar(rational(3)),
                     {make_frazier_jawerth(rational(3), rational(1, 27))},
                     AffineSystem::Convention::QuasiAffine);
    Verdict verdict = check_quasi_affine_orthogonality(fj2, fj3);
    CHECK_FALSE(verdict.holds);
    // Scale-zero products vanish; the positive scales collide.
    CHECK_FALSE(has_condition_prefix(verdict, "translate-cross-term"));
    CHECK(has_condition_prefix(verdict, "dilated-cross-term"));
    // Both bumps are nonnegative, so the witness value is genuinely positive.
    bool positive_witness = false;
    for (const auto& v : verdict.violations) {
        if (v.condition == "dilated-cross-term" && v.value.real() > 1e-6) positive_witness = true;
    }
    CHECK(positive_witness);

    // Supports that never meet any dilated image of each other.
    AffineSystem pos(DilationMatrix::scalar(rational(2)),
                     {make_characteristic(rational(1, 4), rational(1, 2))});
    AffineSystem neg(DilationMatrix::scalar(rational(3)),
                     {make_characteristic(rational(-1, 2), rational(-1, 4))});
    CHECK(check_quasi_affine_orthogonality(pos, neg).holds);

    CHECK_THROWS_AS(check_quasi_affine_orthogonality(fj2, fj2), std::invalid_argument);
}

TEST_CASE("sufficient condition for arbitrary dilation/translation pairs") {
    AffineSystem fj2(DilationMatrix::scalar(rational(2)),
                     {make_frazier_jawerth(rational(2), rational(1, 128))});
    AffineSystem fj3(DilationMatrix::scalar(rational(3)),
                     {make_frazier_jawerth(rational(3), rational(1, 27))});
    Verdict holds = check_affine_sufficient(fj2, fj3);
    CHECK(holds.holds);
    CHECK_FALSE(holds.characterized);

    AffineSystem shannon = dyadic(make_shannon_wavelet());
    Verdict fails = check_affine_sufficient(shannon, shannon);
    CHECK_FALSE(fails.holds);
    REQUIRE_FALSE(fails.violations.empty());
    CHECK(fails.violations.front().shift == std::vector<Rational>{rational(0)});

    // X = diag(2) compresses the analysis support to [1/2, 1), which misses
    // every integer translate of [1/4, 1/2).
    AffineSystem squeezed(DilationMatrix::scalar(rational(4)), RMatrix::scalar(rational(2)),
                          {make_characteristic(rational(1, 4), rational(1, 2))});
    AffineSystem plain(DilationMatrix::scalar(rational(2)),
                       {make_characteristic(rational(1, 4), rational(1, 2))});
    CHECK(check_affine_sufficient(squeezed, plain).holds);
}

TEST_CASE("parseval superwavelet conditions") {
    AffineSystem shannon = dyadic(make_shannon_wavelet());
    CHECK(check_parseval_superwavelet({shannon}).holds);

    std::vector<Profile> bands =
        build_named_profile("symmetric_band", {rational(1, 8), rational(1, 4)});
    AffineSystem half_band = dyadic(bands[0]);
    CHECK(check_parseval_superwavelet({shannon, half_band}).holds);

    // Duplicated component: the off-diagonal condition needs the zero
    // function but sees the shared Calderon mass.
    Verdict duplicated = check_parseval_superwavelet({shannon, shannon});
    CHECK_FALSE(duplicated.holds);
    CHECK(has_condition_prefix(duplicated, "calderon-delta(1,2)"));

    // Mixed dilations with the two bump wavelets: the scale-zero cross
    // condition holds but the positive scales collide, and the ramp overlaps
    // also cost per-component tightness.
    AffineSystem fj2(DilationMatrix::scalar(rational(2)),
                     {make_frazier_jawerth(rational(2), rational(1, 128))});
    AffineSystem fj3(DilationMatrix::scalar(rational(3)),
                     {make_frazier_jawerth(rational(3), rational(1, 27))});
    Verdict mixed = check_parseval_superwavelet({fj2, fj3});
    CHECK_FALSE(mixed.holds);
    CHECK(has_condition_prefix(mixed, "dilated-cross-term(1,2)"));
    CHECK_FALSE(has_condition_prefix(mixed, "translate-cross-term"));

    CHECK_THROWS_AS(check_parseval_superwavelet({}), std::invalid_argument);
}

TEST_CASE("conjugation by the translation matrix") {
    AffineSystem plain = dyadic(make_shannon_wavelet());
    AffineSystem same = conjugate_system(plain);
    CHECK(same.dilation == plain.dilation);
    CHECK(same.gens[0].piecewise() == plain.gens[0].piecewise());

    AffineSystem stretched(DilationMatrix::scalar(rational(4)), RMatrix::scalar(rational(2)),
                           {make_shannon_wavelet()});
    AffineSystem conj = conjugate_system(stretched);
    CHECK(conj.dilation.factor() == rational(4));
    CHECK(conj.translation.is_identity());
    // Spectral action g(xi) -> |det X|^{-1/2} g(xi / 2): the support doubles
    // and the amplitude carries 1/2.
    CHECK(conj.gens[0].piecewise().support_hull().hi == rational(1));
    CHECK(conj.gens[0].piecewise().amplitude_sq() == rational(1, 2));
    CHECK(conj.gens[0].eval1(rational(3, 4)).real() == doctest::Approx(std::sqrt(0.5)));

    // Round trip through X and X^-1 restores the original exactly.
    AffineSystem back(conj.dilation, RMatrix::scalar(rational(1, 2)), conj.gens);
    AffineSystem restored = conjugate_system(back);
    CHECK(restored.gens[0].piecewise() == stretched.gens[0].piecewise());
    CHECK(restored.dilation.factor() == rational(4));
}

TEST_CASE("equal-dilation verdicts apply to both conventions") {
    // The equal-dilation characterization is convention-independent: tagging
    // the systems quasi-affine changes nothing in the verdict.
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Profile> pool{
            make_shannon_wavelet(),
            make_characteristic(rational(1, 4), rational(1, 2)),
            make_frazier_jawerth(rational(2), rational(1, 64))};
        Profile psi = pool[pick(rng)];
        Profile phi = pool[pick(rng)];
        AffineSystem a(DilationMatrix::scalar(rational(2)), {psi},
                       AffineSystem::Convention::Affine);
        AffineSystem b(DilationMatrix::scalar(rational(2)), {phi},
                       AffineSystem::Convention::QuasiAffine);
        Verdict affine_verdict = check_affine_orthogonality(a, b);
        AffineSystem aq(DilationMatrix::scalar(rational(2)), {psi},
                        AffineSystem::Convention::QuasiAffine);
        AffineSystem bq(DilationMatrix::scalar(rational(2)), {phi},
                        AffineSystem::Convention::QuasiAffine);
        Verdict quasi_verdict = check_affine_orthogonality(aq, bq);
        CHECK(affine_verdict.holds == quasi_verdict.holds);
        CHECK(affine_verdict.violations.size() == quasi_verdict.violations.size());
    }
}
