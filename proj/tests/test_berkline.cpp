#include <doctest.h>

#include <random>

#include "berkcov/berkline.hpp"
#include "oracles.hpp"

using namespace berkcov;

namespace {
LogMag mag(long num, unsigned long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return LogMag::of(q);
}
LogRadius rad(long num, unsigned long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return LogRadius::of(q);
}
}  // namespace

TEST_CASE("seminorm of T^3 - z^3 around z at rho = |p|") {
    // p = 3, |z1| = 1: coefficients |3 z^2| = p^{-1} on (T-z), |1| on (T-z)^3
    CenteredPolynomial q({{1, mag(-1)}, {3, mag(0)}});
    CHECK(seminorm_eval(q, rad(-1)) == mag(-2));
}

TEST_CASE("seminorm of constants and dominant top degree") {
    CHECK(seminorm_eval(CenteredPolynomial({{0, mag(0)}}), rad(5, 3)) == mag(0));
    CHECK(seminorm_eval(CenteredPolynomial({{0, mag(0)}}), rad(-17)) == mag(0));
    CHECK(seminorm_eval(CenteredPolynomial({{1, mag(0)}, {2, mag(0)}}), rad(1)) == mag(2));
}

TEST_CASE("seminorm at r = 0 is |c_0|") {
    CHECK(seminorm_eval(CenteredPolynomial({{0, mag(-3)}, {2, mag(4)}}), LogRadius::neg_infinity()) == mag(-3));
    CHECK(seminorm_eval(CenteredPolynomial({{1, mag(0)}}), LogRadius::neg_infinity()).is_zero());
    CHECK(seminorm_eval(CenteredPolynomial({{0, LogMag::zero()}, {1, mag(0)}}), LogRadius::neg_infinity()).is_zero());
}

TEST_CASE("malformed polynomials are rejected") {
    CHECK_THROWS_AS(CenteredPolynomial({}), PreconditionError);
    CHECK_THROWS_AS(CenteredPolynomial({{1, mag(0)}, {1, mag(2)}}), PreconditionError);
    CHECK_THROWS_AS(CenteredPolynomial({{1, LogMag::zero()}}), PreconditionError);
}

TEST_CASE("point_eq") {
    CHECK(point_eq(Rational(-1, 2), Rational(-1, 2), mag(-1, 2)));
    CHECK_FALSE(point_eq(Rational(-1), Rational(-1), mag(-1, 2)));
    CHECK_FALSE(point_eq(Rational(0), Rational(-1), mag(-5)));
    CHECK(point_eq(Rational(0), Rational(0), LogMag::zero()));
}

TEST_CASE("log radius text form") {
    CHECK(format_log_radius(LogRadius::neg_infinity()) == "-inf");
    CHECK(parse_log_radius("-inf").is_neg_infinity());
    CHECK(parse_log_radius("-4/6") == rad(-2, 3));
    CHECK_THROWS_AS(LogRadius::neg_infinity().value(), PreconditionError);
}

TEST_CASE("seminorm is monotone and ultrametric on random instances") {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<int> deg_dist(0, 6);
    auto random_poly = [&]() {
        std::vector<CenteredPolynomial::Term> terms;
        std::vector<bool> used(7, false);
        int n = 1 + deg_dist(rng) % 4;
        for (int k = 0; k < n; ++k) {
            int d = deg_dist(rng);
            if (used[d]) continue;
            used[d] = true;
            terms.emplace_back(d, LogMag::of(oracle::random_rational(rng, 4, 6)));
        }
        return terms;
    };

    for (int trial = 0; trial < 500; ++trial) {
        auto a = random_poly();
        auto b = random_poly();
        CenteredPolynomial qa(a), qb(b);
        Rational t1 = oracle::random_rational(rng, 3, 5);
        Rational t2 = oracle::random_rational(rng, 3, 5);
        if (t1 > t2) std::swap(t1, t2);

        // monotone in the radius
        REQUIRE(seminorm_eval(qa, LogRadius::of(t1)) <= seminorm_eval(qa, LogRadius::of(t2)));
        REQUIRE(seminorm_eval(qa, LogRadius::neg_infinity()) <= seminorm_eval(qa, LogRadius::of(t1)));

        // coefficientwise monotone: raising one coefficient never lowers the value
        auto raised = a;
        raised.front().second = LogMag::of(raised.front().second.exponent() + 1);
        REQUIRE(seminorm_eval(qa, LogRadius::of(t1)) <= seminorm_eval(CenteredPolynomial(raised), LogRadius::of(t1)));

        // q_a + q_b bounded by coefficientwise max
        std::vector<CenteredPolynomial::Term> merged = a;
        for (const auto& [d, c] : b) {
            auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& t) { return t.first == d; });
            if (it == merged.end()) merged.emplace_back(d, c);
            else if (c > it->second) it->second = c;
        }
        LogMag bound = std::max(seminorm_eval(qa, LogRadius::of(t1)), seminorm_eval(qb, LogRadius::of(t1)));
        REQUIRE(seminorm_eval(CenteredPolynomial(merged), LogRadius::of(t1)) <= bound);
    }
}
