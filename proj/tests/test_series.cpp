#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ozaki/series.hpp"

using namespace ozaki;

namespace {

TruncatedSeries real_series(std::initializer_list<double> values) {
    std::vector<Complex> c;
    for (double v : values) c.emplace_back(v, 0.0);
    return TruncatedSeries(std::move(c));
}

double max_residual(const TruncatedSeries& a, const TruncatedSeries& b) {
    REQUIRE(a.order() == b.order());
    double worst = 0.0;
    for (std::size_t k = 0; k <= a.order(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order, Complex c0) {
    TruncatedSeries s(order);
    s[0] = c0;
    for (std::size_t k = 1; k <= order; ++k) s[k] = oracle::random_in_disk(rng);
    return s;
}

NormalizedFunction random_normalized(std::mt19937_64& rng, std::size_t order) {
    TruncatedSeries s = random_series(rng, order, 0.0);
    s[1] = 1.0;
    return NormalizedFunction(s);
}

}  // namespace

TEST_CASE("linear_combine") {
    CHECK(linear_combine(1.0, real_series({0, 1, 0}), 1.0, real_series({0, 0, 1})) == real_series({0, 1, 1}));
    CHECK(linear_combine(2.0, real_series({1, 0, 0}), 0.0, real_series({5, 6, 7})) == real_series({2, 0, 0}));
    CHECK(linear_combine(1.0, real_series({0, 1, 1.5, 2}), -1.0, real_series({0, 1, 0, 0})) ==
          real_series({0, 0, 1.5, 2}));
    // result order is the smaller operand order
    CHECK(linear_combine(1.0, real_series({1, 2, 3}), 1.0, real_series({1, 1})).order() == 1);
}

TEST_CASE("mul") {
    CHECK(mul(real_series({1, 1}), real_series({1, -1})) == real_series({1, 0}));
    CHECK(mul(real_series({1, 1, 0}), real_series({1, -1, 0})) == real_series({1, 0, -1}));
    const TruncatedSeries s = real_series({0.25, -3, 2.5, 7});
    CHECK(mul(s, real_series({1, 0, 0, 0})) == s);

    // (1-z)^-3 from the binomial oracle times (1-z)^3
    std::vector<Complex> inv(4);
    for (int n = 0; n <= 3; ++n) inv[n] = oracle::binomial(n + 2, 2);
    CHECK(TruncatedSeries(inv) == real_series({1, 3, 6, 10}));
    CHECK(mul(TruncatedSeries(inv), real_series({1, -3, 3, -1})) == real_series({1, 0, 0, 0}));
}

TEST_CASE("div") {
    CHECK(div(real_series({1, 0, 0, 0}), real_series({1, -1, 0, 0})) == real_series({1, 1, 1, 1}));
    const TruncatedSeries s = real_series({2, -1, 0.5});
    CHECK(div(s, real_series({1, 0, 0})) == s);
    CHECK(div(real_series({0, 3, 0}), real_series({1, -1, 0})) == real_series({0, 3, 3}));

    CHECK_THROWS_AS(div(s, real_series({0, 1, 0})), DivisionByNonUnit);
    try {
        div(s, real_series({0, 1, 0}));
    } catch (const DivisionByNonUnit& e) {
        CHECK(e.value() == Complex{0.0});
    }
}

TEST_CASE("derivative and antiderivative") {
    CHECK(derivative(real_series({0, 1, 1.5, 2, 2.5})) == real_series({1, 3, 6, 10}));
    CHECK(derivative(real_series({4, 0})) == real_series({0}));
    CHECK(derivative(real_series({0, 1})) == real_series({1}));
    CHECK_THROWS_AS(derivative(real_series({4})), std::invalid_argument);

    CHECK(antiderivative(real_series({1, 3, 6, 10})) == real_series({0, 1, 1.5, 2, 2.5}));
    CHECK(antiderivative(real_series({0})) == real_series({0, 0}));
    CHECK(antiderivative(real_series({1, 0, 1.5})) == real_series({0, 1, 0, 0.5}));
}

TEST_CASE("compose") {
    const TruncatedSeries s = real_series({1, -2, 0.5, 3});
    CHECK(compose(s, TruncatedSeries::identity(3)) == s);

    // (1+z)/(1-z) at z^2, checked against explicit substitution
    const auto expected = oracle::substitute({1, 2, 2, 2}, {0, 0, 1}, 3);
    CHECK(TruncatedSeries(expected) == real_series({1, 0, 2, 0}));
    CHECK(compose(real_series({1, 2, 2, 2}), real_series({0, 0, 1, 0})) == real_series({1, 0, 2, 0}));

    CHECK(TruncatedSeries(oracle::substitute({0, 1, 1}, {0, 1, 1}, 3)) == real_series({0, 1, 2, 2}));
    CHECK(compose(real_series({0, 1, 1}), real_series({0, 1, 1})) == real_series({0, 1, 2}));

    CHECK_THROWS_AS(compose(s, real_series({0.5, 1, 0, 0})), CompositionAtNonOrigin);
}

TEST_CASE("exp_series") {
    CHECK(exp_series(TruncatedSeries(5)) == TruncatedSeries::constant(1.0, 5));

    // -3 log(1 - z) against the binomial oracle for (1-z)^-3
    const TruncatedSeries log_one_minus_z = real_series({0, -1, -0.5, -1.0 / 3.0});
    const TruncatedSeries e = exp_series(linear_combine(-3.0, log_one_minus_z, 0.0, log_one_minus_z));
    for (int n = 0; n <= 3; ++n) CHECK(std::abs(e[n] - oracle::binomial(n + 2, 2)) <= 1e-14);

    const TruncatedSeries ez = exp_series(real_series({0, 1, 0, 0}));
    const double factorial_reciprocal[] = {1.0, 1.0, 0.5, 1.0 / 6.0};
    for (int n = 0; n <= 3; ++n) CHECK(std::abs(ez[n] - factorial_reciprocal[n]) <= 1e-16);

    CHECK_THROWS_AS(exp_series(real_series({0.1, 1})), ExpOfNonZeroConstant);
}

TEST_CASE("pow_real") {
    const TruncatedSeries r = pow_real(real_series({1, -1, 0, 0, 0}), -3.0);
    for (int n = 0; n <= 4; ++n) CHECK(r[n] == Complex(oracle::binomial(n + 2, 2)));
    CHECK(r == real_series({1, 3, 6, 10, 15}));

    CHECK(pow_real(real_series({1, 0.3, -2, 5}), 0.0) == TruncatedSeries::constant(1.0, 3));

    // binomial series of (1 - z^2)^(1/2)
    const TruncatedSeries h = pow_real(real_series({1, 0, -1, 0, 0}), 0.5);
    CHECK(max_residual(h, real_series({1, 0, -0.5, 0, -0.125})) <= 1e-16);

    CHECK_THROWS_AS(pow_real(real_series({2, 1}), 0.5), PowOfNonUnitConstant);
    CHECK_THROWS_AS(log_series(real_series({0.5, 1})), PowOfNonUnitConstant);

    // agrees with exp(alpha log s)
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const TruncatedSeries s = random_series(rng, 10, 1.0);
        const double alpha = std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
        const TruncatedSeries via_exp = exp_series(linear_combine(alpha, log_series(s), 0.0, s));
        CHECK(max_residual(pow_real(s, alpha), via_exp) <= 1e-9);
    }
}

TEST_CASE("log_ratio") {
    CHECK(log_ratio(NormalizedFunction(TruncatedSeries::identity(5))) == TruncatedSeries(4));

    const NormalizedFunction f1(real_series({0, 1, 1.5, 2, 2.5}));
    const TruncatedSeries l = log_ratio(f1);
    // gamma1 = a2/2, gamma2 = (a3 - a2^2/2)/2 with a2 = 3/2, a3 = 2
    CHECK(std::abs(l[1] - 1.5) <= 1e-15);
    CHECK(std::abs(l[1] / 2.0 - 0.75) <= 1e-15);
    CHECK(std::abs(l[2] - 7.0 / 8.0) <= 1e-15);
    CHECK(std::abs(l[2] / 2.0 - 7.0 / 16.0) <= 1e-15);
}

TEST_CASE("compositional_inverse") {
    const NormalizedFunction id(TruncatedSeries::identity(6));
    CHECK(compositional_inverse(id) == TruncatedSeries::identity(6));

    // A2 = -a2, A3 = 2a2^2 - a3, A4 = -a4 + 5a2a3 - 5a2^3 with the f1 prefix
    const NormalizedFunction f1(real_series({0, 1, 1.5, 2, 2.5}));
    const TruncatedSeries inv = compositional_inverse(f1);
    CHECK(std::abs(inv[2] + 1.5) <= 1e-14);
    CHECK(std::abs(inv[3] - 2.5) <= 1e-14);
    CHECK(std::abs(inv[4] + 35.0 / 8.0) <= 1e-14);
    CHECK(max_residual(compose(f1.series(), inv), TruncatedSeries::identity(4)) <= 1e-14);

    const NormalizedFunction g1(real_series({0, 1, -0.5, 0, 0}));
    CHECK(max_residual(compositional_inverse(g1), real_series({0, 1, 0.5, 0.5, 0.625})) <= 1e-15);
}

TEST_CASE("normalized function precondition") {
    CHECK_THROWS_AS(NormalizedFunction(real_series({0, 2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(NormalizedFunction(real_series({1e-300, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(NormalizedFunction(real_series({0})), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Complex>{}), std::invalid_argument);
}

TEST_CASE("property: inverse round trip on random order-10 series") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const NormalizedFunction f = random_normalized(rng, 10);
        const TruncatedSeries inv = compositional_inverse(f);
        CHECK(max_residual(compose(f.series(), inv), TruncatedSeries::identity(10)) <= 1e-10);
    }
}

TEST_CASE("property: mul/div and exp/log round trips") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const TruncatedSeries s = random_series(rng, 10, oracle::random_in_disk(rng));
        // divisor coefficients kept inside |z| <= 1/2 so 1/t stays tame
        TruncatedSeries t = random_series(rng, 10, 1.0);
        for (std::size_t k = 1; k <= 10; ++k) t[k] *= 0.5;
        CHECK(max_residual(div(mul(s, t), t), s) <= 1e-12);

        const TruncatedSeries u = random_series(rng, 10, 1.0);
        CHECK(max_residual(exp_series(log_series(u)), u) <= 1e-12);
    }
}

TEST_CASE("property: derivative undoes antiderivative") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const TruncatedSeries s = random_series(rng, 9, oracle::random_in_disk(rng));
        CHECK(max_residual(derivative(antiderivative(s)), s) <= 1e-15);
    }
}

TEST_CASE("property: compose matches substitute-and-expand") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const TruncatedSeries outer = random_series(rng, 6, oracle::random_in_disk(rng));
        const TruncatedSeries inner = random_series(rng, 6, 0.0);
        const oracle::Coeffs expected = oracle::substitute(
            {outer.coeffs().begin(), outer.coeffs().end()}, {inner.coeffs().begin(), inner.coeffs().end()}, 6);
        CHECK(max_residual(compose(outer, inner), TruncatedSeries(expected)) <= 1e-12);
    }
}
