#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ozaki/functionals.hpp"

using namespace ozaki;

namespace {

constexpr CoeffTriple kF1{1.5, 2.0, 2.5};
constexpr CoeffTriple kF2{0.0, 0.5, 0.0};
constexpr CoeffTriple kG1{-0.5, 0.0, 0.0};
constexpr CoeffTriple kG2{0.0, -1.0 / 6.0, 0.0};
constexpr CoeffTriple kZero{};

bool near(Complex a, Complex b, double tol = 1e-15) { return std::abs(a - b) <= tol; }

NormalizedFunction random_member(std::mt19937_64& rng, ClassLabel label, std::size_t order) {
    static const BlaschkeSampler sampler(3);
    return build_member(label, schwarz_from_blaschke(sampler(rng), order), order).f;
}

}  // namespace

TEST_CASE("inverse_coeffs") {
    const InverseCoeffs f1 = inverse_coeffs(kF1);
    CHECK(near(f1.A2, -1.5));
    CHECK(near(f1.A3, 2.5));
    CHECK(near(f1.A4, -35.0 / 8.0));

    const InverseCoeffs zero = inverse_coeffs(kZero);
    CHECK(zero.A2 == Complex{0.0});
    CHECK(zero.A3 == Complex{0.0});
    CHECK(zero.A4 == Complex{0.0});

    const InverseCoeffs g1 = inverse_coeffs(kG1);
    CHECK(near(g1.A2, 0.5));
    CHECK(near(g1.A3, 0.5));
    CHECK(near(g1.A4, 0.625));
}

TEST_CASE("log_coeffs") {
    const LogCoeffs f1 = log_coeffs(kF1);
    CHECK(near(f1.gamma1, 0.75));
    CHECK(near(f1.gamma2, 7.0 / 16.0));
    const LogCoeffs zero = log_coeffs(kZero);
    CHECK(zero.gamma1 == Complex{0.0});
    CHECK(zero.gamma2 == Complex{0.0});
    const LogCoeffs f2 = log_coeffs(kF2);
    CHECK(near(f2.gamma1, 0.0));
    CHECK(near(f2.gamma2, 0.25));
}

TEST_CASE("log_inverse_coeffs") {
    const LogInverseCoeffs f1 = log_inverse_coeffs(kF1);
    CHECK(near(f1.Gamma1, -0.75));
    CHECK(near(f1.Gamma2, 11.0 / 16.0));
    CHECK(near(f1.Gamma3, -7.0 / 8.0));

    const LogInverseCoeffs zero = log_inverse_coeffs(kZero);
    CHECK(zero.Gamma3 == Complex{0.0});

    const LogInverseCoeffs g1 = log_inverse_coeffs(kG1);
    CHECK(near(g1.Gamma1, 0.25));
    CHECK(near(g1.Gamma2, 3.0 / 16.0));
    CHECK(near(g1.Gamma3, 5.0 / 24.0));
}

TEST_CASE("schwarzian_initial") {
    const SchwarzianValues f2 = schwarzian_initial(kF2);
    CHECK(near(f2.S3, 3.0));
    CHECK(near(f2.S4, 0.0));
    const SchwarzianValues zero = schwarzian_initial(kZero);
    CHECK(zero.S3 == Complex{0.0});
    CHECK(zero.S4 == Complex{0.0});
    const SchwarzianValues g1 = schwarzian_initial(kG1);
    CHECK(near(g1.S3, -1.5));
    CHECK(near(g1.S4, -6.0));
}

TEST_CASE("toeplitz_t21_log") {
    CHECK(toeplitz_t21_log(kF1) == doctest::Approx(95.0 / 256.0).epsilon(1e-15));
    CHECK(toeplitz_t21_log(kF2) == doctest::Approx(-1.0 / 16.0).epsilon(1e-15));
    CHECK(toeplitz_t21_log(kG1) == doctest::Approx(15.0 / 256.0).epsilon(1e-15));
    CHECK(toeplitz_t21_log(kG2) == doctest::Approx(-1.0 / 144.0).epsilon(1e-15));

    // gamma1^2 - |gamma2|^2 for real a2
    const CoeffTriple t{0.8, Complex{0.3, -0.6}, 0.0};
    const LogCoeffs g = log_coeffs(t);
    CHECK(std::abs(toeplitz_t21_log(t) - (std::norm(g.gamma1) - std::norm(g.gamma2))) <= 1e-15);

    CHECK_THROWS_AS(toeplitz_t21_log({Complex{0.0, 1.5}, 0.0, 0.0}), NonRealSecondCoefficient);
    CHECK_NOTHROW(toeplitz_t21_log({Complex{0.5, 1e-13}, 0.0, 0.0}));
}

TEST_CASE("rotate_to_real_a2") {
    const NormalizedFunction f1 = extremal_member(Extremal::f1, 6).f;
    CHECK(rotate_to_real_a2(f1).series() == f1.series());

    TruncatedSeries s(4);
    s[1] = 1.0;
    s[2] = Complex{0.0, 1.5};
    const NormalizedFunction rotated = rotate_to_real_a2(NormalizedFunction(s));
    CHECK(rotated.a(2) == Complex{1.5});
    CHECK(rotated.a(1) == Complex{1.0});

    const NormalizedFunction id(TruncatedSeries::identity(5));
    CHECK(rotate_to_real_a2(id).series() == id.series());

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        TruncatedSeries r(8);
        r[1] = 1.0;
        for (std::size_t k = 2; k <= 8; ++k) r[k] = oracle::random_in_disk(rng, 3.0);
        const NormalizedFunction f(r);
        const NormalizedFunction g = rotate_to_real_a2(f);
        CHECK(g.a(2).imag() == 0.0);
        CHECK(g.a(2).real() >= 0.0);
        for (std::size_t k = 1; k <= 8; ++k) CHECK(std::abs(std::abs(g.a(k)) - std::abs(f.a(k))) <= 1e-14);
    }
}

TEST_CASE("successive_diffs") {
    const SuccessiveDiffs f1 = successive_diffs(kF1);
    CHECK(f1.diff_A == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(f1.diff_Gamma == doctest::Approx(25.0 / 16.0).epsilon(1e-15));
    const SuccessiveDiffs zero = successive_diffs(kZero);
    CHECK(zero.diff_A == 0.0);
    CHECK(zero.diff_Gamma == 0.0);
    const SuccessiveDiffs g1 = successive_diffs(kG1);
    CHECK(g1.diff_A <= 1e-15);
    CHECK(std::abs(g1.diff_Gamma - 1.0 / 48.0) <= 1e-15);
}

TEST_CASE("full_report") {
    const FunctionalReport f1 = full_report(extremal_member(Extremal::f1, 8));
    CHECK(std::abs(f1.T21_log - 95.0 / 256.0) <= 1e-12);
    CHECK(std::abs(std::abs(f1.Gamma1) - 0.75) <= 1e-12);
    CHECK(std::abs(std::abs(f1.Gamma2) - 11.0 / 16.0) <= 1e-12);
    CHECK(std::abs(std::abs(f1.Gamma3) - 7.0 / 8.0) <= 1e-12);
    CHECK(std::abs(f1.diff_A - 4.0) <= 1e-12);
    CHECK(std::abs(f1.diff_Gamma - 25.0 / 16.0) <= 1e-12);

    const FunctionalReport id = full_report(NormalizedFunction(TruncatedSeries::identity(6)));
    CHECK(id.T21_log == 0.0);
    for (Complex v : {id.A2, id.A3, id.A4, id.gamma1, id.gamma2, id.Gamma1, id.Gamma2, id.Gamma3, id.S3, id.S4})
        CHECK(v == Complex{0.0});
    CHECK(id.diff_A == 0.0);
    CHECK(id.diff_Gamma == 0.0);

    const FunctionalReport g1 = full_report(extremal_member(Extremal::g1, 8));
    CHECK(std::abs(g1.T21_log - 15.0 / 256.0) <= 1e-12);
    CHECK(std::abs(std::abs(g1.Gamma1) - 0.25) <= 1e-12);
    CHECK(std::abs(std::abs(g1.Gamma2) - 3.0 / 16.0) <= 1e-12);
    CHECK(std::abs(std::abs(g1.Gamma3) - 5.0 / 24.0) <= 1e-12);
    CHECK(std::abs(std::abs(g1.S3) - 1.5) <= 1e-12);
    CHECK(std::abs(std::abs(g1.S4) - 6.0) <= 1e-12);

    // T21 is taken after rotation, so a rotated f1 reports the same value
    TruncatedSeries rotated = extremal_member(Extremal::f1, 8).f.series();
    for (std::size_t k = 2; k <= 8; ++k) rotated[k] *= std::polar(1.0, 0.9 * static_cast<double>(k - 1));
    CHECK(std::abs(full_report(NormalizedFunction(rotated)).T21_log - 95.0 / 256.0) <= 1e-12);

    TruncatedSeries short_series = TruncatedSeries::identity(3);
    CHECK_THROWS_AS(full_report(NormalizedFunction(short_series)), std::invalid_argument);
}

TEST_CASE("general logarithmic coefficients") {
    const NormalizedFunction f1 = extremal_member(Extremal::f1, 8).f;
    const std::vector<Complex> gamma = logarithmic_coefficients(f1);
    REQUIRE(gamma.size() == 7);
    CHECK(near(gamma[0], 0.75));
    CHECK(near(gamma[1], 7.0 / 16.0));

    const std::vector<Complex> Gamma = logarithmic_inverse_coefficients(f1);
    REQUIRE(Gamma.size() == 7);
    CHECK(near(Gamma[0], -0.75, 1e-14));
    CHECK(near(Gamma[1], 11.0 / 16.0, 1e-14));
    CHECK(near(Gamma[2], -7.0 / 8.0, 1e-14));
}

TEST_CASE("property: formulas agree with series computations") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 2000; ++trial) {
        const ClassLabel label = trial % 2 ? ClassLabel::G : ClassLabel::F;
        const NormalizedFunction f = random_member(rng, label, 8);
        const CoeffTriple t = CoeffTriple::of(f);

        const InverseCoeffs A = inverse_coeffs(t);
        const TruncatedSeries inv = compositional_inverse(f);
        CHECK(near(A.A2, inv[2], 1e-10));
        CHECK(near(A.A3, inv[3], 1e-10));
        CHECK(near(A.A4, inv[4], 1e-10));

        const LogCoeffs g = log_coeffs(t);
        const TruncatedSeries l = log_ratio(f);
        CHECK(near(g.gamma1, l[1] / 2.0, 1e-12));
        CHECK(near(g.gamma2, l[2] / 2.0, 1e-12));

        const LogInverseCoeffs G = log_inverse_coeffs(t);
        const std::vector<Complex> Gs = logarithmic_inverse_coefficients(f);
        CHECK(near(G.Gamma1, Gs[0], 1e-10));
        CHECK(near(G.Gamma2, Gs[1], 1e-10));
        CHECK(near(G.Gamma3, Gs[2], 1e-10));

        CHECK(G.Gamma1 == -g.gamma1);
        CHECK(A.A2 == -t.a2);
    }
}

TEST_CASE("property: rotation leaves homogeneous moduli unchanged") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 2000; ++trial) {
        const NormalizedFunction f = random_member(rng, trial % 2 ? ClassLabel::G : ClassLabel::F, 8);
        const CoeffTriple before = CoeffTriple::of(f);
        const CoeffTriple after = CoeffTriple::of(rotate_to_real_a2(f));
        const LogInverseCoeffs Gb = log_inverse_coeffs(before), Ga = log_inverse_coeffs(after);
        const SchwarzianValues Sb = schwarzian_initial(before), Sa = schwarzian_initial(after);
        CHECK(std::abs(std::abs(Gb.Gamma2) - std::abs(Ga.Gamma2)) <= 1e-12);
        CHECK(std::abs(std::abs(Gb.Gamma3) - std::abs(Ga.Gamma3)) <= 1e-12);
        CHECK(std::abs(std::abs(Sb.S3) - std::abs(Sa.S3)) <= 1e-12);
        CHECK(std::abs(std::abs(Sb.S4) - std::abs(Sa.S4)) <= 1e-12);
    }
}
