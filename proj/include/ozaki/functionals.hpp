#pragma once

// Coefficient functionals of a normalized function: inverse coefficients,
// logarithmic and logarithmic-inverse coefficients, initial Schwarzian
// derivatives, the 2x2 Hermitian-Toeplitz determinant of logarithmic
// coefficients, and the successive differences |A3 - A2|, |Gamma3 - Gamma2|.

#include <stdexcept>
#include <vector>

#include "ozaki/classes.hpp"
#include "ozaki/coeff_triple.hpp"
#include "ozaki/series.hpp"

namespace ozaki {

struct InverseCoeffs {
    Complex A2, A3, A4;
};

struct LogCoeffs {
    Complex gamma1, gamma2;
};

struct LogInverseCoeffs {
    Complex Gamma1, Gamma2, Gamma3;
};

struct SchwarzianValues {
    Complex S3, S4;
};

struct SuccessiveDiffs {
    double diff_A;
    double diff_Gamma;
};

struct NonRealSecondCoefficient : std::domain_error {
    explicit NonRealSecondCoefficient(Complex a2)
        : std::domain_error("Toeplitz determinant formula needs a real second coefficient"), a2_(a2) {}
    Complex a2() const noexcept { return a2_; }

private:
    Complex a2_;
};

// Thrown by full_report when the closed-form inverse coefficients disagree
// with the series inverse.
struct InconsistentInverse : std::logic_error {
    InconsistentInverse(int index, double residual)
        : std::logic_error("inverse coefficient A" + std::to_string(index) +
                           " disagrees with the series inverse"),
          index_(index), residual_(residual) {}
    int index() const noexcept { return index_; }
    double residual() const noexcept { return residual_; }

private:
    int index_;
    double residual_;
};

InverseCoeffs inverse_coeffs(const CoeffTriple& t);
LogCoeffs log_coeffs(const CoeffTriple& t);
LogInverseCoeffs log_inverse_coeffs(const CoeffTriple& t);
SchwarzianValues schwarzian_initial(const CoeffTriple& t);

// (1/16)(-a2^4 + 4 a2^2 + 4 a2^2 Re a3 - 4 |a3|^2) = gamma1^2 - |gamma2|^2 for
// real a2. Throws NonRealSecondCoefficient if |Im a2| > 1e-12.
double toeplitz_t21_log(const CoeffTriple& t);

// e^{-i theta} f(e^{i theta} z) with theta making a2 real and non-negative.
NormalizedFunction rotate_to_real_a2(const NormalizedFunction& f);

SuccessiveDiffs successive_diffs(const CoeffTriple& t);

// gamma_1..gamma_{N-1} from log(f/z).
std::vector<Complex> logarithmic_coefficients(const NormalizedFunction& f);
// Gamma_1..Gamma_{N-1} from log(F/w), F the compositional inverse.
std::vector<Complex> logarithmic_inverse_coefficients(const NormalizedFunction& f);

struct FunctionalReport {
    CoeffTriple coeffs;
    Complex A2, A3, A4;
    Complex gamma1, gamma2;
    Complex Gamma1, Gamma2, Gamma3;
    Complex S3, S4;
    double T21_log;
    double diff_A;
    double diff_Gamma;
};

inline constexpr double kInverseCrossCheckTol = 1e-10;

// Requires order >= 4. T21_log is taken after rotation to real a2; the
// inverse coefficients are cross-checked against compositional_inverse.
FunctionalReport full_report(const NormalizedFunction& f);
FunctionalReport full_report(const OzakiFunction& f);

}  // namespace ozaki
