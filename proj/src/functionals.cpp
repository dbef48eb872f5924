#include "ozaki/functionals.hpp"

#include <cmath>

namespace ozaki {

InverseCoeffs inverse_coeffs(const CoeffTriple& t) {
    const auto [a2, a3, a4] = t;
    return {-a2, -a3 + 2.0 * a2 * a2, -a4 + 5.0 * a2 * a3 - 5.0 * a2 * a2 * a2};
}

LogCoeffs log_coeffs(const CoeffTriple& t) {
    return {t.a2 / 2.0, (t.a3 - t.a2 * t.a2 / 2.0) / 2.0};
}

LogInverseCoeffs log_inverse_coeffs(const CoeffTriple& t) {
    const auto [a2, a3, a4] = t;
    return {-a2 / 2.0, -(a3 - 1.5 * a2 * a2) / 2.0,
            -(a4 - 4.0 * a2 * a3 + (10.0 / 3.0) * a2 * a2 * a2) / 2.0};
}

SchwarzianValues schwarzian_initial(const CoeffTriple& t) {
    const auto [a2, a3, a4] = t;
    return {6.0 * (a3 - a2 * a2), 24.0 * (a4 - 3.0 * a2 * a3 + 2.0 * a2 * a2 * a2)};
}

double toeplitz_t21_log(const CoeffTriple& t) {
    if (std::abs(t.a2.imag()) > 1e-12) {
        throw NonRealSecondCoefficient(t.a2);
    }
    const double a2 = t.a2.real();
    const double a2_sq = a2 * a2;
    return (-a2_sq * a2_sq + 4.0 * a2_sq + 4.0 * a2_sq * t.a3.real() - 4.0 * std::norm(t.a3)) / 16.0;
}

NormalizedFunction rotate_to_real_a2(const NormalizedFunction& f) {
    const Complex a2 = f.a(2);
    if (a2 == Complex{0.0}) {
        return f;
    }
    const double theta = -std::arg(a2);
    TruncatedSeries s = f.series();
    for (std::size_t n = 2; n <= s.order(); ++n) {
        s[n] *= std::polar(1.0, theta * static_cast<double>(n - 1));
    }
    s[2] = std::abs(a2);
    return NormalizedFunction(std::move(s));
}

SuccessiveDiffs successive_diffs(const CoeffTriple& t) {
    const InverseCoeffs inv = inverse_coeffs(t);
    const LogInverseCoeffs li = log_inverse_coeffs(t);
    return {std::abs(inv.A3 - inv.A2), std::abs(li.Gamma3 - li.Gamma2)};
}

namespace {

std::vector<Complex> halved_tail(const TruncatedSeries& log_series) {
    std::vector<Complex> out;
    for (std::size_t n = 1; n <= log_series.order(); ++n) {
        out.push_back(log_series[n] / 2.0);
    }
    return out;
}

}  // namespace

std::vector<Complex> logarithmic_coefficients(const NormalizedFunction& f) {
    return halved_tail(log_ratio(f));
}

std::vector<Complex> logarithmic_inverse_coefficients(const NormalizedFunction& f) {
    return halved_tail(log_ratio(NormalizedFunction(compositional_inverse(f))));
}

FunctionalReport full_report(const NormalizedFunction& f) {
    if (f.order() < 4) {
        throw std::invalid_argument("full_report needs order >= 4");
    }
    const CoeffTriple t = CoeffTriple::of(f);

    FunctionalReport r{};
    r.coeffs = t;
    const InverseCoeffs inv = inverse_coeffs(t);
    r.A2 = inv.A2;
    r.A3 = inv.A3;
    r.A4 = inv.A4;

    const TruncatedSeries series_inverse = compositional_inverse(f);
    const Complex formula[] = {inv.A2, inv.A3, inv.A4};
    for (int k = 0; k < 3; ++k) {
        const double residual = std::abs(formula[k] - series_inverse[k + 2]);
        if (!(residual <= kInverseCrossCheckTol)) {
            throw InconsistentInverse(k + 2, residual);
        }
    }

    const LogCoeffs lc = log_coeffs(t);
    r.gamma1 = lc.gamma1;
    r.gamma2 = lc.gamma2;
    const LogInverseCoeffs li = log_inverse_coeffs(t);
    r.Gamma1 = li.Gamma1;
    r.Gamma2 = li.Gamma2;
    r.Gamma3 = li.Gamma3;
    const SchwarzianValues sv = schwarzian_initial(t);
    r.S3 = sv.S3;
    r.S4 = sv.S4;
    r.T21_log = toeplitz_t21_log(CoeffTriple::of(rotate_to_real_a2(f)));
    const SuccessiveDiffs d = successive_diffs(t);
    r.diff_A = d.diff_A;
    r.diff_Gamma = d.diff_Gamma;
    return r;
}

FunctionalReport full_report(const OzakiFunction& f) { return full_report(f.f); }

}  // namespace ozaki
