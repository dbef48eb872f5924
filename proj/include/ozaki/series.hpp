#pragma once

// Truncated formal power series with complex double coefficients.
//
// A series of order N stores the Taylor coefficients of z^0..z^N. Binary
// operations truncate to the smaller operand order; nothing is ever
// extended past the order the inputs actually determine.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ozaki {

using Complex = std::complex<double>;

class SeriesError : public std::domain_error {
public:
    SeriesError(const std::string& what, Complex offending)
        : std::domain_error(what), value_(offending) {}

    Complex value() const noexcept { return value_; }

private:
    Complex value_;
};

struct DivisionByNonUnit : SeriesError {
    explicit DivisionByNonUnit(Complex c0)
        : SeriesError("division by a series with zero constant term", c0) {}
};

struct CompositionAtNonOrigin : SeriesError {
    explicit CompositionAtNonOrigin(Complex c0)
        : SeriesError("inner series of a composition must vanish at the origin", c0) {}
};

struct ExpOfNonZeroConstant : SeriesError {
    explicit ExpOfNonZeroConstant(Complex c0)
        : SeriesError("exp_series requires a zero constant term", c0) {}
};

struct PowOfNonUnitConstant : SeriesError {
    explicit PowOfNonUnitConstant(Complex c0)
        : SeriesError("power/log of a series requires constant term exactly 1", c0) {}
};

class TruncatedSeries {
public:
    // Zero series of the given order.
    explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    // Throws std::invalid_argument on an empty coefficient list.
    explicit TruncatedSeries(std::vector<Complex> coeffs);
    TruncatedSeries(std::initializer_list<Complex> coeffs)
        : TruncatedSeries(std::vector<Complex>(coeffs)) {}

    static TruncatedSeries constant(Complex c, std::size_t order);
    // z truncated at order (order >= 1).
    static TruncatedSeries identity(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    Complex operator[](std::size_t k) const { return coeffs_[k]; }
    Complex& operator[](std::size_t k) { return coeffs_[k]; }

    // Coefficient k, or zero past the stored order.
    Complex coeff_or_zero(std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }

    // Drops coefficients above new_order; new_order must not exceed order().
    TruncatedSeries truncated(std::size_t new_order) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Complex> coeffs_;
};

// f(z) = z + a2 z^2 + ... ; coefficients 0 and 1 are exactly 0 and 1.
class NormalizedFunction {
public:
    // Throws std::invalid_argument unless s[0] == 0 and s[1] == 1 exactly
    // and order >= 1.
    explicit NormalizedFunction(TruncatedSeries s);

    const TruncatedSeries& series() const noexcept { return series_; }
    std::size_t order() const noexcept { return series_.order(); }
    // a_n, zero past the stored order.
    Complex a(std::size_t n) const noexcept { return series_.coeff_or_zero(n); }

private:
    TruncatedSeries series_;
};

TruncatedSeries linear_combine(Complex alpha, const TruncatedSeries& s, Complex beta,
                               const TruncatedSeries& t);
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries div(const TruncatedSeries& s, const TruncatedSeries& t);

// Order drops by one; throws std::invalid_argument at order 0.
TruncatedSeries derivative(const TruncatedSeries& s);
// Order grows by one; integration constant zero.
TruncatedSeries antiderivative(const TruncatedSeries& s);

// outer(inner(z)), Horner accumulation; inner[0] must be zero.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

TruncatedSeries exp_series(const TruncatedSeries& s);
// Logarithm of a series with constant term exactly 1.
TruncatedSeries log_series(const TruncatedSeries& s);
// s^alpha for s[0] == 1.
TruncatedSeries pow_real(const TruncatedSeries& s, double alpha);

// log(f(z)/z); the logarithmic coefficients are half of its entries.
TruncatedSeries log_ratio(const NormalizedFunction& f);

// F with f(F(w)) = w to the order of f, by Lagrange inversion:
// [w^n] F = (1/n) [z^(n-1)] (z/f(z))^n.
TruncatedSeries compositional_inverse(const NormalizedFunction& f);

}  // namespace ozaki
