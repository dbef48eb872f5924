#pragma once

// Members of the Ozaki close-to-convex classes
//   F: Re(1 + z f''/f') > -1/2,   G: Re(1 + z f''/f') < 3/2,
// built from Schwarz or Caratheodory data, together with the closed-form
// extremal functions and the direct coefficient formulas used to
// cross-check the series construction.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ozaki/coeff_triple.hpp"
#include "ozaki/series.hpp"

namespace ozaki {

enum class ClassLabel { F, G };

std::string_view to_string(ClassLabel label);
// Accepts "F" or "G"; throws std::invalid_argument otherwise.
ClassLabel parse_class_label(std::string_view text);

enum class Extremal { f1, f2, g1, g2 };

std::string_view to_string(Extremal e);
ClassLabel class_of(Extremal e);

struct UnknownExtremalName : std::invalid_argument {
    explicit UnknownExtremalName(std::string name)
        : std::invalid_argument("unknown extremal function '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

Extremal parse_extremal(std::string_view name);

// Coefficients c1..cN of w(z) = sum c_k z^k; c[0] holds c1. Coefficients
// past the stored length are zero.
struct SchwarzCoeffs {
    std::vector<Complex> c;

    Complex at(std::size_t k) const noexcept { return k >= 1 && k <= c.size() ? c[k - 1] : Complex{}; }
};

// Coefficients p1..pN of p(z) = 1 + sum p_k z^k; p[0] holds p1.
struct CaratheodoryCoeffs {
    std::vector<Complex> p;

    Complex at(std::size_t k) const noexcept { return k >= 1 && k <= p.size() ? p[k - 1] : Complex{}; }
    // |p_k| <= 2 + tol for every stored k.
    bool within_coefficient_bound(double tol = 1e-12) const;
};

// Parameters of the Libera-Zlotkiewicz representation of p2, p3, p4.
class LiberaParams {
public:
    // Throws std::invalid_argument unless p1 in [0, 2] and |xi|, |eta|, |gamma| <= 1.
    LiberaParams(double p1, Complex xi, Complex eta, Complex gamma);

    double p1() const noexcept { return p1_; }
    Complex xi() const noexcept { return xi_; }
    Complex eta() const noexcept { return eta_; }
    Complex gamma() const noexcept { return gamma_; }
    double t() const noexcept { return 4.0 - p1_ * p1_; }

private:
    double p1_;
    Complex xi_;
    Complex eta_;
    Complex gamma_;
};

struct BlaschkeProduct {
    double rotation = 0.0;
    std::vector<Complex> zeros;
};

// w(z) = z * (weight * B1(z) + (1 - weight) * B2(z)); B2 only when secondary is set.
struct BlaschkeSpec {
    BlaschkeProduct primary;
    std::optional<BlaschkeProduct> secondary;
    double mixture_weight = 1.0;
};

struct ZeroOutsideDisk : std::invalid_argument {
    ZeroOutsideDisk(std::size_t index, Complex zero)
        : std::invalid_argument("Blaschke zero " + std::to_string(index) + " has modulus >= 1"),
          index_(index), zero_(zero) {}
    std::size_t index() const noexcept { return index_; }
    Complex zero() const noexcept { return zero_; }

private:
    std::size_t index_;
    Complex zero_;
};

struct InvalidSchwarzPrefix : std::invalid_argument {
    InvalidSchwarzPrefix(std::size_t index, Complex value)
        : std::invalid_argument("Schwarz coefficient c" + std::to_string(index) +
                                " violates the coefficient region"),
          index_(index), value_(value) {}
    std::size_t index() const noexcept { return index_; }
    Complex value() const noexcept { return value_; }

private:
    std::size_t index_;
    Complex value_;
};

struct ExtremalTag {
    Extremal name;
};

using Provenance = std::variant<SchwarzCoeffs, CaratheodoryCoeffs, ExtremalTag>;

struct OzakiFunction {
    ClassLabel label;
    NormalizedFunction f;
    Provenance provenance;
};

SchwarzCoeffs schwarz_from_blaschke(const BlaschkeSpec& spec, std::size_t order);

// Index (1..3) of the first violated Schwarz coefficient inequality, or 0.
std::size_t first_schwarz_violation(const SchwarzCoeffs& c, double tol = 1e-12);
bool validate_schwarz_prefix(const SchwarzCoeffs& c, double tol = 1e-12);

// p = (1 + w) / (1 - w), coefficients p1..pN.
CaratheodoryCoeffs caratheodory_from_schwarz(const SchwarzCoeffs& c, std::size_t order);
// w = (p - 1) / (p + 1), coefficients c1..cN.
SchwarzCoeffs schwarz_from_caratheodory(const CaratheodoryCoeffs& p, std::size_t order);

// (p1, p2, p3, p4) from the Libera-Zlotkiewicz formulas.
CaratheodoryCoeffs libera_expand(const LiberaParams& params);

// Solves 1 + z f''/f' = (3p - 1)/2 (F) or (3 - p)/2 (G) with p = (1 + w)/(1 - w).
OzakiFunction build_member(ClassLabel label, const SchwarzCoeffs& w, std::size_t order);
OzakiFunction build_member(ClassLabel label, const CaratheodoryCoeffs& p, std::size_t order);

OzakiFunction extremal_member(Extremal name, std::size_t order);
OzakiFunction extremal_member(std::string_view name, std::size_t order);

CoeffTriple coeffs_from_caratheodory_direct(ClassLabel label, const CaratheodoryCoeffs& p);
CoeffTriple coeffs_from_schwarz_direct(ClassLabel label, const SchwarzCoeffs& c);

// Random Blaschke data: 10% zero-free rotations, 10% with every zero at
// modulus >= 0.9, otherwise 0..max_zeros zeros uniform in radius^2 and angle.
// A quarter of the samples mix two such products with a uniform weight.
class BlaschkeSampler {
public:
    explicit BlaschkeSampler(std::size_t max_zeros = 3) : max_zeros_(max_zeros) {}

    BlaschkeSpec operator()(std::mt19937_64& rng) const;

private:
    BlaschkeProduct draw_product(std::mt19937_64& rng, int category) const;

    std::size_t max_zeros_;
};

}  // namespace ozaki
