#include "ozaki/classes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ozaki {

std::string_view to_string(ClassLabel label) { return label == ClassLabel::F ? "F" : "G"; }

ClassLabel parse_class_label(std::string_view text) {
    if (text == "F") return ClassLabel::F;
    if (text == "G") return ClassLabel::G;
    throw std::invalid_argument("unknown class label '" + std::string(text) + "'");
}

std::string_view to_string(Extremal e) {
    switch (e) {
        case Extremal::f1: return "f1";
        case Extremal::f2: return "f2";
        case Extremal::g1: return "g1";
        case Extremal::g2: return "g2";
    }
    return "?";
}

ClassLabel class_of(Extremal e) {
    return (e == Extremal::f1 || e == Extremal::f2) ? ClassLabel::F : ClassLabel::G;
}

Extremal parse_extremal(std::string_view name) {
    for (Extremal e : {Extremal::f1, Extremal::f2, Extremal::g1, Extremal::g2}) {
        if (name == to_string(e)) return e;
    }
    throw UnknownExtremalName(std::string(name));
}

bool CaratheodoryCoeffs::within_coefficient_bound(double tol) const {
    for (const Complex& pk : p) {
        if (std::abs(pk) > 2.0 + tol) return false;
    }
    return true;
}

LiberaParams::LiberaParams(double p1, Complex xi, Complex eta, Complex gamma)
    : p1_(p1), xi_(xi), eta_(eta), gamma_(gamma) {
    if (!(p1 >= 0.0 && p1 <= 2.0)) {
        throw std::invalid_argument("Libera parameter p1 must lie in [0, 2]");
    }
    if (std::abs(xi) > 1.0 || std::abs(eta) > 1.0 || std::abs(gamma) > 1.0) {
        throw std::invalid_argument("Libera parameters xi, eta, gamma must lie in the closed unit disk");
    }
}

namespace {

// Series of B(z) = e^{i theta} prod (a_k - z) / (1 - conj(a_k) z).
TruncatedSeries blaschke_series(const BlaschkeProduct& b, std::size_t order) {
    TruncatedSeries acc = TruncatedSeries::constant(std::polar(1.0, b.rotation), order);
    for (std::size_t k = 0; k < b.zeros.size(); ++k) {
        const Complex a = b.zeros[k];
        if (!(std::abs(a) < 1.0)) {
            throw ZeroOutsideDisk(k, a);
        }
        TruncatedSeries num(order);
        TruncatedSeries den(order);
        num[0] = a;
        den[0] = 1.0;
        if (order >= 1) {
            num[1] = -1.0;
            den[1] = -std::conj(a);
        }
        acc = mul(acc, div(num, den));
    }
    return acc;
}

TruncatedSeries schwarz_series(const SchwarzCoeffs& c, std::size_t order) {
    TruncatedSeries w(order);
    for (std::size_t k = 1; k <= order; ++k) {
        w[k] = c.at(k);
    }
    return w;
}

void require_member_order(std::size_t order) {
    if (order < 4) {
        throw std::invalid_argument("class members need order >= 4, got " + std::to_string(order));
    }
}

// f from the Caratheodory series p (order >= order - 1): f''/f' = k (p - 1)/z
// with k = 3/2 for F and -1/2 for G.
NormalizedFunction solve_shape_equation(ClassLabel label, const TruncatedSeries& p, std::size_t order) {
    const double factor = label == ClassLabel::F ? 1.5 : -0.5;
    TruncatedSeries q(order - 2);
    for (std::size_t k = 0; k <= order - 2; ++k) {
        q[k] = factor * p[k + 1];
    }
    const TruncatedSeries f_prime = exp_series(antiderivative(q));
    return NormalizedFunction(antiderivative(f_prime));
}

}  // namespace

SchwarzCoeffs schwarz_from_blaschke(const BlaschkeSpec& spec, std::size_t order) {
    if (order == 0) {
        return {};
    }
    const double lambda = spec.secondary ? spec.mixture_weight : 1.0;
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("Blaschke mixture weight must lie in [0, 1]");
    }
    TruncatedSeries b = blaschke_series(spec.primary, order - 1);
    if (spec.secondary) {
        b = linear_combine(lambda, b, 1.0 - lambda, blaschke_series(*spec.secondary, order - 1));
    }
    SchwarzCoeffs c;
    c.c.assign(b.coeffs().begin(), b.coeffs().end());
    return c;
}

std::size_t first_schwarz_violation(const SchwarzCoeffs& c, double tol) {
    const double m1 = std::abs(c.at(1));
    const double m2 = std::abs(c.at(2));
    const double m3 = std::abs(c.at(3));
    if (m1 > 1.0 + tol) return 1;
    if (m2 > 1.0 - m1 * m1 + tol) return 2;
    if (m3 > 1.0 - m1 * m1 - m2 * m2 / (1.0 + m1) + tol) return 3;
    return 0;
}

bool validate_schwarz_prefix(const SchwarzCoeffs& c, double tol) {
    return first_schwarz_violation(c, tol) == 0;
}

CaratheodoryCoeffs caratheodory_from_schwarz(const SchwarzCoeffs& c, std::size_t order) {
    const TruncatedSeries w = schwarz_series(c, order);
    const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
    const TruncatedSeries p = div(linear_combine(1.0, one, 1.0, w), linear_combine(1.0, one, -1.0, w));
    CaratheodoryCoeffs out;
    out.p.assign(p.coeffs().begin() + 1, p.coeffs().end());
    return out;
}

SchwarzCoeffs schwarz_from_caratheodory(const CaratheodoryCoeffs& p, std::size_t order) {
    TruncatedSeries ps = TruncatedSeries::constant(1.0, order);
    for (std::size_t k = 1; k <= order; ++k) {
        ps[k] = p.at(k);
    }
    const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
    const TruncatedSeries w = div(linear_combine(1.0, ps, -1.0, one), linear_combine(1.0, ps, 1.0, one));
    SchwarzCoeffs out;
    out.c.assign(w.coeffs().begin() + 1, w.coeffs().end());
    return out;
}

CaratheodoryCoeffs libera_expand(const LiberaParams& params) {
    const Complex p1 = params.p1();
    const Complex xi = params.xi();
    const Complex eta = params.eta();
    const Complex gamma = params.gamma();
    const double t = params.t();
    const double xi_defect = 1.0 - std::norm(xi);
    const double eta_defect = 1.0 - std::norm(eta);

    const Complex p2 = (p1 * p1 + t * xi) / 2.0;
    const Complex p3 =
        (p1 * p1 * p1 + 2.0 * p1 * t * xi - p1 * t * xi * xi + 2.0 * t * xi_defect * eta) / 4.0;
    const Complex p4 = (std::pow(p1, 4) + 3.0 * p1 * p1 * t * xi + (4.0 - 3.0 * p1 * p1) * t * xi * xi +
                        p1 * p1 * t * xi * xi * xi + 4.0 * t * xi_defect * eta_defect * gamma +
                        4.0 * t * xi_defect * (p1 * eta - p1 * xi * eta - std::conj(xi) * eta * eta)) /
                       8.0;
    return CaratheodoryCoeffs{{p1, p2, p3, p4}};
}

OzakiFunction build_member(ClassLabel label, const SchwarzCoeffs& w, std::size_t order) {
    require_member_order(order);
    if (const std::size_t bad = first_schwarz_violation(w)) {
        throw InvalidSchwarzPrefix(bad, w.at(bad));
    }
    const CaratheodoryCoeffs p = caratheodory_from_schwarz(w, order - 1);
    TruncatedSeries ps = TruncatedSeries::constant(1.0, order - 1);
    for (std::size_t k = 1; k <= order - 1; ++k) {
        ps[k] = p.at(k);
    }
    return OzakiFunction{label, solve_shape_equation(label, ps, order), w};
}

OzakiFunction build_member(ClassLabel label, const CaratheodoryCoeffs& p, std::size_t order) {
    require_member_order(order);
    const SchwarzCoeffs w = schwarz_from_caratheodory(p, 3);
    if (const std::size_t bad = first_schwarz_violation(w)) {
        throw InvalidSchwarzPrefix(bad, w.at(bad));
    }
    TruncatedSeries ps = TruncatedSeries::constant(1.0, order - 1);
    for (std::size_t k = 1; k <= order - 1; ++k) {
        ps[k] = p.at(k);
    }
    return OzakiFunction{label, solve_shape_equation(label, ps, order), p};
}

OzakiFunction extremal_member(Extremal name, std::size_t order) {
    require_member_order(order);
    const std::size_t n = order - 1;
    auto derivative_of = [&]() -> TruncatedSeries {
        TruncatedSeries base = TruncatedSeries::constant(1.0, n);
        switch (name) {
            case Extremal::f1:
                base[1] = -1.0;  // (1 - z)^-3
                return pow_real(base, -3.0);
            case Extremal::f2:
                base[2] = -1.0;  // (1 - z^2)^-3/2
                return pow_real(base, -1.5);
            case Extremal::g1:
                base[1] = -1.0;  // 1 - z
                return base;
            case Extremal::g2:
                base[2] = -1.0;  // (1 - z^2)^1/2
                return pow_real(base, 0.5);
        }
        throw UnknownExtremalName(std::string(to_string(name)));
    };
    return OzakiFunction{class_of(name), NormalizedFunction(antiderivative(derivative_of())),
                         ExtremalTag{name}};
}

OzakiFunction extremal_member(std::string_view name, std::size_t order) {
    return extremal_member(parse_extremal(name), order);
}

CoeffTriple coeffs_from_caratheodory_direct(ClassLabel label, const CaratheodoryCoeffs& p) {
    const Complex p1 = p.at(1);
    const Complex p2 = p.at(2);
    const Complex p3 = p.at(3);
    if (label == ClassLabel::F) {
        return {3.0 * p1 / 4.0, (3.0 * p1 * p1 + 2.0 * p2) / 8.0,
                (9.0 * p1 * p1 * p1 + 18.0 * p1 * p2 + 8.0 * p3) / 64.0};
    }
    return {-p1 / 4.0, (p1 * p1 - 2.0 * p2) / 24.0, (-p1 * p1 * p1 + 6.0 * p1 * p2 - 8.0 * p3) / 192.0};
}

CoeffTriple coeffs_from_schwarz_direct(ClassLabel label, const SchwarzCoeffs& c) {
    const Complex c1 = c.at(1);
    const Complex c2 = c.at(2);
    const Complex c3 = c.at(3);
    if (label == ClassLabel::F) {
        return {1.5 * c1, (4.0 * c1 * c1 + c2) / 2.0, (20.0 * c1 * c1 * c1 + 13.0 * c1 * c2 + 2.0 * c3) / 8.0};
    }
    return {-c1 / 2.0, -c2 / 6.0, -(c1 * c2 + 2.0 * c3) / 24.0};
}

BlaschkeProduct BlaschkeSampler::draw_product(std::mt19937_64& rng, int category) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    BlaschkeProduct b;
    b.rotation = 2.0 * std::numbers::pi * unit(rng);
    if (category == 0 || max_zeros_ == 0) {
        return b;
    }
    std::size_t count = 0;
    double r2_low = 0.0;
    if (category == 1) {
        count = std::uniform_int_distribution<std::size_t>(1, max_zeros_)(rng);
        r2_low = 0.81;
    } else {
        count = std::uniform_int_distribution<std::size_t>(0, max_zeros_)(rng);
    }
    for (std::size_t k = 0; k < count; ++k) {
        const double r2 = r2_low + (1.0 - r2_low) * unit(rng);
        const double angle = 2.0 * std::numbers::pi * unit(rng);
        const double radius = std::min(std::sqrt(r2), std::nextafter(1.0, 0.0));
        b.zeros.push_back(std::polar(radius, angle));
    }
    return b;
}

BlaschkeSpec BlaschkeSampler::operator()(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    const int category = u < 0.1 ? 0 : (u < 0.2 ? 1 : 2);
    BlaschkeSpec spec;
    spec.primary = draw_product(rng, category);
    if (unit(rng) < 0.25) {
        spec.secondary = draw_product(rng, category);
        spec.mixture_weight = unit(rng);
    }
    return spec;
}

}  // namespace ozaki
