#include <cmath>
#include <limits>

#include "ozaki/verifier.hpp"

namespace ozaki {

std::string_view to_string(ObjectiveId id) {
    switch (id) {
        case ObjectiveId::UpsilonF: return "UpsilonF";
        case ObjectiveId::PsiF: return "PsiF";
        case ObjectiveId::PhiG: return "PhiG";
        case ObjectiveId::NG: return "NG";
        case ObjectiveId::ChiF: return "ChiF";
        case ObjectiveId::MF: return "MF";
        case ObjectiveId::SG: return "SG";
        case ObjectiveId::DeltaG: return "DeltaG";
    }
    return "?";
}

ObjectiveId parse_objective(std::string_view name) {
    for (ObjectiveId id : kAllObjectives) {
        if (name == to_string(id)) return id;
    }
    throw std::invalid_argument("unknown objective '" + std::string(name) + "'");
}

std::string_view to_string(OptMode mode) { return mode == OptMode::Max ? "max" : "min"; }

bool DomainSpec::contains(Point pt) const noexcept {
    if (!(pt.x >= 0.0 && pt.x <= x_max() && pt.y >= 0.0 && pt.y <= y_max())) {
        return false;
    }
    return kind == DomainKind::Box || pt.y <= 1.0 - pt.x * pt.x;
}

DomainSpec domain_of(ObjectiveId id) {
    switch (id) {
        case ObjectiveId::UpsilonF:
        case ObjectiveId::PsiF:
        case ObjectiveId::PhiG:
        case ObjectiveId::NG:
            return {DomainKind::Box};
        default:
            return {DomainKind::Parabolic};
    }
}

PointOutsideDomain::PointOutsideDomain(ObjectiveId id, Point pt)
    : std::domain_error("point (" + std::to_string(pt.x) + ", " + std::to_string(pt.y) +
                        ") lies outside the region of " + std::string(to_string(id))),
      point_(pt) {}

namespace {

// (p, x) kernels of the Toeplitz bounds.
double toeplitz_kernel(double p, double x, double quartic, double cross_sign, double cross,
                       double scale) {
    const double p2 = p * p;
    const double t = 4.0 - p2;
    return (-quartic * p2 * p2 + 576.0 * p2 + cross_sign * cross * p2 * t * x - 16.0 * t * t * x * x) /
           scale;
}

// 1 - u^2 - v^2/(1 + u): the c3 allowance.
double c3_allowance(double u, double v) { return 1.0 - u * u - v * v / (1.0 + u); }

double evaluate_unchecked(ObjectiveId id, double a, double b) {
    switch (id) {
        case ObjectiveId::UpsilonF: return toeplitz_kernel(a, b, 49.0, +1.0, 56.0, 4096.0);
        case ObjectiveId::PsiF: return toeplitz_kernel(a, b, 49.0, -1.0, 56.0, 4096.0);
        case ObjectiveId::PhiG: return toeplitz_kernel(a, b, 9.0, +1.0, 24.0, 36864.0);
        case ObjectiveId::NG: return toeplitz_kernel(a, b, 9.0, -1.0, 24.0, 36864.0);
        case ObjectiveId::ChiF:
            return (42.0 * a * a * a + 33.0 * a * b + 6.0 * c3_allowance(a, b)) / 48.0;
        case ObjectiveId::MF:
            return (42.0 * a * a * a + 33.0 * a * b + 33.0 * a * a + 12.0 * b + 6.0 * c3_allowance(a, b)) /
                   48.0;
        case ObjectiveId::SG:
            return (10.0 * a * a * a + 9.0 * a * b + 2.0 * c3_allowance(a, b)) / 48.0;
        case ObjectiveId::DeltaG:
            return 6.0 * a * a * a + 7.0 * a * b + 2.0 * c3_allowance(a, b);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

double eval_objective(ObjectiveId id, Point pt) {
    if (!domain_of(id).contains(pt)) {
        throw PointOutsideDomain(id, pt);
    }
    return evaluate_unchecked(id, pt.x, pt.y);
}

ReferenceExtremum reference_extremum(ObjectiveId id) {
    switch (id) {
        case ObjectiveId::UpsilonF: return {OptMode::Max, Rational(95, 256)};
        case ObjectiveId::PsiF: return {OptMode::Min, Rational(-1, 16)};
        case ObjectiveId::PhiG: return {OptMode::Max, Rational(15, 256)};
        case ObjectiveId::NG: return {OptMode::Min, Rational(-1, 144)};
        case ObjectiveId::ChiF: return {OptMode::Max, Rational(7, 8)};
        case ObjectiveId::MF: return {OptMode::Max, Rational(25, 16)};
        case ObjectiveId::SG: return {OptMode::Max, Rational(5, 24)};
        case ObjectiveId::DeltaG: return {OptMode::Max, Rational(6)};
    }
    throw std::invalid_argument("unknown objective");
}

namespace {

struct Window {
    double x0, x1, y0, y1;
};

double grid_coord(double lo, double hi, int i, int n) {
    if (i == n - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

class Incumbent {
public:
    explicit Incumbent(OptMode mode) : mode_(mode) {}

    void offer(double value, Point pt) {
        if (!found_ || (mode_ == OptMode::Max ? value > value_ : value < value_)) {
            found_ = true;
            value_ = value;
            point_ = pt;
        }
    }

    double value() const { return value_; }
    Point point() const { return point_; }

private:
    OptMode mode_;
    bool found_ = false;
    double value_ = 0.0;
    Point point_{};
};

void scan_window(ObjectiveId id, const DomainSpec& domain, const Window& w, int n, Incumbent& best) {
    for (int i = 0; i < n; ++i) {
        const double x = grid_coord(w.x0, w.x1, i, n);
        for (int j = 0; j < n; ++j) {
            const Point pt{x, grid_coord(w.y0, w.y1, j, n)};
            if (domain.contains(pt)) {
                best.offer(evaluate_unchecked(id, pt.x, pt.y), pt);
            }
        }
    }
    if (domain.kind == DomainKind::Parabolic) {
        for (int i = 0; i < n; ++i) {
            const double u = grid_coord(w.x0, w.x1, i, n);
            const Point pt{u, 1.0 - u * u};
            if (pt.y >= w.y0 && pt.y <= w.y1 && domain.contains(pt)) {
                best.offer(evaluate_unchecked(id, pt.x, pt.y), pt);
            }
        }
    }
}

// Interval of the given width centred at c, shifted to lie inside [lo, hi].
std::pair<double, double> clamp_interval(double c, double width, double lo, double hi) {
    double a = c - width / 2.0;
    double b = c + width / 2.0;
    if (a < lo) {
        b += lo - a;
        a = lo;
    }
    if (b > hi) {
        a -= b - hi;
        b = hi;
    }
    return {std::max(a, lo), std::min(b, hi)};
}

}  // namespace

OptResult grid_extremize(ObjectiveId id, OptMode mode, int resolution, int refine_iters) {
    if (resolution < 100) {
        throw std::invalid_argument("grid resolution must be at least 100");
    }
    if (refine_iters < 0) {
        throw std::invalid_argument("refine iterations must be non-negative");
    }
    const DomainSpec domain = domain_of(id);
    Window w{0.0, domain.x_max(), 0.0, domain.y_max()};
    Incumbent best(mode);
    scan_window(id, domain, w, resolution, best);
    for (int round = 0; round < refine_iters; ++round) {
        const Point c = best.point();
        const auto [x0, x1] = clamp_interval(c.x, (w.x1 - w.x0) / 10.0, 0.0, domain.x_max());
        const auto [y0, y1] = clamp_interval(c.y, (w.y1 - w.y0) / 10.0, 0.0, domain.y_max());
        w = {x0, x1, y0, y1};
        scan_window(id, domain, w, resolution, best);
    }

    OptResult r{id, mode, best.value(), best.point(), resolution, refine_iters, std::nullopt, std::nullopt};
    const ReferenceExtremum pe = reference_extremum(id);
    if (pe.mode == mode) {
        r.paper_value = pe.value;
        r.gap = std::abs(r.value - pe.value.value());
    }
    return r;
}

}  // namespace ozaki
