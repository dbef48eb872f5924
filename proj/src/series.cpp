#include "ozaki/series.hpp"

#include <algorithm>

namespace ozaki {

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("a truncated series needs at least one coefficient");
    }
}

TruncatedSeries TruncatedSeries::constant(Complex c, std::size_t order) {
    TruncatedSeries s(order);
    s[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("the identity series needs order >= 1");
    }
    TruncatedSeries s(order);
    s[1] = 1.0;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    if (new_order > order()) {
        throw std::invalid_argument("cannot extend a truncated series to order " +
                                    std::to_string(new_order));
    }
    return TruncatedSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

NormalizedFunction::NormalizedFunction(TruncatedSeries s) : series_(std::move(s)) {
    if (series_.order() < 1 || series_[0] != Complex{0.0} || series_[1] != Complex{1.0}) {
        throw std::invalid_argument("normalized function requires f(0) = 0 and f'(0) = 1");
    }
}

TruncatedSeries linear_combine(Complex alpha, const TruncatedSeries& s, Complex beta,
                               const TruncatedSeries& t) {
    const std::size_t n = std::min(s.order(), t.order());
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        r[k] = alpha * s[k] + beta * t[k];
    }
    return r;
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
    const std::size_t n = std::min(s.order(), t.order());
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex acc{};
        for (std::size_t j = 0; j <= k; ++j) {
            acc += s[j] * t[k - j];
        }
        r[k] = acc;
    }
    return r;
}

TruncatedSeries div(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (t[0] == Complex{0.0}) {
        throw DivisionByNonUnit(t[0]);
    }
    const std::size_t n = std::min(s.order(), t.order());
    TruncatedSeries q(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex acc = s[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= t[j] * q[k - j];
        }
        q[k] = acc / t[0];
    }
    return q;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
    if (s.order() == 0) {
        throw std::invalid_argument("derivative requires order >= 1");
    }
    TruncatedSeries r(s.order() - 1);
    for (std::size_t k = 0; k < s.order(); ++k) {
        r[k] = static_cast<double>(k + 1) * s[k + 1];
    }
    return r;
}

TruncatedSeries antiderivative(const TruncatedSeries& s) {
    TruncatedSeries r(s.order() + 1);
    for (std::size_t k = 1; k <= r.order(); ++k) {
        r[k] = s[k - 1] / static_cast<double>(k);
    }
    return r;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner[0] != Complex{0.0}) {
        throw CompositionAtNonOrigin(inner[0]);
    }
    const std::size_t n = std::min(outer.order(), inner.order());
    const TruncatedSeries w = inner.truncated(n);
    TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, w);
        acc[0] += outer[k];
    }
    return acc;
}

TruncatedSeries exp_series(const TruncatedSeries& s) {
    if (s[0] != Complex{0.0}) {
        throw ExpOfNonZeroConstant(s[0]);
    }
    // e' = e s'  =>  k e_k = sum_{j=1..k} j s_j e_{k-j}
    TruncatedSeries e(s.order());
    e[0] = 1.0;
    for (std::size_t k = 1; k <= s.order(); ++k) {
        Complex acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * s[j] * e[k - j];
        }
        e[k] = acc / static_cast<double>(k);
    }
    return e;
}

TruncatedSeries log_series(const TruncatedSeries& s) {
    if (s[0] != Complex{1.0}) {
        throw PowOfNonUnitConstant(s[0]);
    }
    // s l' = s'  =>  k l_k = k s_k - sum_{j=1..k-1} j l_j s_{k-j}
    TruncatedSeries l(s.order());
    for (std::size_t k = 1; k <= s.order(); ++k) {
        Complex acc = static_cast<double>(k) * s[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= static_cast<double>(j) * l[j] * s[k - j];
        }
        l[k] = acc / static_cast<double>(k);
    }
    return l;
}

TruncatedSeries pow_real(const TruncatedSeries& s, double alpha) {
    if (s[0] != Complex{1.0}) {
        throw PowOfNonUnitConstant(s[0]);
    }
    // Same value as exp(alpha log s), taken from s r' = alpha s' r directly:
    // k r_k = sum_{j=1..k} ((alpha+1) j - k) s_j r_{k-j}.
    // Integer-coefficient inputs with integer alpha stay exact this way.
    TruncatedSeries r(s.order());
    r[0] = 1.0;
    for (std::size_t k = 1; k <= s.order(); ++k) {
        Complex acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            const double weight = (alpha + 1.0) * static_cast<double>(j) - static_cast<double>(k);
            acc += weight * s[j] * r[k - j];
        }
        r[k] = acc / static_cast<double>(k);
    }
    return r;
}

namespace {

// f(z)/z for a normalized f; order drops by one.
TruncatedSeries shifted_down(const NormalizedFunction& f) {
    const auto c = f.series().coeffs();
    return TruncatedSeries(std::vector<Complex>(c.begin() + 1, c.end()));
}

}  // namespace

TruncatedSeries log_ratio(const NormalizedFunction& f) {
    return log_series(shifted_down(f));
}

TruncatedSeries compositional_inverse(const NormalizedFunction& f) {
    const std::size_t n = f.order();
    const TruncatedSeries h = shifted_down(f);
    const TruncatedSeries q = div(TruncatedSeries::constant(1.0, h.order()), h);

    TruncatedSeries inv(n);
    TruncatedSeries q_pow = q;
    for (std::size_t m = 1; m <= n; ++m) {
        inv[m] = q_pow[m - 1] / static_cast<double>(m);
        if (m < n) {
            q_pow = mul(q_pow, q);
        }
    }
    inv[1] = 1.0;
    return inv;
}

}  // namespace ozaki
