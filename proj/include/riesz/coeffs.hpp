#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "riesz/errors.hpp"
#include "riesz/specfun.hpp"

namespace riesz {

/// Fractional order alpha with the Riesz constant kappa_alpha = sec(pi*alpha/2)/2.
class RieszOrder {
public:
    explicit RieszOrder(double alpha) : RieszOrder(alpha, false) {}

    /// Admits alpha in (1, 2]; only meant for classical-limit checks.
    static RieszOrder relaxed(double alpha) { return RieszOrder(alpha, true); }

    double alpha() const { return alpha_; }
    double kappa_alpha() const { return kappa_; }

private:
    RieszOrder(double alpha, bool allow_two) : alpha_(alpha) {
        const bool ok = allow_two ? (alpha > 1.0 && alpha <= 2.0) : (alpha > 1.0 && alpha < 2.0);
        if (!ok)
            throw invalid_order("alpha must lie in (1," + std::string(allow_two ? "2]" : "2)") +
                                ", got " + std::to_string(alpha));
        kappa_ = 0.5 / std::cos(0.5 * std::numbers::pi * alpha);
    }

    double alpha_;
    double kappa_;
};

/// g_0..g_K, indexed by |k|.
struct CentredCoeffs {
    double alpha = 0.0;
    std::vector<double> g;

    std::size_t K() const { return g.empty() ? 0 : g.size() - 1; }
    double operator[](std::ptrdiff_t k) const { return g[static_cast<std::size_t>(k < 0 ? -k : k)]; }
};

struct CompactCoeffs {
    int scheme_order = 2;
    int n = 1;
    std::vector<double> b;
};

struct SeriesCoeffs {
    std::array<double, 4> a{};
};

inline CentredCoeffs g_coeffs(const RieszOrder& order, std::size_t K) {
    const double a = order.alpha();
    CentredCoeffs c;
    c.alpha = a;
    c.g.resize(K + 1);
    const double d = gamma(0.5 * a + 1.0);
    c.g[0] = gamma(a + 1.0) / (d * d);
    for (std::size_t k = 1; k <= K; ++k)
        c.g[k] = (1.0 - (a + 1.0) / (0.5 * a + static_cast<double>(k))) * c.g[k - 1];
    return c;
}

inline bool supported_scheme_order(int scheme_order) {
    return scheme_order == 2 || scheme_order == 4 || scheme_order == 6 || scheme_order == 8 ||
           scheme_order == 10;
}

inline CompactCoeffs b_coeffs(const RieszOrder& order, int scheme_order) {
    if (!supported_scheme_order(scheme_order))
        throw unsupported_order("scheme order must be one of 2,4,6,8,10, got " +
                                std::to_string(scheme_order));
    const double a = order.alpha();
    const std::array<double, 5> all = {
        1.0,
        -a / 24.0,
        (11.0 / 2880.0 + a / 1152.0) * a,
        -(191.0 / 362880.0 + 11.0 * a / 69120.0 + a * a / 82944.0) * a,
        (2497.0 / 29030400.0 + 10181.0 * a / 348364800.0 + 11.0 * a * a / 3317760.0 +
         a * a * a / 7962624.0) *
            a,
    };
    CompactCoeffs c;
    c.scheme_order = scheme_order;
    c.n = scheme_order / 2;
    c.b.assign(all.begin(), all.begin() + c.n);
    return c;
}

inline SeriesCoeffs a_coeffs(const RieszOrder& order) {
    const double a = order.alpha();
    SeriesCoeffs s;
    s.a[0] = 1.0;
    s.a[1] = -a / 24.0;
    s.a[2] = (1.0 / 1920.0 + (a - 1.0) / 1152.0) * a;
    s.a[3] = -(1.0 / 322560.0 + (a - 1.0) / 46080.0 + (a - 1.0) * (a - 2.0) / 82944.0) * a;
    return s;
}

/// Two-sided truncated sum g_0 + 2 * sum_{k=1..K} g_k.
inline double partial_sum(const CentredCoeffs& c, std::size_t K) {
    if (K > c.K())
        throw dimension_error("partial_sum: K exceeds the stored coefficient count");
    double s = 0.0;
    for (std::size_t k = K; k >= 1; --k)
        s += c.g[k];
    return c.g[0] + 2.0 * s;
}

/// Bound functions for |g_k| and its partial and infinite sums (k >= 3).
/// S is the positive quantity -Gamma(a+1)/(Gamma(a/2-1)Gamma(a/2+3)) == |g_2|.
struct CoefficientBounds {
    double alpha = 0.0;
    double S = 0.0;

    double gk_lower(double k) const {
        return S * std::pow((alpha + 4.0) / (alpha + 2.0 * k), 2.0 * (alpha + 1.0));
    }
    double gk_upper(double k) const {
        return S * std::pow((alpha + 6.0) / (alpha + 2.0 * (k + 1.0)), alpha + 1.0);
    }

    double P1(double m, double n) const {
        return S * (std::pow(alpha + 2.0 * n, -(2.0 * alpha + 1.0)) -
                    std::pow(alpha + 2.0 * m + 2.0, -(2.0 * alpha + 1.0)));
    }
    double P2(double m, double n) const {
        return S * (std::pow(alpha + 2.0 * n, -alpha) - std::pow(alpha + 2.0 * m + 2.0, -alpha));
    }
    double Q1(double n) const { return S / std::pow(alpha + 2.0 * n, 2.0 * alpha + 1.0); }
    double Q2(double n) const { return S / std::pow(alpha + 2.0 * n, alpha); }

    double lower_multiplier() const {
        return std::pow(alpha + 4.0, 2.0 * (alpha + 1.0)) / (2.0 * (2.0 * alpha + 1.0));
    }
    double upper_multiplier() const { return std::pow(alpha + 6.0, alpha + 1.0) / (2.0 * alpha); }

    /// bounds on sum_{k=n}^{m} |g_k|
    double finite_sum_lower(double m, double n) const { return P1(m, n) * lower_multiplier(); }
    double finite_sum_upper(double m, double n) const { return P2(m, n) * upper_multiplier(); }
    /// bounds on sum_{k=n}^{inf} |g_k|
    double tail_lower(double n) const { return Q1(n) * lower_multiplier(); }
    double tail_upper(double n) const { return Q2(n) * upper_multiplier(); }

    double g0_lower() const { return std::pow(2.0, 1.0 + alpha) / ((1.0 + alpha) * std::numbers::pi); }
    double g0_upper() const { return std::pow(2.0, 1.0 + alpha) / std::numbers::pi; }
};

inline CoefficientBounds coefficient_bounds(const RieszOrder& order) {
    const double a = order.alpha();
    CoefficientBounds t;
    t.alpha = a;
    t.S = -gamma(a + 1.0) / (gamma(0.5 * a - 1.0) * gamma(0.5 * a + 3.0));
    return t;
}

} // namespace riesz
