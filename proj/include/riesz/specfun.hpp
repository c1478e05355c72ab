#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "riesz/errors.hpp"

namespace riesz {

namespace detail {

// Lanczos approximation, g = 7, nine terms.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_p = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline double lanczos_sum(double xm1) {
    double a = lanczos_p[0];
    for (std::size_t i = 1; i < lanczos_p.size(); ++i)
        a += lanczos_p[i] / (xm1 + static_cast<double>(i));
    return a;
}

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

inline bool is_small_positive_integer(double x) {
    return x >= 1.0 && x <= 171.0 && x == std::floor(x);
}

inline double factorial_of(double n) {
    double r = 1.0;
    for (double k = 2.0; k <= n; k += 1.0)
        r *= k;
    return r;
}

// sin(pi*x) with the argument reduced before multiplying by pi
inline double sin_pi(double x) {
    double r = std::fmod(x, 2.0);
    if (r < 0.0)
        r += 2.0;
    double sign = 1.0;
    if (r >= 1.0) {
        r -= 1.0;
        sign = -1.0;
    }
    if (r > 0.5)
        r = 1.0 - r;
    return sign * std::sin(std::numbers::pi * r);
}

// Gamma for x >= 0.5
inline double gamma_right(double x) {
    if (is_small_positive_integer(x))
        return factorial_of(x - 1.0);
    const double xm1 = x - 1.0;
    const double t = xm1 + lanczos_g + 0.5;
    const double half = 0.5 * (xm1 + 0.5);
    const double p = std::pow(t, half);
    const double r = std::sqrt(2.0 * std::numbers::pi) * p * (p * std::exp(-t)) * lanczos_sum(xm1);
    if (!std::isfinite(r))
        throw overflow_error("gamma(" + std::to_string(x) + ") overflows");
    return r;
}

inline double ln_gamma_right(double x) {
    if (is_small_positive_integer(x))
        return std::log(factorial_of(x - 1.0));
    if (x < 15.0)
        return std::log(gamma_right(x));
    const double xm1 = x - 1.0;
    const double t = xm1 + lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(xm1));
}

} // namespace detail

/// Euler's Gamma function on the real line.
/// Throws pole_error at 0, -1, -2, ... and overflow_error past ~171.6.
inline double gamma(double x) {
    if (std::isnan(x))
        throw domain_error("gamma(NaN)");
    if (detail::is_nonpositive_integer(x))
        throw pole_error("gamma has a pole at " + std::to_string(x));
    if (x >= 0.5)
        return detail::gamma_right(x);
    const double s = detail::sin_pi(x);
    const double y = 1.0 - x;
    if (y > 171.0) {
        const double sign = s < 0.0 ? -1.0 : 1.0;
        return sign * std::numbers::pi / std::abs(s) * std::exp(-detail::ln_gamma_right(y));
    }
    return std::numbers::pi / (s * detail::gamma_right(y));
}

/// ln Gamma(x) for x > 0.
inline double ln_gamma(double x) {
    if (!(x > 0.0))
        throw domain_error("ln_gamma requires x > 0, got " + std::to_string(x));
    if (x >= 0.5)
        return detail::ln_gamma_right(x);
    return std::log(gamma(x));
}

} // namespace riesz
