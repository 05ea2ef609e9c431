#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "surface.hpp"

/*
 * Real gamma function by the Lanczos approximation (g = 7, nine terms,
 * relative error below 1e-13 on the needed range, reflection for x < 1/2)
 * and the upper incomplete gamma function Gamma(a, x) for real a of either
 * sign: Lentz continued fraction when a <= x, lower-series complement when
 * a > x, and the downward recurrence
 *
 *   Gamma(a, x) = (Gamma(a + 1, x) - x^a e^{-x}) / a
 *
 * to reach negative a, where Gamma(a, x) stays finite even though Gamma(a)
 * does not.
 */

namespace freud {

inline constexpr double euler_gamma = 0.57721566490153286061;

namespace detail {

inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coeff[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline double lanczos_sum(double x) {
    double a = lanczos_coeff[0];
    for (int i = 1; i < 9; ++i) a += lanczos_coeff[i] / (x + i);
    return a;
}

}  // namespace detail

inline double gamma_fn(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer " + std::to_string(x));
    if (x < 0.5) return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    const double xs = x - 1.0;
    const double t = xs + detail::lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, xs + 0.5) * std::exp(-t) * detail::lanczos_sum(xs);
}

/** ln Gamma(x) for x > 0, overflow-free for large x. */
inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5) return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
    const double xs = x - 1.0;
    const double t = xs + detail::lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (xs + 0.5) * std::log(t) - t +
           std::log(detail::lanczos_sum(xs));
}

namespace detail {

/** Gamma(a, x) for a >= 0 (or any a with a <= x), x > 0. */
inline double upper_gamma_nonneg(double a, double x) {
    if (a > x) {
        // lower series gamma(a, x) = x^a e^{-x} sum_n x^n / (a (a+1) ... (a+n))
        double term = 1.0 / a, sum = term;
        for (int n = 1; n < 500; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return gamma_fn(a) - std::exp(a * std::log(x) - x) * sum;
    }
    // Lentz continued fraction for the upper tail
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, f = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(a * std::log(x) - x) * f;
}

}  // namespace detail

inline double incomplete_gamma_upper(double a, double x) {
    if (!(x > 0.0)) throw std::domain_error("incomplete_gamma_upper: requires x > 0");
    if (a >= 0.0) return detail::upper_gamma_nonneg(a, x);
    const int lift = static_cast<int>(std::ceil(-a));
    double value = detail::upper_gamma_nonneg(a + lift, x);
    for (int j = lift; j >= 1; --j) {
        const double aa = a + j - 1;
        value = (value - std::exp(aa * std::log(x) - x)) / aa;
        if (!std::isfinite(value))
            throw std::overflow_error("incomplete_gamma_upper: overflow at a = " +
                                      std::to_string(aa) + ", x = " + std::to_string(x));
    }
    return value;
}

}  // namespace freud
