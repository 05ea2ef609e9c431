#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "solver.hpp"

/*
 * Large-argument behavior.  On every ray of the surface
 *
 *   u(z) ~ 1 + sum_{k>=1} c_k / z^k,   c_k = (-1)^{k-1} int_0^inf K(t) t^{k-1} u(t) dt,
 *   v(z) ~ 1 + sum_{k>=1} d_k / z^k,   d_k = (-1)^k     int_0^inf K(t) t^{k-1} v(t) dt,
 *
 * valid for |arg z| < 3 pi / 2.  The moments come straight off a converged
 * axis grid; k is capped where t^{k-1} K(t) still peaks inside the first
 * half of the truncated domain, since beyond that the quadrature no longer
 * sees the moment's mass.  The subdominant exponential switches on across
 * arg z = +/-(pi/2 (3 - alpha) + 2 (l - 1) pi) with alpha = 1/b in
 * (4l - 3, 4l + 1].
 */

namespace freud {

/** Largest moment order whose integrand peaks inside [0, t_max/2]. */
inline int coeff_k_max(const SolutionGrid& g) {
    const double b = g.params.beta();
    const double cap = b * g.params.sin_half() * std::pow(g.quad.t_max / 2.0, b);
    return static_cast<int>(std::floor(1.0 + cap));
}

namespace detail {

inline std::complex<double> moment(const SolutionGrid& g, int k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < g.values.size(); ++j)
        acc += g.quad.weights[j] * g.kernel_values[j] *
               std::pow(g.quad.nodes[j], k - 1) * g.values[j];
    return acc;
}

inline void check_moment_args(const SolutionGrid& g, EquationTag want, int k, const char* who) {
    if (g.tag != want || g.theta != 0.0)
        throw std::invalid_argument(std::string(who) + ": needs a theta = 0 grid of tag " +
                                    equation_name(want));
    const int k_max = coeff_k_max(g);
    if (k < 1 || k > k_max)
        throw std::invalid_argument(std::string(who) + ": k must lie in [1, " +
                                    std::to_string(k_max) + "], got " + std::to_string(k));
}

}  // namespace detail

inline std::complex<double> coeff_c(int k, const SolutionGrid& g) {
    detail::check_moment_args(g, EquationTag::u, k, "coeff_c");
    return (k % 2 == 1 ? 1.0 : -1.0) * detail::moment(g, k);
}

inline std::complex<double> coeff_d(int k, const SolutionGrid& g) {
    detail::check_moment_args(g, EquationTag::v, k, "coeff_d");
    return (k % 2 == 0 ? 1.0 : -1.0) * detail::moment(g, k);
}

enum class ExpansionCenter { infinity, origin };

struct SeriesExpansion {
    ExpansionCenter center = ExpansionCenter::infinity;
    std::vector<std::complex<double>> coefficients;   // c_1, c_2, ...
    double arg_min = -3.0 * pi / 2.0;
    double arg_max = 3.0 * pi / 2.0;
};

/** Moment expansion of a converged axis grid, coefficients 1..terms. */
inline SeriesExpansion expansion_at_infinity(const SolutionGrid& g, int terms) {
    SeriesExpansion e;
    for (int k = 1; k <= terms; ++k)
        e.coefficients.push_back(g.tag == EquationTag::u ? coeff_c(k, g) : coeff_d(k, g));
    return e;
}

struct ExpansionValue {
    std::complex<double> value;
    double err_est;   // magnitude of the first omitted term
};

inline ExpansionValue eval_expansion(const SeriesExpansion& e, const SurfacePoint& z, int terms) {
    if (e.center != ExpansionCenter::infinity)
        throw std::invalid_argument("eval_expansion: only the expansion at infinity is defined");
    if (!(z.phi > e.arg_min && z.phi < e.arg_max))
        throw std::domain_error("eval_expansion: arg z = " + std::to_string(z.phi) +
                                " outside the validity sector (" + std::to_string(e.arg_min) +
                                ", " + std::to_string(e.arg_max) +
                                "); the boundary rays are Stokes lines");
    if (terms < 0 || terms > static_cast<int>(e.coefficients.size()))
        throw std::invalid_argument("eval_expansion: terms must lie in [0, " +
                                    std::to_string(e.coefficients.size()) + "]");
    std::complex<double> acc(1.0, 0.0);
    for (int k = 1; k <= terms; ++k)
        acc += e.coefficients[k - 1] * surface_pow(z, -static_cast<double>(k));
    if (e.coefficients.empty()) return {acc, 0.0};
    const std::size_t next = static_cast<std::size_t>(terms);
    const double next_coeff = next < e.coefficients.size() ? std::abs(e.coefficients[next])
                                                           : std::abs(e.coefficients.back());
    return {acc, next_coeff / std::pow(z.r, terms + 1)};
}

struct StokesLines {
    std::array<double, 2> angles;   // {formula value, its negative}
    int l;
};

/** Switch-on rays of the subdominant exponential, with the branch index l. */
inline StokesLines stokes_lines(const KernelParams& p) {
    const double alpha = p.alpha();
    const int l = std::max(1, static_cast<int>(std::ceil((alpha - 1.0) / 4.0 - 1e-12)));
    const double angle = pi / 2.0 * (3.0 - alpha) + 2.0 * (l - 1) * pi;
    return {{angle, -angle}, l};
}

}  // namespace freud
