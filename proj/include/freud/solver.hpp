#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "quadrature.hpp"

/*
 * Nystrom solver for the pair of Stieltjes-kernel equations
 *
 *   u(x) = 1 + int_0^inf K(t) u(t) dt / (t + x),
 *   v(x) = 1 - int_0^inf K(t) v(t) dt / (t + x),
 *
 * posed on the ray arg t = theta, |theta| < pi/2, where they keep the same
 * shape with K(t e^{i theta}) in place of K(t).  The discrete solution is
 * self-interpolating: re-applying the discretized equation at any off-node
 * point extends it to the cut plane of the rotated variable.  A Picard
 * fixed-point solver provides an independent cross-check whenever the
 * operator norm bound cot(pi b/2)/(pi b) is below one.
 */

namespace freud {

enum class EquationTag { u, v };

inline double equation_sign(EquationTag tag) {
    return tag == EquationTag::u ? 1.0 : -1.0;
}

inline const char* equation_name(EquationTag tag) {
    return tag == EquationTag::u ? "u" : "v";
}

struct SolverOptions {
    double tol = 0.0;              // 0 selects the per-beta default
    int panels = 24;
    int nodes_per_panel = 16;
    int max_nodes = 6144;
    std::function<std::complex<double>(double)> kernel_override;  // test hook
};

inline double default_tol(const KernelParams& p) {
    return p.beta() >= 0.3 ? 1e-10 : 1e-8;
}

struct RayRates {
    double decay;
    double osc;
};

/** Worst-case decay/oscillation rates of K(t e^{i theta}) in w = t^b. */
inline RayRates ray_rates(const KernelParams& p, double theta) {
    const double b = p.beta();
    const double a = std::abs(theta);
    return {std::min(std::sin(b * (pi / 2.0 + a)), std::sin(b * (pi / 2.0 - a))),
            std::max(std::abs(std::cos(b * (pi / 2.0 + a))),
                     std::abs(std::cos(b * (pi / 2.0 - a))))};
}

struct SolutionGrid {
    KernelParams params;
    EquationTag tag = EquationTag::u;
    double theta = 0.0;
    double tol = 0.0;
    QuadratureScheme quad;
    std::vector<std::complex<double>> kernel_values;   // K(t_k e^{i theta})
    std::vector<std::complex<double>> values;
    double residual = 0.0;                             // off-node equation residual
    int iterations = 0;                                // 0 for the direct solve

    explicit SolutionGrid(const KernelParams& p) : params(p) {}

    /**
     * Nystrom interpolant at zeta = e^{-i theta} z, valid off the negative
     * real zeta-axis: 1 +/- sum_k w_k K_k u_k / (t_k + zeta).
     */
    std::complex<double> interpolate(std::complex<double> zeta) const {
        if (zeta.imag() == 0.0 && zeta.real() < 0.0)
            throw std::domain_error("interpolate: point lies on the cut of this ray");
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t k = 0; k < values.size(); ++k)
            acc += quad.weights[k] * kernel_values[k] * values[k] / (quad.nodes[k] + zeta);
        return 1.0 + equation_sign(tag) * acc;
    }
};

/** Interpolant on the ray itself; x >= 0 in the rotated coordinate. */
inline std::complex<double> interpolate(const SolutionGrid& g, double x) {
    return g.interpolate({x, 0.0});
}

namespace detail {

inline std::vector<std::complex<double>> kernel_at_nodes(
    const KernelParams& p, double theta, const std::vector<double>& nodes,
    const std::function<std::complex<double>(double)>& override_fn) {
    std::vector<std::complex<double>> k;
    k.reserve(nodes.size());
    for (double t : nodes)
        k.push_back(override_fn ? override_fn(t) : kernel_complex(t, theta, p));
    return k;
}

}  // namespace detail

/**
 * Max |T_fine f - T_coarse f| over the check points, where f is the grid's
 * interpolant and T_fine re-applies the operator on the same panel layout
 * with `refine_factor` times the nodes.  Since the interpolant satisfies the
 * coarse discrete equation identically, this is the equation residual at x.
 */
inline double max_equation_residual(
    const SolutionGrid& g, const std::vector<double>& check_points,
    const std::function<std::complex<double>(double)>& kernel_override = {},
    int refine_factor = 2) {
    const QuadratureScheme fine = refine_quadrature(g.quad, refine_factor);
    const auto fine_kernel = detail::kernel_at_nodes(g.params, g.theta, fine.nodes, kernel_override);

    std::vector<std::complex<double>> fine_values;
    fine_values.reserve(fine.nodes.size());
    for (double t : fine.nodes) fine_values.push_back(g.interpolate({t, 0.0}));

    double worst = 0.0;
    for (double x : check_points) {
        std::complex<double> coarse(0.0, 0.0), refined(0.0, 0.0);
        for (std::size_t k = 0; k < g.quad.nodes.size(); ++k)
            coarse += g.quad.weights[k] * g.kernel_values[k] * g.values[k] / (g.quad.nodes[k] + x);
        for (std::size_t k = 0; k < fine.nodes.size(); ++k)
            refined += fine.weights[k] * fine_kernel[k] * fine_values[k] / (fine.nodes[k] + x);
        worst = std::max(worst, std::abs(refined - coarse));
    }
    return worst;
}

namespace detail {

inline std::vector<double> panel_midpoints(const QuadratureScheme& q, double alpha) {
    std::vector<double> mids;
    mids.push_back(0.0);
    for (std::size_t i = 0; i + 1 < q.panel_bounds_w.size(); ++i)
        mids.push_back(std::pow(0.5 * (q.panel_bounds_w[i] + q.panel_bounds_w[i + 1]), alpha));
    return mids;
}

inline SolutionGrid prepare_grid(const KernelParams& p, EquationTag tag, double theta,
                                 const SolverOptions& opt) {
    if (!(std::abs(theta) < pi / 2.0))
        throw std::invalid_argument("solve_ray: ray angle must satisfy |theta| < pi/2");
    SolutionGrid g(p);
    g.tag = tag;
    g.theta = theta;
    g.tol = opt.tol > 0.0 ? opt.tol : default_tol(p);
    const RayRates rates = ray_rates(p, theta);
    g.quad = build_quadrature(p, g.tol, rates.decay, rates.osc, opt.panels,
                              opt.nodes_per_panel, opt.max_nodes);
    g.kernel_values = kernel_at_nodes(p, theta, g.quad.nodes, opt.kernel_override);
    return g;
}

}  // namespace detail

/** Direct Nystrom solve of (I -/+ T_theta) f = 1 by partial-pivot LU. */
inline SolutionGrid solve_ray(const KernelParams& p, EquationTag tag, double theta = 0.0,
                              const SolverOptions& opt = {}) {
    SolutionGrid g = detail::prepare_grid(p, tag, theta, opt);
    const auto n = static_cast<Eigen::Index>(g.quad.nodes.size());
    const double sgn = equation_sign(tag);

    Eigen::MatrixXcd A(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
            const std::complex<double> op =
                g.quad.weights[k] * g.kernel_values[k] / (g.quad.nodes[k] + g.quad.nodes[j]);
            A(j, k) = (j == k ? 1.0 : 0.0) - sgn * op;
        }
    const Eigen::VectorXcd rhs = Eigen::VectorXcd::Ones(n);
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
    const Eigen::VectorXcd x = lu.solve(rhs);

    const double rel = (A * x - rhs).norm() / std::max(1.0, x.norm());
    if (!std::isfinite(rel) || rel > 1e-8)
        throw std::runtime_error("solve_ray: ill-conditioned system (solve residual " +
                                 std::to_string(rel) + ", rcond " +
                                 std::to_string(lu.rcond()) + ")");

    g.values.assign(x.data(), x.data() + n);
    g.residual = max_equation_residual(g, detail::panel_midpoints(g.quad, p.alpha()),
                                       opt.kernel_override);
    return g;
}

/**
 * Picard fixed-point solve from the constant function 1.  Requires the
 * contraction bound below one, i.e. beta > beta_critical().
 */
inline SolutionGrid picard_solve(const KernelParams& p, EquationTag tag, double theta = 0.0,
                                 const SolverOptions& opt = {}) {
    if (p.contraction_bound() >= 1.0)
        throw std::invalid_argument(
            "picard_solve: operator bound " + std::to_string(p.contraction_bound()) +
            " >= 1; requires beta > beta_critical() = " + std::to_string(beta_critical()));
    SolutionGrid g = detail::prepare_grid(p, tag, theta, opt);
    const auto n = g.quad.nodes.size();
    const double sgn = equation_sign(tag);
    const double stop = std::max(1e-15, 1e-3 * g.tol);

    std::vector<std::complex<double>> f(n, 1.0), next(n);
    const int max_iter = 2000;
    int it = 0;
    for (; it < max_iter; ++it) {
        double change = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k)
                acc += g.quad.weights[k] * g.kernel_values[k] * f[k] /
                       (g.quad.nodes[k] + g.quad.nodes[j]);
            next[j] = 1.0 + sgn * acc;
            change = std::max(change, std::abs(next[j] - f[j]));
        }
        f.swap(next);
        if (change < stop) break;
    }
    if (it == max_iter)
        throw std::runtime_error("picard_solve: no convergence within " +
                                 std::to_string(max_iter) + " iterations");

    g.values = std::move(f);
    g.iterations = it + 1;
    g.residual = max_equation_residual(g, detail::panel_midpoints(g.quad, p.alpha()),
                                       opt.kernel_override);
    return g;
}

}  // namespace freud
