#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kernel.hpp"

/*
 * Quadrature for half-line integrals whose integrand decays like
 * exp(-decay * t^b) and oscillates like sin(osc * t^b).
 *
 * The substitution w = t^b maps the integral to
 *
 *   int_0^inf f(w^{1/b}) (1/b) w^{1/b - 1} dw,
 *
 * which removes the O(t^b) vanishing of the kernel at the origin: after the
 * substitution the integrand of the operator application is bounded as
 * w -> 0 even when the Stieltjes denominator is evaluated at x = 0.  In
 * w-space the decay is a plain exponential, so the domain is truncated at
 * W = ln(1/tol)/decay and covered by composite Gauss-Legendre panels,
 * geometrically graded (ratio 2) toward w = 0 with the panel width capped at
 * three oscillation periods 2 pi / osc so that the sine factor stays
 * resolved on every panel.
 */

namespace freud {

struct QuadratureScheme {
    std::vector<double> nodes;            // t-space, ascending
    std::vector<double> weights;          // for int_0^inf f(t) dt
    double t_max = 0.0;
    double w_max = 0.0;
    double tol = 0.0;
    double alpha = 1.0;                   // node map t = w^alpha
    std::vector<double> panel_bounds_w;   // layout descriptor, w-space
    int nodes_per_panel = 0;
};

namespace detail {

/** Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n. */
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> x(n), w(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    cache[n] = {x, w};
    return cache[n];
}

/**
 * Populate nodes and weights from the stored panel layout.  For alpha >= 1
 * each w-panel is integrated in w with the smooth Jacobian alpha w^{alpha-1};
 * for alpha < 1 that Jacobian is singular at the origin, so panels are
 * integrated in t directly over [a^alpha, b^alpha], where the integrand is
 * the smooth one.
 */
inline void fill_panel_nodes(QuadratureScheme& s) {
    s.nodes.clear();
    s.weights.clear();
    const auto [xg, wg] = gauss_legendre(s.nodes_per_panel);
    const std::size_t n_panels = s.panel_bounds_w.size() - 1;
    s.nodes.reserve(n_panels * xg.size());
    s.weights.reserve(n_panels * xg.size());
    for (std::size_t pnl = 0; pnl < n_panels; ++pnl) {
        const double a = s.panel_bounds_w[pnl], b = s.panel_bounds_w[pnl + 1];
        if (s.alpha >= 1.0) {
            const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
            for (std::size_t j = 0; j < xg.size(); ++j) {
                const double w = mid + hw * xg[j];
                s.nodes.push_back(std::pow(w, s.alpha));
                s.weights.push_back(hw * wg[j] * s.alpha * std::pow(w, s.alpha - 1.0));
            }
        } else {
            const double ta = std::pow(a, s.alpha), tb = std::pow(b, s.alpha);
            const double mid = 0.5 * (ta + tb), hw = 0.5 * (tb - ta);
            for (std::size_t j = 0; j < xg.size(); ++j) {
                s.nodes.push_back(mid + hw * xg[j]);
                s.weights.push_back(hw * wg[j]);
            }
        }
    }
}

}  // namespace detail

/**
 * Build the graded scheme for an integrand decaying like exp(-decay * t^power)
 * and oscillating like sin(osc * t^power).  Throws when the requested layout
 * exceeds the node budget; the message carries the tolerance the budget can
 * reach.
 */
inline QuadratureScheme build_exp_quadrature(double power, double tol, double decay, double osc,
                                             int panels = 24, int nodes_per_panel = 16,
                                             int max_nodes = 6144) {
    if (!(tol > 0.0 && tol <= 1e-2))
        throw std::invalid_argument("build_exp_quadrature: tol must lie in (0, 1e-2]");
    if (!(power > 0.0))
        throw std::invalid_argument("build_exp_quadrature: power must be positive");
    if (!(decay > 0.0))
        throw std::invalid_argument("build_exp_quadrature: decay rate must be positive");

    QuadratureScheme s;
    s.tol = tol;
    s.alpha = 1.0 / power;
    s.nodes_per_panel = nodes_per_panel;
    s.w_max = std::log(1.0 / tol) / decay;
    s.t_max = std::pow(s.w_max, s.alpha);

    const double h0 = s.w_max / (std::pow(2.0, panels) - 1.0);
    const double h_cap = (osc > 0.0) ? 3.0 * (2.0 * pi / osc)
                                     : std::numeric_limits<double>::infinity();
    s.panel_bounds_w.push_back(0.0);
    for (int k = 0; s.panel_bounds_w.back() < s.w_max; ++k) {
        const double h = std::min(h0 * std::pow(2.0, k), h_cap);
        s.panel_bounds_w.push_back(std::min(s.panel_bounds_w.back() + h, s.w_max));
    }

    const long n_panels = static_cast<long>(s.panel_bounds_w.size()) - 1;
    if (n_panels * nodes_per_panel > max_nodes) {
        const long fit = max_nodes / nodes_per_panel;
        const double w_reach = s.panel_bounds_w[std::min<long>(fit, n_panels)];
        throw std::runtime_error(
            "build_exp_quadrature: node budget exceeded (" +
            std::to_string(n_panels * nodes_per_panel) + " > " + std::to_string(max_nodes) +
            "); achievable truncation ~ " + std::to_string(std::exp(-decay * w_reach)));
    }

    detail::fill_panel_nodes(s);
    return s;
}

/**
 * Kernel-adapted scheme.  `decay` and `osc` default to the real-axis kernel
 * rates sin(pi b/2) and cos(pi b/2).
 */
inline QuadratureScheme build_quadrature(const KernelParams& p, double tol,
                                         double decay = -1.0, double osc = -1.0,
                                         int panels = 24, int nodes_per_panel = 16,
                                         int max_nodes = 6144) {
    if (decay < 0.0) decay = p.sin_half();
    if (osc < 0.0) osc = p.cos_half();
    return build_exp_quadrature(p.beta(), tol, decay, osc, panels, nodes_per_panel, max_nodes);
}

/** Same panel layout, `factor` times the nodes per panel. */
inline QuadratureScheme refine_quadrature(const QuadratureScheme& base, int factor = 2) {
    QuadratureScheme s = base;
    s.nodes_per_panel = base.nodes_per_panel * factor;
    detail::fill_panel_nodes(s);
    return s;
}

}  // namespace freud
