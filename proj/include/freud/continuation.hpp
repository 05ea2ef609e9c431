#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "solver.hpp"

/*
 * Evaluation of u and v anywhere on the Riemann surface.  Within the reach
 * of the cached rays the rotated Stieltjes representation applies directly;
 * beyond it the sheet-jump relations
 *
 *   u(z e^{-i pi}) - u(z e^{i pi}) =  2 pi i K(z) u(z),
 *   v(z e^{-i pi}) - v(z e^{i pi}) = -2 pi i K(z) v(z)
 *
 * peel off one turn at a time until the argument lands in the base range.
 * The reduction threshold pi + 0.35 keeps every bottomed-out evaluation
 * comfortably away from the cut of its nearest ray.
 */

namespace freud {

class RaySolutions {
public:
    static constexpr double theta_max = pi / 2.0 - 0.1;

    RaySolutions(const KernelParams& p, EquationTag tag, SolverOptions opt = {})
        : params_(p), tag_(tag), opt_(std::move(opt)),
          rays_{0.0, pi / 4.0, -pi / 4.0, theta_max, -theta_max} {}

    const KernelParams& params() const { return params_; }
    EquationTag tag() const { return tag_; }
    const std::vector<double>& rays() const { return rays_; }

    /** Grid for one of the listed rays, solved on first use. */
    const SolutionGrid& grid(double theta) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(theta);
        if (it == cache_.end())
            it = cache_.emplace(theta, solve_ray(params_, tag_, theta, opt_)).first;
        return it->second;
    }

private:
    KernelParams params_;
    EquationTag tag_;
    SolverOptions opt_;
    std::vector<double> rays_;
    mutable std::mutex mu_;
    mutable std::map<double, SolutionGrid> cache_;
};

/**
 * Evaluate from the cached ray nearest in angle; requires some ray with
 * |phi - theta| < pi.  Outside that reach use eval_surface.
 */
inline std::complex<double> eval_sector(const RaySolutions& rs, const SurfacePoint& z) {
    double best_theta = 0.0, best_dist = -1.0;
    for (double th : rs.rays()) {
        const double d = std::abs(z.phi - th);
        if (d < pi - 1e-9 && (best_dist < 0.0 || d < best_dist)) {
            best_theta = th;
            best_dist = d;
        }
    }
    if (best_dist < 0.0)
        throw std::domain_error("eval_sector: |arg z| beyond the cached rays; use eval_surface");
    return rs.grid(best_theta).interpolate(std::polar(z.r, z.phi - best_theta));
}

/** Evaluate at any argument, peeling sheets down to the base range. */
inline std::complex<double> eval_surface(const RaySolutions& rs, const SurfacePoint& z) {
    if (std::abs(z.phi) <= pi + 0.35) return eval_sector(rs, z);
    const double sgn = equation_sign(rs.tag());
    const std::complex<double> two_pi_i(0.0, 2.0 * pi);
    if (z.phi > 0.0) {
        const SurfacePoint mid{z.r, z.phi - pi}, base{z.r, z.phi - 2.0 * pi};
        return eval_surface(rs, base) -
               sgn * two_pi_i * kernel_complex(mid, rs.params()) * eval_surface(rs, mid);
    }
    const SurfacePoint mid{z.r, z.phi + pi}, base{z.r, z.phi + 2.0 * pi};
    return eval_surface(rs, base) +
           sgn * two_pi_i * kernel_complex(mid, rs.params()) * eval_surface(rs, mid);
}

/** (u + v)/2 at z. */
inline std::complex<double> L_beta(const RaySolutions& us, const RaySolutions& vs,
                                   const SurfacePoint& z) {
    return 0.5 * (eval_surface(us, z) + eval_surface(vs, z));
}

/** (u - v)/2 at z. */
inline std::complex<double> U_beta(const RaySolutions& us, const RaySolutions& vs,
                                   const SurfacePoint& z) {
    return 0.5 * (eval_surface(us, z) - eval_surface(vs, z));
}

/**
 * |f(r e^{-i pi}) - f(r e^{i pi}) -/+ 2 pi i K(r) f(r)| for f = u or v;
 * zero up to discretization error by the sheet-jump relation.
 */
inline double connection_residual(const RaySolutions& rs, double r) {
    const std::complex<double> below = eval_sector(rs, {r, -pi});
    const std::complex<double> above = eval_sector(rs, {r, pi});
    const std::complex<double> axis = eval_sector(rs, {r, 0.0});
    const std::complex<double> two_pi_i(0.0, 2.0 * pi);
    const double k = kernel_real(r, rs.params());
    return std::abs(below - above - equation_sign(rs.tag()) * two_pi_i * k * axis);
}

}  // namespace freud
