#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "continuation.hpp"
#include "kernel.hpp"
#include "solver.hpp"
#include "surface.hpp"

/*
 * The piecewise-analytic 2x2 matrix
 *
 *          | L(s)          +-U(s e^{-i pi}) |
 *   M(s) = |                                |        (upper half-plane;
 *          | +-U(s)        L(s e^{-i pi})   |         lower: shift +i pi)
 *
 * built from the half-sum L = (u+v)/2 and half-difference U = (u-v)/2, with
 * the off-diagonal sign +1 for even parity and -1 for odd.  Across the real
 * axis its boundary values satisfy the multiplicative jump
 *
 *   M_+(x) = M_-(x) [[1, -eta(x)], [eta(-x), 1]],
 *
 * eta supported on x > 0, it tends to the identity at infinity and stays
 * bounded at the origin.  verify_rhp measures all four conditions on a
 * log-spaced axis grid, two far rings, and an origin sample.
 */

namespace freud {

using Mat2 = std::array<std::array<std::complex<double>, 2>, 2>;

inline Mat2 mat2_identity() {
    Mat2 m{};
    m[0][0] = m[1][1] = 1.0;
    return m;
}

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return m;
}

inline std::complex<double> mat2_det(const Mat2& m) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

inline double mat2_max_abs(const Mat2& m) {
    double v = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v = std::max(v, std::abs(m[i][j]));
    return v;
}

inline double mat2_max_diff(const Mat2& a, const Mat2& b) {
    double v = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v = std::max(v, std::abs(a[i][j] - b[i][j]));
    return v;
}

class Parametrix {
  public:
    Parametrix(const KernelParams& p, Parity n_parity, SolverOptions opt = {})
        : params_(p),
          parity_(n_parity),
          opt_(opt),
          us_(p, EquationTag::u, opt),
          vs_(p, EquationTag::v, opt) {}

    const KernelParams& params() const { return params_; }
    Parity parity() const { return parity_; }

    /** Matrix off the real axis; requires arg s in (-pi, 0) or (0, pi). */
    Mat2 assemble(const SurfacePoint& s) const {
        if (!(s.r > 0.0)) throw std::domain_error("assemble: requires r > 0");
        if (s.phi == 0.0 || std::abs(s.phi) >= pi)
            throw std::domain_error(
                "assemble: arg s must lie in (-pi, 0) or (0, pi); the axis limits "
                "come from boundary_value");
        return half_plane(s, s.phi > 0.0 ? -1.0 : 1.0);
    }

    /** One-sided limit on the real axis; side +1 from above, -1 from below. */
    Mat2 boundary_value(double x, int side) const {
        if (!(x != 0.0) || !std::isfinite(x))
            throw std::domain_error("boundary_value: needs finite real x != 0");
        if (side != 1 && side != -1)
            throw std::invalid_argument("boundary_value: side must be +1 or -1");
        const double shift = side > 0 ? -1.0 : 1.0;
        if (x > 0.0) return half_plane({x, 0.0}, shift);
        return half_plane({-x, side > 0 ? pi : -pi}, shift);
    }

    /** Jump matrix [[1, -eta(x)], [eta(-x), 1]] on the real axis. */
    Mat2 jump(double x) const {
        Mat2 m = mat2_identity();
        m[0][1] = -eta(x);
        m[1][0] = eta(-x);
        return m;
    }

  private:
    std::complex<double> eta(double x) const {
        if (x < 0.0) return {0.0, 0.0};
        if (opt_.kernel_override) {
            const double sign = (parity_ == Parity::even) ? -1.0 : 1.0;
            return std::complex<double>(0.0, sign * 2.0 * pi) * opt_.kernel_override(x);
        }
        return eta_L(x, parity_, params_);
    }

    Mat2 half_plane(const SurfacePoint& s, double shift) const {
        const double sgn = (parity_ == Parity::even) ? 1.0 : -1.0;
        const SurfacePoint sh{s.r, s.phi + shift * pi};
        Mat2 m;
        m[0][0] = L_beta(us_, vs_, s);
        m[0][1] = sgn * U_beta(us_, vs_, sh);
        m[1][0] = sgn * U_beta(us_, vs_, s);
        m[1][1] = L_beta(us_, vs_, sh);
        return m;
    }

    KernelParams params_;
    Parity parity_;
    SolverOptions opt_;
    RaySolutions us_;
    RaySolutions vs_;
};

struct RhpGridSpec {
    double jump_lo = 1e-3;
    double jump_hi = 1e3;
    int jump_points = 25;                          // per sign of the axis
    std::vector<double> ring_radii = {1e2, 1e4};
    int ring_angles = 16;
    std::vector<double> origin_samples = {1e-2, 1e-3, 1e-4};
    double jump_tol = 1e-6;
    double det_tol = 1e-7;
    double far_field_cap = 10.0;
    double origin_cap = 10.0;
};

struct RhpReport {
    double max_jump_residual = 0.0;
    double max_det_err = 0.0;
    double far_field_bound = 0.0;
    double origin_max_norm = 0.0;
    bool pass = false;
};

inline RhpReport verify_rhp(const Parametrix& P, const RhpGridSpec& grid = {}) {
    if (grid.jump_points < 2 || grid.ring_angles < 1)
        throw std::invalid_argument("verify_rhp: degenerate grid");
    RhpReport rep;

    const double lstep = std::log(grid.jump_hi / grid.jump_lo) / (grid.jump_points - 1);
    for (int i = 0; i < grid.jump_points; ++i) {
        const double x = grid.jump_lo * std::exp(i * lstep);
        for (const double xx : {x, -x}) {
            const Mat2 above = P.boundary_value(xx, 1);
            const Mat2 below = P.boundary_value(xx, -1);
            rep.max_jump_residual = std::max(
                rep.max_jump_residual, mat2_max_diff(above, mat2_mul(below, P.jump(xx))));
            rep.max_det_err = std::max({rep.max_det_err, std::abs(mat2_det(above) - 1.0),
                                        std::abs(mat2_det(below) - 1.0)});
        }
    }

    const Mat2 eye = mat2_identity();
    for (const double rr : grid.ring_radii) {
        for (int j = 0; j < grid.ring_angles; ++j) {
            const double phi = -pi + (2.0 * j + 1.0) * pi / grid.ring_angles;
            const Mat2 m = P.assemble({rr, phi});
            rep.far_field_bound = std::max(rep.far_field_bound, mat2_max_diff(m, eye) * rr);
            rep.max_det_err = std::max(rep.max_det_err, std::abs(mat2_det(m) - 1.0));
        }
    }

    for (const double x : grid.origin_samples) {
        for (const int side : {1, -1}) {
            for (const double xx : {x, -x}) {
                const Mat2 m = P.boundary_value(xx, side);
                rep.origin_max_norm = std::max(rep.origin_max_norm, mat2_max_abs(m));
            }
        }
    }

    rep.pass = rep.max_jump_residual < grid.jump_tol && rep.max_det_err < grid.det_tol &&
               std::isfinite(rep.far_field_bound) && rep.far_field_bound < grid.far_field_cap &&
               rep.origin_max_norm < grid.origin_cap;
    return rep;
}

}  // namespace freud
