#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammafn.hpp"
#include "kernel.hpp"
#include "quadrature.hpp"
#include "surface.hpp"

/*
 * The Stieltjes transform of the stretched exponential,
 *
 *   G_b(z) = int_0^inf e^{-t^b} / (t + z) dt,      0 < b <= 1,
 *
 * evaluated anywhere on the log-type Riemann surface.  Four routes:
 *
 *   - rotated-ray quadrature on |arg z| <= pi, turning the integration ray
 *     away from the pole t = -z when arg z leaves (-pi/2, pi/2); on the
 *     boundary |arg z| = pi the ray value is the one-sided limit, equal to
 *     the principal value plus half a residue, and the result is flagged;
 *   - sheet recursion for |arg z| > pi: each crossing of the negative axis
 *     picks up a full residue 2 pi i e^{-(z')^b} at a reflected argument;
 *   - convergent small-z and asymptotic large-z expansions, with the small-z
 *     coefficient route guarded against near-rational b where its sine
 *     denominators collapse;
 *   - the exact reduction of rational b = p/q to q integer-exponent
 *     transforms G_p at rotated q-th roots, whose [0, 1] pieces integrate in
 *     closed form to rational-plus-logarithm expressions I_n.
 */

namespace freud {

struct GbetaValue {
    std::complex<double> value;
    bool pole_on_path = false;
    std::string method;
    double err_est = 0.0;
};

namespace detail {

/**
 * int_0^inf e^{-t^power}/(t+z) dt for |arg z| <= pi, by Gauss-Legendre
 * quadrature along the ray arg t = theta chosen to clear the pole at -z.
 * On |arg z| = pi the rotated ray gives the one-sided limit from inside
 * the sheet; adding back the half-residue yields the symmetric principal
 * value, which is what this function reports there.
 */
inline GbetaValue exp_stieltjes_ray(double power, SurfacePoint z, double tol) {
    const double aphi = std::abs(z.phi);
    if (aphi > pi)
        throw std::domain_error("exp_stieltjes_ray: requires |arg z| <= pi");

    GbetaValue out;
    double theta = 0.0;
    if (aphi == pi) {
        theta = (z.phi > 0 ? 1.0 : -1.0) * 0.9 * std::min(1.0, pi / (2.0 * power));
        out.pole_on_path = true;
        out.method = "quadrature-pv";
    } else if (aphi > pi / 2.0) {
        theta = (z.phi > 0 ? 1.0 : -1.0) *
                std::min(0.45 * pi / power, aphi - pi / 2.0 + 0.3);
        out.method = "quadrature";
    } else {
        out.method = "quadrature";
    }

    const double decay = std::cos(power * theta);
    const double osc = std::abs(std::sin(power * theta));
    const QuadratureScheme s = build_exp_quadrature(power, tol, decay, osc);

    const std::complex<double> zc = std::polar(z.r, z.phi);
    const std::complex<double> ray = std::polar(1.0, theta);
    const std::complex<double> rot = std::polar(1.0, power * theta);
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < s.nodes.size(); ++k) {
        const double t = s.nodes[k];
        const std::complex<double> ex = std::exp(-std::pow(t, power) * rot);
        acc += s.weights[k] * ex / (t * ray + zc);
    }
    out.value = ray * acc;
    if (out.pole_on_path) {
        const double half_res = pi * std::exp(-std::pow(z.r, power));
        out.value += std::complex<double>(0.0, z.phi > 0 ? half_res : -half_res);
    }
    out.err_est = tol;
    return out;
}

}  // namespace detail

/** G_b(z) with full method/flag information. */
inline GbetaValue g_beta_ex(const KernelParams& p, SurfacePoint z, double tol = 1e-10) {
    if (!(z.r > 0.0)) throw std::domain_error("g_beta: requires r > 0");
    const double b = p.beta();
    if (std::abs(z.phi) <= pi) return detail::exp_stieltjes_ray(b, z, tol);

    const double sgn = z.phi > 0 ? 1.0 : -1.0;
    const long m = static_cast<long>(std::floor((std::abs(z.phi) + pi) / (2.0 * pi)));
    const double reduced = std::clamp(z.phi - sgn * 2.0 * m * pi, -pi, pi);
    GbetaValue out = detail::exp_stieltjes_ray(b, {z.r, reduced}, tol);

    const double rb = std::pow(z.r, b);
    std::complex<double> corr = 0.0;
    for (long j = 1; j <= m; ++j) {
        const double aj = b * (z.phi - sgn * (2.0 * j - 1.0) * pi);
        const double re = -rb * std::cos(aj);
        if (re > 700.0)
            throw std::overflow_error("g_beta: residue term overflows at sheet " +
                                      std::to_string(j) + " of " + std::to_string(m));
        corr += std::exp(std::complex<double>(re, -rb * std::sin(aj)));
    }
    out.value -= sgn * 2.0 * pi * std::complex<double>(0.0, 1.0) * corr;
    out.method = out.pole_on_path ? "continuation-pv" : "continuation";
    return out;
}

inline std::complex<double> g_beta(const KernelParams& p, SurfacePoint z, double tol = 1e-10) {
    return g_beta_ex(p, z, tol).value;
}

/*
 * Small-z expansion
 *
 *   G_b(z) = -ln z + sum_{n>=1} (-1)^{n+1} pi / (n! sin(b n pi)) z^{b n}
 *                  + sum_{k>=0} c_{b,k} (-1)^k z^k,
 *
 * c_{b,0} = -gamma/b and, for k >= 1, c_{b,k} obtained by splitting the
 * regularized moment of e^{-t^b} t^{-k-1} at t = 1:
 *
 *   c_{b,k} = sum_{n>=0} (-1)^n / (n! (n b - k)) + Gamma(-k/b, 1) / b.
 *
 * Both sums degenerate when b is (nearly) rational, which the guards below
 * turn into an explicit error pointing at the exact rational reduction.
 */

struct GbetaCoeffs {
    double beta = 0.0;
    double c0 = 0.0;                  // constant term, -gamma/beta
    std::vector<double> ck;           // k = 1 .. ck.size(), sign convention (-1)^k applied at use
    std::vector<double> beta_terms;   // n = 1 .. size(), coefficient of z^{beta n}
};

inline GbetaCoeffs gbeta_coeffs(const KernelParams& p, int n_beta_terms, int n_int_terms) {
    if (n_beta_terms < 0 || n_int_terms < 0)
        throw std::invalid_argument("gbeta_coeffs: term counts must be non-negative");
    if (n_beta_terms > 150 || n_int_terms > 150)
        throw std::invalid_argument("gbeta_coeffs: term counts capped at 150");
    const double b = p.beta();

    GbetaCoeffs c;
    c.beta = b;
    c.c0 = -euler_gamma / b;

    double fact = 1.0;
    for (int n = 1; n <= n_beta_terms; ++n) {
        fact *= n;
        const double sn = std::sin(b * n * pi);
        if (std::abs(sn) < 1e-6)
            throw std::invalid_argument(
                "gbeta_coeffs: beta is within 1e-6/pi/" + std::to_string(n) +
                " of a rational with denominator " + std::to_string(n) +
                "; use g_beta_rational");
        c.beta_terms.push_back((n % 2 ? 1.0 : -1.0) * pi / (fact * sn));
    }

    for (int k = 1; k <= n_int_terms; ++k) {
        double series = 0.0, nfact = 1.0;
        for (int n = 0; n <= 60; ++n) {
            if (n > 0) nfact *= n;
            const double den = n * b - k;
            if (std::abs(den) < 1e-6)
                throw std::invalid_argument(
                    "gbeta_coeffs: beta is within 1e-6 of " + std::to_string(k) + "/" +
                    std::to_string(n) + "; use g_beta_rational");
            const double term = (n % 2 ? -1.0 : 1.0) / (nfact * den);
            series += term;
            if (std::abs(term) < 1e-18 * std::abs(series) && n > 4) break;
        }
        c.ck.push_back(series + incomplete_gamma_upper(-k / b, 1.0) / b);
    }
    return c;
}

/** Small-z expansion value; requires |z| < 0.5 and non-rational-mode beta. */
inline std::complex<double> g_beta_small_z(const KernelParams& p, SurfacePoint z,
                                           int n_beta_terms = 24, int n_int_terms = 12) {
    if (!(z.r > 0.0 && z.r < 0.5))
        throw std::invalid_argument("g_beta_small_z: expansion needs 0 < |z| < 0.5");
    const GbetaCoeffs c = gbeta_coeffs(p, n_beta_terms, n_int_terms);

    std::complex<double> acc(-std::log(z.r), -z.phi);
    for (int n = 1; n <= n_beta_terms; ++n)
        acc += c.beta_terms[n - 1] * surface_pow(z, c.beta * n);
    acc += c.c0;
    for (int k = 1; k <= n_int_terms; ++k)
        acc += c.ck[k - 1] * (k % 2 ? -1.0 : 1.0) * surface_pow(z, static_cast<double>(k));
    return acc;
}

/**
 * Asymptotic large-z expansion sum_{n>=1} (-1)^{n-1} Gamma(n/b) / (b z^n).
 * terms <= 0 selects the optimal truncation; err_est is the first omitted
 * term.
 */
inline GbetaValue g_beta_large_z(const KernelParams& p, SurfacePoint z, int terms = 0) {
    if (!(z.r > 0.0)) throw std::domain_error("g_beta_large_z: requires r > 0");
    const double b = p.beta();
    const double lr = std::log(z.r);

    GbetaValue out;
    out.method = "large-z";
    std::complex<double> acc = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= (terms > 0 ? terms + 1 : 400); ++n) {
        if (n / b >= 170.0) {
            if (terms > 0 && n <= terms)
                throw std::overflow_error(
                    "g_beta_large_z: Gamma(n/beta) overflows at n = " + std::to_string(n));
            out.err_est = prev;
            return out;
        }
        const double mag = std::exp(log_gamma(n / b) - n * lr) / b;
        if (terms <= 0 && mag > prev) {
            out.err_est = mag;
            return out;
        }
        if (terms > 0 && n == terms + 1) {
            out.err_est = mag;
            return out;
        }
        acc += (n % 2 ? 1.0 : -1.0) * mag * std::polar(1.0, -n * z.phi);
        out.value = acc;
        prev = mag;
    }
    out.err_est = prev;
    return out;
}

namespace detail {

/** int_1^inf e^{-t^p}/(t+w) dt via s = t^p on geometric panels. */
inline std::complex<double> g_int_tail(int p, std::complex<double> w) {
    const auto [xg, wg] = gauss_legendre(24);
    const double ai = 1.0 / p;
    std::complex<double> acc = 0.0;
    double a = 1.0;
    while (a < 45.0) {
        const double bnd = std::min(2.0 * a, 48.0);
        const double mid = 0.5 * (a + bnd), hw = 0.5 * (bnd - a);
        for (int j = 0; j < 24; ++j) {
            const double s = mid + hw * xg[j];
            const double t = std::pow(s, ai);
            acc += hw * wg[j] * std::exp(-s) * ai * std::pow(s, ai - 1.0) / (t + w);
        }
        a = bnd;
    }
    return acc;
}

/**
 * G_p for integer p >= 1 and |w| <= 0.6: term-by-term closed forms
 *
 *   I_n(w) = int_0^1 t^{np}/(t+w) dt
 *          = sum_{k=0}^{np-1} (-1)^k w^k/(np-k) + (-1)^{np} w^{np} [ln(1+w) - ln w]
 *
 * summed against e^{-t^p} = sum (-1)^n t^{np}/n!, plus the [1, inf) tail.
 * The carried-argument ln w makes each I_n the limit from inside the sheet
 * when arg w = +-pi, where the plain integral would hit the pole; the
 * half-residue is added back so the reported value is the symmetric
 * principal value, matching exp_stieltjes_ray.
 */
inline GbetaValue g_int_series(int p, SurfacePoint w) {
    const std::complex<double> wc = std::polar(w.r, w.phi);
    const std::complex<double> bracket =
        std::log(1.0 + wc) - std::complex<double>(std::log(w.r), w.phi);

    std::complex<double> acc = 0.0;
    double fact = 1.0;
    for (int n = 0; n <= 21; ++n) {
        if (n > 0) fact *= n;
        std::complex<double> in;
        if (n == 0) {
            in = bracket;
        } else {
            const int np = n * p;
            std::complex<double> s = 0.0, wpow = 1.0;
            for (int k = 0; k < np; ++k) {
                s += (k % 2 ? -1.0 : 1.0) * wpow / static_cast<double>(np - k);
                wpow *= wc;
            }
            in = s + (np % 2 ? -1.0 : 1.0) * wpow * bracket;
        }
        acc += (n % 2 ? -1.0 : 1.0) * in / fact;
        if (std::abs(in) / fact < 1e-18 && n > 2) break;
    }

    GbetaValue out;
    out.value = acc + g_int_tail(p, wc);
    out.pole_on_path = std::abs(w.phi) == pi;
    if (out.pole_on_path) {
        const double half_res = pi * std::exp(-std::pow(w.r, p));
        out.value += std::complex<double>(0.0, w.phi > 0 ? half_res : -half_res);
    }
    out.method = "series";
    out.err_est = 1e-14;
    return out;
}

/** G_p for integer p >= 1 on |arg w| <= pi. */
inline GbetaValue g_int(int p, SurfacePoint w, double tol) {
    if (w.r <= 0.6) return g_int_series(p, w);
    return exp_stieltjes_ray(static_cast<double>(p), w, tol);
}

}  // namespace detail

/**
 * Exact reduction of G_{p/q} to q integer-exponent transforms,
 *
 *   G_{p/q}(z) = sum_{l=0}^{q-1} G_p(e^{(2l+1-q) pi i / q} zeta),   zeta = z^{1/q},
 *
 * with the principal q-th root.  The fraction is reduced internally.
 */
inline GbetaValue g_beta_rational(int p, int q, SurfacePoint z, double tol = 1e-10) {
    if (p < 1 || q < 1) throw std::invalid_argument("g_beta_rational: needs p, q >= 1");
    const int g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (p >= q) throw std::invalid_argument("g_beta_rational: needs p/q < 1 after reduction");
    if (!(z.r > 0.0)) throw std::domain_error("g_beta_rational: requires r > 0");
    if (std::abs(z.phi) > pi)
        throw std::domain_error("g_beta_rational: defined on |arg z| <= pi; use g_beta");

    const double rq = std::pow(z.r, 1.0 / q);
    GbetaValue out;
    out.method = "rational";
    for (int l = 0; l < q; ++l) {
        const SurfacePoint zl{rq, std::clamp((z.phi + (2.0 * l + 1.0 - q) * pi) / q, -pi, pi)};
        const GbetaValue gv = detail::g_int(p, zl, tol);
        out.value += gv.value;
        out.pole_on_path = out.pole_on_path || gv.pole_on_path;
        out.err_est += gv.err_est;
    }
    return out;
}

}  // namespace freud
