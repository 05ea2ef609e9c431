#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "surface.hpp"

/*
 * The kernel of the Stieltjes integral operator
 *
 *   K(t) = (1/pi) exp(-t^b sin(pi b/2)) sin(t^b cos(pi b/2)),   b in (0,1),
 *
 * together with its analytic extension to any ray of the Riemann surface,
 *
 *   K(z) = (1/(2 pi i)) [ exp(e^{ i(pi/2 + b pi/2)} z^b)
 *                       - exp(e^{-i(pi/2 + b pi/2)} z^b) ],
 *
 * the off-diagonal jump data eta(s) = 2 pi i (-1)^{n+1} K(s) 1_{[0,inf)}(s),
 * the origin-behavior class (bounded / log / power in b vs 1/2), and the
 * contraction bound cot(pi b/2)/(pi b) whose unit root beta_critical()
 * separates the fixed-point-iterable regime from the rest.
 */

namespace freud {

enum class Parity { even, odd };

class KernelParams {
public:
    explicit KernelParams(double beta, double beta_min = 0.05, double beta_max = 0.95)
        : beta_(beta) {
        if (!(beta > 0.0 && beta <= 1.0 && beta >= beta_min && beta <= beta_max))
            throw std::invalid_argument("beta out of range [" + std::to_string(beta_min) +
                                        ", " + std::to_string(beta_max) + "]: " +
                                        std::to_string(beta));
        sin_half_ = std::sin(pi * beta / 2.0);
        cos_half_ = std::cos(pi * beta / 2.0);
        alpha_ = 1.0 / beta;
        contraction_bound_ = cos_half_ / sin_half_ / (pi * beta);
    }

    double beta() const { return beta_; }
    double sin_half() const { return sin_half_; }
    double cos_half() const { return cos_half_; }
    double alpha() const { return alpha_; }
    double contraction_bound() const { return contraction_bound_; }

private:
    double beta_;
    double sin_half_;
    double cos_half_;
    double alpha_;
    double contraction_bound_;
};

enum class OriginKind { bounded, log, power };

struct OriginClass {
    OriginKind kind;
    double exponent;   // b - 1/2 when kind == power, else 0
};

inline OriginClass origin_class(const KernelParams& p) {
    if (p.beta() > 0.5) return {OriginKind::bounded, 0.0};
    if (p.beta() == 0.5) return {OriginKind::log, 0.0};
    return {OriginKind::power, p.beta() - 0.5};
}

inline double kernel_real(double t, const KernelParams& p) {
    if (t < 0.0) throw std::domain_error("kernel_real: t must be >= 0");
    const double tb = std::pow(t, p.beta());
    return std::exp(-tb * p.sin_half()) * std::sin(tb * p.cos_half()) / pi;
}

/** K on the ray arg z = phi, any phi; agrees with kernel_real at phi = 0. */
inline std::complex<double> kernel_complex(double r, double phi, const KernelParams& p) {
    if (r < 0.0) throw std::domain_error("kernel_complex: modulus must be >= 0");
    if (phi == 0.0) return kernel_real(r, p);
    const std::complex<double> zb = std::polar(std::pow(r, p.beta()), p.beta() * phi);
    const std::complex<double> a = std::polar(1.0, pi / 2.0 * (1.0 + p.beta()));
    const std::complex<double> two_pi_i(0.0, 2.0 * pi);
    return (std::exp(a * zb) - std::exp(std::conj(a) * zb)) / two_pi_i;
}

inline std::complex<double> kernel_complex(const SurfacePoint& z, const KernelParams& p) {
    return kernel_complex(z.r, z.phi, p);
}

/** 2 pi i (-1)^{n+1} K(s) for s >= 0, zero on the negative axis. */
inline std::complex<double> eta_L(double s, Parity n_parity, const KernelParams& p) {
    if (s < 0.0) return {0.0, 0.0};
    const double sign = (n_parity == Parity::even) ? -1.0 : 1.0;
    return std::complex<double>(0.0, sign * 2.0 * pi) * kernel_real(s, p);
}

inline double contraction_bound(const KernelParams& p) { return p.contraction_bound(); }

/** Root of cot(pi b/2)/(pi b) = 1 on (0,1), bisected to 1e-12. */
inline double beta_critical() {
    static const double value = [] {
        auto f = [](double b) {
            return std::cos(pi * b / 2.0) / std::sin(pi * b / 2.0) / (pi * b) - 1.0;
        };
        double lo = 0.1, hi = 0.9;
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            if (f(mid) > 0.0) lo = mid; else hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return value;
}

}  // namespace freud
