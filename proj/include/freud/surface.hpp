#pragma once

#include <cmath>
#include <complex>

/*
 * Points on the Riemann surface of z^beta are carried as explicit
 * (modulus, argument) pairs with unrestricted argument.  Collapsing to a
 * single complex number would silently identify sheets, so conversions to
 * std::complex are always explicit and one-way.
 */

namespace freud {

inline constexpr double pi = 3.14159265358979323846;

struct SurfacePoint {
    double r;     // modulus, > 0
    double phi;   // argument, unrestricted

    std::complex<double> to_complex() const {
        return std::polar(r, phi);
    }
};

/** Wrap an angle into (-pi, pi]. */
inline double wrap_angle(double phi) {
    double a = std::remainder(phi, 2.0 * pi);
    if (a <= -pi) a += 2.0 * pi;
    return a;
}

/** r^p * exp(i*p*phi), the power taken on the carried sheet. */
inline std::complex<double> surface_pow(const SurfacePoint& z, double p) {
    return std::polar(std::pow(z.r, p), p * z.phi);
}

/** log on the carried sheet: log r + i*phi. */
inline std::complex<double> surface_log(const SurfacePoint& z) {
    return {std::log(z.r), z.phi};
}

}  // namespace freud
