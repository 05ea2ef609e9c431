#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammafn.hpp"
#include "gbeta.hpp"
#include "kernel.hpp"
#include "surface.hpp"

/*
 * The Mittag-Leffler function E_a(z) = sum_n z^n / Gamma(a n + 1) and its
 * exponential-plus-integral decomposition for a = 1/b > 1:
 *
 *   E_a(z) = b * sum_k e^{Z_k}  +  I(z),      Z_k = z^b e^{2 pi i k b},
 *
 * where the sum keeps exactly the k with |arg Z_k| < pi (half weight on the
 * boundary, the dented-contour convention) and the remainder integral
 * collapses to a difference of two Stieltjes transforms
 *
 *   I(z) = (b / 2 pi i) [ G_b(z e^{i c pi}) - G_b(z e^{-i c pi}) ]
 *
 * with c = 2l-1-a on a in (2l-1, 2l) and c = 2l+1-a on a in (2l, 2l+1),
 * both G arguments wrapped to the principal sheet.  Integer a makes the
 * integral vanish and the retained exponentials alone are exact.
 */

namespace freud {

/** Power series evaluation, valid for any z that keeps the terms in range. */
inline std::complex<double> ml_series(double alpha, std::complex<double> z) {
    if (!(alpha > 0.0)) throw std::invalid_argument("ml_series: requires alpha > 0");
    if (z == std::complex<double>(0.0, 0.0)) return 1.0;

    const double lr = std::log(std::abs(z));
    const double th = std::arg(z);
    std::complex<double> acc = 1.0;
    for (int n = 1; n <= 10000; ++n) {
        const double e = n * lr - log_gamma(alpha * n + 1.0);
        if (e > 700.0)
            throw std::overflow_error(
                "ml_series: term overflows at n = " + std::to_string(n) +
                "; use the exponential-plus-integral decomposition");
        const std::complex<double> term = std::polar(std::exp(e), n * th);
        acc += term;
        if (std::abs(term) < 1e-17 * std::abs(acc) && n > 4) return acc;
    }
    throw std::runtime_error("ml_series: no convergence within 10000 terms");
}

/** Interval case for the remainder integral: 1 = integer alpha (I = 0). */
inline int ml_case(double alpha, double* c_out = nullptr, int* l_out = nullptr) {
    const double fl = std::floor(alpha);
    if (alpha == fl) {
        if (c_out) *c_out = 0.0;
        if (l_out) *l_out = 0;
        return 1;
    }
    const long fli = static_cast<long>(fl);
    int cs;
    int l;
    double c;
    if (fli % 2 == 1) {
        cs = 2;
        l = static_cast<int>((fli + 1) / 2);
        c = 2.0 * l - 1.0 - alpha;
    } else {
        cs = 3;
        l = static_cast<int>(fli / 2);
        c = 2.0 * l + 1.0 - alpha;
    }
    if (c_out) *c_out = c;
    if (l_out) *l_out = l;
    return cs;
}

struct MLTerm {
    long k = 0;
    std::complex<double> Z;
    double weight = 0.0;   // 1 retained, 0.5 on the dented boundary, 0 dropped
};

struct MLDecomposition {
    double alpha = 0.0;
    double beta = 0.0;
    SurfacePoint z;
    int case_id = 0;
    std::vector<MLTerm> terms;
    std::complex<double> sigma;
    std::complex<double> i_value;
    std::complex<double> value;
    bool dented = false;
};

inline MLDecomposition ml_via_gbeta(double alpha, SurfacePoint z, double tol = 1e-10) {
    if (!(alpha >= 1.0))
        throw std::invalid_argument("ml_via_gbeta: decomposition needs alpha >= 1");
    if (alpha > 100.0) throw std::invalid_argument("ml_via_gbeta: alpha capped at 100");
    if (!(z.r > 0.0)) throw std::domain_error("ml_via_gbeta: requires r > 0");

    const double b = 1.0 / alpha;
    const double rb = std::pow(z.r, b);
    if (rb > 700.0)
        throw std::overflow_error("ml_via_gbeta: e^{Z_k} overflows at |z|^beta = " +
                                  std::to_string(rb));

    MLDecomposition d;
    d.alpha = alpha;
    d.beta = b;
    d.z = z;

    const double eps_dent = 1e-9;
    const long klo =
        static_cast<long>(std::floor((-pi / b - z.phi) / (2.0 * pi))) - 1;
    const long khi = static_cast<long>(std::ceil((pi / b - z.phi) / (2.0 * pi))) + 1;
    std::complex<double> sum = 0.0;
    for (long k = klo; k <= khi; ++k) {
        const double argz = b * (z.phi + 2.0 * pi * k);
        double w = 0.0;
        if (std::abs(argz) < pi - eps_dent) {
            w = 1.0;
        } else if (std::abs(std::abs(argz) - pi) <= eps_dent) {
            w = 0.5;
            d.dented = true;
        }
        const std::complex<double> Z = std::polar(rb, argz);
        d.terms.push_back({k, Z, w});
        if (w > 0.0) sum += w * std::exp(Z);
    }
    d.sigma = b * sum;

    double c = 0.0;
    d.case_id = ml_case(alpha, &c);
    if (d.case_id != 1) {
        const KernelParams pb(b, 0.009, 1.0);
        const GbetaValue g1 = g_beta_ex(pb, {z.r, wrap_angle(z.phi + c * pi)}, tol);
        const GbetaValue g2 = g_beta_ex(pb, {z.r, wrap_angle(z.phi - c * pi)}, tol);
        d.i_value = b / std::complex<double>(0.0, 2.0 * pi) * (g1.value - g2.value);
        d.dented = d.dented || g1.pole_on_path || g2.pole_on_path;
    }
    d.value = d.sigma + d.i_value;
    return d;
}

}  // namespace freud
