#include <cstdio>

#include "freud/gbeta.hpp"
#include "freud/mittag.hpp"

/* Evaluate the exponential Stieltjes transform on several sheets, then
 * rebuild a Mittag-Leffler value from its exponential decomposition. */
int main() {
    const freud::KernelParams p(0.6);
    std::printf("arg/pi   method          Re G          Im G\n");
    for (double f : {0.0, 0.5, 1.0, 2.0, -3.5}) {
        const freud::GbetaValue g = freud::g_beta_ex(p, {1.3, f * freud::pi});
        std::printf("%-8.2f %-15s %-13.9f %-13.9f\n", f, g.method.c_str(),
                    g.value.real(), g.value.imag());
    }

    const double alpha = 2.3;
    const freud::MLDecomposition d = freud::ml_via_gbeta(alpha, {2.0, 1.0});
    std::printf("\nalpha = %.1f at z = 2 e^{i}: %zu branch terms, case %d\n", alpha,
                d.terms.size(), d.case_id);
    std::printf("decomposition %.12f + %.12fi\n", d.value.real(), d.value.imag());
    const std::complex<double> series = freud::ml_series(alpha, std::polar(2.0, 1.0));
    std::printf("power series  %.12f + %.12fi\n", series.real(), series.imag());
    return 0;
}
