#include <cstdio>

#include "freud/continuation.hpp"

/* Solve both equations at beta = 0.6 and walk one of them around the origin. */
int main() {
    const freud::KernelParams p(0.6);
    freud::RaySolutions us(p, freud::EquationTag::u);
    freud::RaySolutions vs(p, freud::EquationTag::v);

    std::printf("x        u(x)          v(x)\n");
    for (double x : {0.1, 0.5, 1.0, 5.0, 25.0}) {
        std::printf("%-8g %-13.10f %-13.10f\n", x,
                    freud::eval_sector(us, {x, 0.0}).real(),
                    freud::eval_sector(vs, {x, 0.0}).real());
    }

    std::printf("\nphi/pi   Re u(e^{i phi})  Im u(e^{i phi})\n");
    for (int k = -4; k <= 4; ++k) {
        const double phi = k * freud::pi / 2.0;
        const std::complex<double> val = freud::eval_surface(us, {1.0, phi});
        std::printf("%-8.2f %-16.10f %-16.10f\n", phi / freud::pi, val.real(), val.imag());
    }

    std::printf("\nconnection residual at r = 1: %.3e\n", freud::connection_residual(us, 1.0));
    return 0;
}
