#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "freud/kernel.hpp"
#include "freud/surface.hpp"

using Catch::Approx;
using freud::KernelParams;
using freud::Parity;
using freud::SurfacePoint;

TEST_CASE("parameter validation rejects beta outside the working range") {
    REQUIRE_THROWS_AS(KernelParams(0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(KernelParams(1.5), std::invalid_argument);
    REQUIRE_THROWS_AS(KernelParams(-0.3), std::invalid_argument);
    REQUIRE_THROWS_WITH(KernelParams(1.5), Catch::Matchers::ContainsSubstring("beta out of range"));
    REQUIRE_NOTHROW(KernelParams(0.05));
    REQUIRE_NOTHROW(KernelParams(0.95));
    REQUIRE_NOTHROW(KernelParams(1.0, 0.05, 1.0));
}

TEST_CASE("derived parameter accessors") {
    const KernelParams p(0.6);
    REQUIRE(p.beta() == 0.6);
    REQUIRE(p.sin_half() == Approx(std::sin(freud::pi * 0.3)).epsilon(1e-15));
    REQUIRE(p.cos_half() == Approx(std::cos(freud::pi * 0.3)).epsilon(1e-15));
    REQUIRE(p.alpha() == Approx(1.0 / 0.6).epsilon(1e-15));
}

TEST_CASE("kernel on the positive axis") {
    const KernelParams p(0.5);
    REQUIRE(freud::kernel_real(1.0, p) == Approx(0.101959633457953722).margin(1e-16));

    const KernelParams q(0.8);
    for (double t : {0.1, 1.0, 7.0}) {
        const double direct = std::exp(-std::pow(t, 0.8) * q.sin_half()) *
                              std::sin(std::pow(t, 0.8) * q.cos_half()) / freud::pi;
        REQUIRE(freud::kernel_real(t, q) == Approx(direct).margin(1e-17));
    }
}

TEST_CASE("kernel continued off the axis") {
    const KernelParams p(0.5);
    const std::complex<double> k = freud::kernel_complex({1.0, freud::pi / 3.0}, p);
    REQUIRE(k.real() == Approx(0.116567636465748456).margin(1e-15));
    REQUIRE(k.imag() == Approx(0.0113044481554803193).margin(1e-15));
}

TEST_CASE("kernel continuation agrees with the real formula on the axis") {
    for (double beta : {0.3, 0.6, 0.9}) {
        const KernelParams p(beta);
        for (double r : {0.2, 1.0, 4.0}) {
            const std::complex<double> k = freud::kernel_complex({r, 0.0}, p);
            REQUIRE(k.imag() == 0.0);
            REQUIRE(k.real() == Approx(freud::kernel_real(r, p)).margin(1e-16));
        }
    }
}

TEST_CASE("kernel respects conjugation symmetry") {
    const KernelParams p(0.7);
    for (double phi : {0.4, 1.9, 2.8}) {
        const std::complex<double> above = freud::kernel_complex({1.3, phi}, p);
        const std::complex<double> below = freud::kernel_complex({1.3, -phi}, p);
        REQUIRE(below.real() == Approx(above.real()).margin(1e-16));
        REQUIRE(below.imag() == Approx(-above.imag()).margin(1e-16));
    }
}

TEST_CASE("jump density vanishes on the negative axis and carries the parity sign") {
    const KernelParams p(0.5);
    REQUIRE(freud::eta_L(-2.0, Parity::even, p) == std::complex<double>(0.0, 0.0));
    REQUIRE(freud::eta_L(-1e-9, Parity::odd, p) == std::complex<double>(0.0, 0.0));

    const double k1 = freud::kernel_real(1.0, p);
    const std::complex<double> even = freud::eta_L(1.0, Parity::even, p);
    const std::complex<double> odd = freud::eta_L(1.0, Parity::odd, p);
    REQUIRE(even.real() == 0.0);
    REQUIRE(even.imag() == Approx(-2.0 * freud::pi * k1).margin(1e-16));
    REQUIRE(odd == -even);
}

TEST_CASE("operator norm bound crosses one at the critical parameter") {
    const double bc = freud::beta_critical();
    REQUIRE(bc == Approx(0.415885354422338545).margin(5e-12));

    const double c = 1.0 / (freud::pi * bc) / std::tan(freud::pi * bc / 2.0);
    REQUIRE(c == Approx(1.0).margin(1e-10));

    REQUIRE(KernelParams(0.5).contraction_bound() < 1.0);
    REQUIRE(KernelParams(0.9).contraction_bound() < 1.0);
    REQUIRE(KernelParams(0.41).contraction_bound() >= 1.0);
    REQUIRE(KernelParams(0.1).contraction_bound() >= 1.0);
}
