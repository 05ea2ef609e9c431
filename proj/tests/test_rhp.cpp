#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "freud/rhp.hpp"

using Catch::Approx;
using freud::KernelParams;
using freud::Mat2;
using freud::Parametrix;
using freud::Parity;

namespace {

Parametrix& even06() {
    static Parametrix P(KernelParams(0.6), Parity::even);
    return P;
}

Parametrix& odd06() {
    static Parametrix P(KernelParams(0.6), Parity::odd);
    return P;
}

}  // namespace

TEST_CASE("matrix helpers") {
    Mat2 a = freud::mat2_identity();
    a[0][1] = {2.0, 0.0};
    Mat2 b = freud::mat2_identity();
    b[1][0] = {0.0, 3.0};
    const Mat2 ab = freud::mat2_mul(a, b);
    REQUIRE(ab[0][0] == std::complex<double>(1.0, 6.0));
    REQUIRE(ab[0][1] == std::complex<double>(2.0, 0.0));
    REQUIRE(freud::mat2_det(a) == std::complex<double>(1.0, 0.0));
    REQUIRE(freud::mat2_max_abs(ab) == Approx(std::abs(ab[0][0])));
    REQUIRE(freud::mat2_max_diff(a, a) == 0.0);
}

TEST_CASE("jump matrix has unit determinant exactly") {
    for (double x : {-7.0, -0.4, 0.3, 2.0, 90.0}) {
        const Mat2 j = even06().jump(x);
        REQUIRE(freud::mat2_det(j) == std::complex<double>(1.0, 0.0));
        REQUIRE(j[0][0] == std::complex<double>(1.0, 0.0));
        REQUIRE(j[1][1] == std::complex<double>(1.0, 0.0));
    }
    const Mat2 jp = even06().jump(2.0);
    REQUIRE(jp[1][0] == std::complex<double>(0.0, 0.0));
    REQUIRE(jp[0][1] != std::complex<double>(0.0, 0.0));
    const Mat2 jm = even06().jump(-2.0);
    REQUIRE(jm[0][1] == std::complex<double>(0.0, 0.0));
    REQUIRE(jm[1][0] != std::complex<double>(0.0, 0.0));
}

TEST_CASE("boundary values satisfy the jump relation pointwise") {
    for (double x : {0.03, 1.7, -2.4, 40.0}) {
        const Mat2 above = even06().boundary_value(x, 1);
        const Mat2 below = even06().boundary_value(x, -1);
        const Mat2 recon = freud::mat2_mul(below, even06().jump(x));
        REQUIRE(freud::mat2_max_diff(above, recon) < 1e-10);
    }
}

TEST_CASE("interior assembly approaches the boundary limits") {
    for (double x : {0.8, -1.9}) {
        const double r = std::abs(x);
        const double phi_above = x > 0.0 ? 1e-7 : freud::pi - 1e-7;
        const double phi_below = -phi_above;
        const Mat2 above = even06().assemble({r, phi_above});
        const Mat2 below = even06().assemble({r, phi_below});
        REQUIRE(freud::mat2_max_diff(above, even06().boundary_value(x, 1)) < 1e-5);
        REQUIRE(freud::mat2_max_diff(below, even06().boundary_value(x, -1)) < 1e-5);
    }
}

TEST_CASE("parity flips the off-diagonal sign") {
    const freud::SurfacePoint s{1.3, 0.8};
    const Mat2 e = even06().assemble(s);
    const Mat2 o = odd06().assemble(s);
    REQUIRE(e[0][0] == o[0][0]);
    REQUIRE(e[1][1] == o[1][1]);
    REQUIRE(e[0][1] == -o[0][1]);
    REQUIRE(e[1][0] == -o[1][0]);
}

TEST_CASE("assembly guards") {
    REQUIRE_THROWS_AS(even06().assemble({1.0, 0.0}), std::domain_error);
    REQUIRE_THROWS_AS(even06().assemble({1.0, freud::pi}), std::domain_error);
    REQUIRE_THROWS_WITH(even06().assemble({1.0, 0.0}),
                        Catch::Matchers::ContainsSubstring("boundary_value"));
    REQUIRE_THROWS_AS(even06().boundary_value(0.0, 1), std::domain_error);
    REQUIRE_THROWS_AS(even06().boundary_value(1.0, 2), std::invalid_argument);
}

TEST_CASE("full verification on the default grid") {
    for (Parity parity : {Parity::even, Parity::odd}) {
        const Parametrix& P = parity == Parity::even ? even06() : odd06();
        const freud::RhpReport rep = freud::verify_rhp(P);
        CAPTURE(parity == Parity::even ? "even" : "odd");
        REQUIRE(rep.pass);
        REQUIRE(rep.max_jump_residual < 1e-6);
        REQUIRE(rep.max_det_err < 1e-7);
        REQUIRE(rep.far_field_bound < 10.0);
        REQUIRE(rep.origin_max_norm < 10.0);
    }
}

TEST_CASE("verification below the fixed-point threshold") {
    Parametrix P(KernelParams(0.35), Parity::even);
    const freud::RhpReport rep = freud::verify_rhp(P);
    REQUIRE(rep.max_jump_residual < 1e-5);
    REQUIRE(rep.max_det_err < 1e-5);
}

TEST_CASE("trivial kernel collapses the parametrix to the identity") {
    freud::SolverOptions opt;
    opt.kernel_override = [](double) { return std::complex<double>(0.0, 0.0); };
    Parametrix P(KernelParams(0.6), Parity::odd, opt);
    const Mat2 eye = freud::mat2_identity();
    for (const freud::SurfacePoint s : {freud::SurfacePoint{0.5, 1.0},
                                        freud::SurfacePoint{40.0, -2.2}}) {
        REQUIRE(freud::mat2_max_diff(P.assemble(s), eye) < 1e-14);
    }
    REQUIRE(freud::mat2_max_diff(P.jump(1.0), eye) == 0.0);
    const freud::RhpReport rep = freud::verify_rhp(P);
    REQUIRE(rep.max_jump_residual < 1e-14);
    REQUIRE(rep.far_field_bound < 1e-10);
}

TEST_CASE("tightening the tolerance shrinks the jump residual") {
    freud::SolverOptions coarse, fine;
    coarse.tol = 1e-4;
    fine.tol = 5e-5;
    const freud::RhpReport rc = freud::verify_rhp(Parametrix(KernelParams(0.6), Parity::even, coarse));
    const freud::RhpReport rf = freud::verify_rhp(Parametrix(KernelParams(0.6), Parity::even, fine));
    CAPTURE(rc.max_jump_residual, rf.max_jump_residual);
    // a broken refinement path would leave the ratio near 1
    REQUIRE(rf.max_jump_residual <= 0.75 * rc.max_jump_residual);
}
