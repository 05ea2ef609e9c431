#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "freud/gammafn.hpp"

using Catch::Approx;

TEST_CASE("gamma at halves and integers") {
    REQUIRE(freud::gamma_fn(0.5) == Approx(std::sqrt(freud::pi)).epsilon(1e-14));
    REQUIRE(freud::gamma_fn(1.0) == Approx(1.0).epsilon(1e-14));
    REQUIRE(freud::gamma_fn(5.0) == Approx(24.0).epsilon(1e-14));
    REQUIRE(freud::gamma_fn(-0.5) == Approx(-2.0 * std::sqrt(freud::pi)).epsilon(1e-13));
    REQUIRE(freud::gamma_fn(10.3) == Approx(std::tgamma(10.3)).epsilon(1e-13));
}

TEST_CASE("gamma poles") {
    REQUIRE_THROWS_AS(freud::gamma_fn(0.0), std::domain_error);
    REQUIRE_THROWS_AS(freud::gamma_fn(-3.0), std::domain_error);
}

TEST_CASE("log gamma against the direct product") {
    for (double x : {0.2, 1.7, 10.3, 41.0, 170.0})
        REQUIRE(freud::log_gamma(x) == Approx(std::lgamma(x)).margin(1e-12 * (1.0 + std::lgamma(x))));
}

TEST_CASE("euler constant from the gamma slope") {
    const double h = 1e-6;
    const double slope = (1.0 - freud::gamma_fn(1.0 + h)) / h;
    REQUIRE(slope == Approx(freud::euler_gamma).margin(1e-5));
}

TEST_CASE("upper tail pinned values") {
    REQUIRE(freud::incomplete_gamma_upper(0.0, 1.0) == Approx(0.219383934395520274).margin(1e-15));
    REQUIRE(freud::incomplete_gamma_upper(-1.3, 1.0) == Approx(0.134554025427721863).margin(1e-14));
}

TEST_CASE("upper tail closed forms") {
    for (double x : {0.3, 2.0, 10.0})
        REQUIRE(freud::incomplete_gamma_upper(1.0, x) == Approx(std::exp(-x)).epsilon(1e-13));
    REQUIRE(freud::incomplete_gamma_upper(2.0, 1e-12) == Approx(1.0).margin(1e-11));
    REQUIRE(freud::incomplete_gamma_upper(3.0, 2.0) ==
            Approx(std::exp(-2.0) * (4.0 + 2.0 * 2.0 + 2.0)).epsilon(1e-13));
}

TEST_CASE("upper tail recurrence across negative order") {
    for (double a : {-1.3, -0.4, 0.7}) {
        const double lhs = freud::incomplete_gamma_upper(a + 1.0, 1.0);
        const double rhs = a * freud::incomplete_gamma_upper(a, 1.0) + std::exp(-1.0);
        REQUIRE(lhs == Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("upper tail domain and overflow guards") {
    REQUIRE_THROWS_AS(freud::incomplete_gamma_upper(0.5, 0.0), std::domain_error);
    REQUIRE_THROWS_AS(freud::incomplete_gamma_upper(0.5, -1.0), std::domain_error);
    REQUIRE_THROWS_AS(freud::incomplete_gamma_upper(-200.5, 0.01), std::overflow_error);
}
