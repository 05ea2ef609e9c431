#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "freud/freud.hpp"

/*
 * Acceptance gate.  Each criterion prints exactly one PASS/FAIL/WARN line
 * with its worst observation and runtime; the process exits with the number
 * of hard failures.  Time budgets are part of the criteria.
 */

namespace {

struct Outcome {
    bool pass = false;
    bool warn = false;
    std::string note;
};

int failures = 0;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

void criterion(int id, const char* name, double budget_ms,
               const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (out.pass && ms > budget_ms) {
        out.pass = false;
        out.note += " [over budget " + sci(budget_ms) + " ms]";
    }
    const char* verdict = out.pass ? (out.warn ? "WARN" : "PASS") : "FAIL";
    if (!out.pass) ++failures;
    std::printf("AC%-2d %-52s %s (%s, %.1f ms)\n", id, name, verdict, out.note.c_str(), ms);
    std::fflush(stdout);
}

Outcome ac1_critical_parameter() {
    const double bc = freud::beta_critical();
    const double err = std::abs(bc - 0.4158853544);
    return {err < 1e-9, false, "err " + sci(err)};
}

Outcome ac2_solver_oracle() {
    double worst = 0.0;
    for (double beta : {0.5, 0.6, 0.75, 0.9}) {
        const freud::KernelParams p(beta);
        for (freud::EquationTag tag : {freud::EquationTag::u, freud::EquationTag::v}) {
            const freud::SolutionGrid a = freud::solve_ray(p, tag);
            const freud::SolutionGrid b = freud::picard_solve(p, tag);
            for (std::size_t j = 0; j < a.values.size(); ++j)
                worst = std::max(worst, std::abs(a.values[j] - b.values[j]));
        }
    }
    return {worst < 1e-8, false, "sup gap " + sci(worst)};
}

Outcome ac3_residuals() {
    double worst_ratio = 0.0;
    for (double beta : {0.2, 0.35, 0.5, 0.6, 0.8}) {
        const freud::KernelParams p(beta);
        for (freud::EquationTag tag : {freud::EquationTag::u, freud::EquationTag::v}) {
            const freud::SolutionGrid g = freud::solve_ray(p, tag);
            std::vector<double> pts;
            for (int i = 0; i < 64; ++i) {
                const double f = (i + 0.5) / 64.0;
                pts.push_back(
                    std::exp((1.0 - f) * std::log(1e-3) + f * std::log(g.quad.t_max)));
            }
            const double res = freud::max_equation_residual(g, pts);
            worst_ratio = std::max(worst_ratio, res / (10.0 * g.tol));
        }
    }
    return {worst_ratio < 1.0, false, "worst residual/bound " + sci(worst_ratio)};
}

Outcome ac4_connection() {
    double worst = 0.0;
    for (double beta : {0.5, 0.6, 0.8}) {
        const freud::KernelParams p(beta);
        for (freud::EquationTag tag : {freud::EquationTag::u, freud::EquationTag::v}) {
            freud::RaySolutions rs(p, tag);
            for (double r : {0.5, 1.0, 2.0, 5.0})
                worst = std::max(worst, freud::connection_residual(rs, r));
        }
    }
    return {worst < 1e-7, false, "worst " + sci(worst)};
}

Outcome ac5_matrix_problem() {
    double jump = 0.0, det = 0.0, far = 0.0, origin = 0.0;
    bool pass = true;
    for (freud::Parity parity : {freud::Parity::even, freud::Parity::odd}) {
        const freud::Parametrix P(freud::KernelParams(0.6), parity);
        const freud::RhpReport rep = freud::verify_rhp(P);
        pass = pass && rep.pass;
        jump = std::max(jump, rep.max_jump_residual);
        det = std::max(det, rep.max_det_err);
        far = std::max(far, rep.far_field_bound);
        origin = std::max(origin, rep.origin_max_norm);
    }
    pass = pass && jump < 1e-6 && det < 1e-7 && far < 10.0 && origin < 10.0;
    return {pass, false,
            "jump " + sci(jump) + ", det " + sci(det) + ", far-field " + sci(far) +
                ", origin " + sci(origin)};
}

Outcome ac6_pairing() {
    const freud::KernelParams p(0.6);
    freud::RaySolutions us(p, freud::EquationTag::u);
    freud::RaySolutions vs(p, freud::EquationTag::v);
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0, 5.0}) {
        for (double phi : {0.0, freud::pi / 2.0}) {
            const freud::SurfacePoint z{r, phi};
            const freud::SurfacePoint zm{r, phi - freud::pi};
            const std::complex<double> lhs =
                freud::eval_surface(us, z) * freud::eval_surface(vs, zm) +
                freud::eval_surface(vs, z) * freud::eval_surface(us, zm);
            worst = std::max(worst, std::abs(lhs - 2.0));
        }
    }
    return {worst < 1e-6, false, "worst |lhs - 2| " + sci(worst) + " over 8 points"};
}

Outcome ac7_transform() {
    double worst_ratio = 0.0;
    const auto track = [&](double observed, double allowed) {
        worst_ratio = std::max(worst_ratio, observed / allowed);
    };

    const freud::KernelParams p1(1.0, 0.05, 1.0);
    for (double x : {0.5, 1.0, 2.0}) {
        const double ref = std::exp(x) * freud::incomplete_gamma_upper(0.0, x);
        track(std::abs(freud::g_beta(p1, {x, 0.0}).real() - ref), 1e-9);
    }

    const std::array<std::pair<int, int>, 3> fracs = {{{1, 2}, {1, 3}, {2, 3}}};
    for (const auto& [num, den] : fracs) {
        const freud::KernelParams p(static_cast<double>(num) / den);
        for (double r : {0.3, 1.0, 3.0})
            for (double phi : {0.0, 1.0, 2.5, -2.0})
                track(std::abs(freud::g_beta_rational(num, den, {r, phi}).value -
                               freud::g_beta(p, {r, phi})),
                      1e-8);
    }

    for (double b : {0.5, 1.0 / std::sqrt(2.0), 0.61}) {
        double series = 0.0, nfact = 1.0;
        for (int n = 1; n <= 40; ++n) {
            nfact *= n;
            series += (n % 2 ? -1.0 : 1.0) / (nfact * n * b);
        }
        const double c0 = series + freud::incomplete_gamma_upper(0.0, 1.0) / b;
        track(std::abs(c0 - (-freud::euler_gamma / b)), 1e-10);
    }

    for (double b : {0.5, 0.6}) {
        const freud::KernelParams p(b);
        const double lead = freud::gamma_fn(1.0 / b) / b;
        const double got = 1e4 * freud::g_beta(p, {1e4, 0.0}).real();
        track(std::abs(got - lead) / lead, 1e-3);
    }

    return {worst_ratio < 1.0, false, "worst err/bound " + sci(worst_ratio)};
}

Outcome ac8_decomposition() {
    double worst_ratio = 0.0;
    const std::array<std::complex<double>, 4> zs = {
        std::complex<double>(0.5, 0.0), std::complex<double>(1.0, 0.0),
        std::complex<double>(2.0, 0.0), std::polar(4.0, freud::pi / 6.0)};
    for (double alpha : {1.2, 1.5, 1.8, 2.3, 2.7}) {
        for (const std::complex<double>& z : zs) {
            const freud::SurfacePoint zp{std::abs(z), std::arg(z)};
            const std::complex<double> got = freud::ml_via_gbeta(alpha, zp).value;
            const std::complex<double> ref = freud::ml_series(alpha, z);
            worst_ratio = std::max(worst_ratio,
                                   std::abs(got - ref) / (1e-6 * (1.0 + std::abs(ref))));
        }
    }
    return {worst_ratio < 1.0, false, "worst err/bound " + sci(worst_ratio)};
}

Outcome ac9_switch_on_rays() {
    double worst = 0.0;
    for (int i = 0; i <= 16; ++i) {
        const double beta = 0.1 + 0.05 * i;
        const freud::StokesLines s = freud::stokes_lines(freud::KernelParams(beta));
        const double alpha = 1.0 / beta;
        const int l_expect =
            std::max(1, static_cast<int>(std::ceil((alpha - 1.0) / 4.0 - 1e-12)));
        if (s.l != l_expect) return {false, false, "branch index mismatch at beta " + sci(beta)};
        if (std::abs(s.angles[0]) > freud::pi + 1e-12 || s.angles[1] != -s.angles[0])
            return {false, false, "angle layout broken at beta " + sci(beta)};
        worst = std::max(worst, std::abs(std::remainder(
                                    s.angles[0] - freud::pi / 2.0 * (3.0 - alpha),
                                    2.0 * freud::pi)));
    }
    const freud::StokesLines half = freud::stokes_lines(freud::KernelParams(0.5));
    const freud::StokesLines quarter = freud::stokes_lines(freud::KernelParams(0.25));
    const freud::StokesLines sixth = freud::stokes_lines(freud::KernelParams(1.0 / 6.0));
    const bool pinned = half.l == 1 && std::abs(half.angles[0] - freud::pi / 2.0) < 1e-12 &&
                        quarter.l == 1 &&
                        std::abs(quarter.angles[0] + freud::pi / 2.0) < 1e-12 &&
                        sixth.l == 2 && std::abs(sixth.angles[0] - freud::pi / 2.0) < 1e-9;
    return {worst < 1e-9 && pinned, false, "worst ray defect " + sci(worst)};
}

Outcome ac10_tables() {
    double u0_prev = std::numeric_limits<double>::infinity();
    bool ordered = true;
    double worst_tail = 0.0;
    for (double beta : {0.3, 0.5, 0.7}) {
        const freud::SolutionGrid g =
            freud::solve_ray(freud::KernelParams(beta), freud::EquationTag::u);
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 200; ++i) {
            const double x = 40.0 * i / 200.0;
            const double val = freud::interpolate(g, x).real();
            if (!(val > 0.0)) return {false, false, "non-positive value at beta " + sci(beta)};
            if (!(val <= 100.0)) return {false, false, "unbounded at beta " + sci(beta)};
            if (!(val <= prev + 1e-12))
                return {false, false, "not non-increasing at beta " + sci(beta)};
            prev = std::min(prev, val);
        }
        // |u - 1| decays like |c1|/x, so probe the trend over far decades
        double gap_prev = std::abs(freud::interpolate(g, 100.0).real() - 1.0);
        for (double x : {1e3, 1e4}) {
            const double gap = std::abs(freud::interpolate(g, x).real() - 1.0);
            if (!(gap < 0.2 * gap_prev))
                return {false, false, "no approach to one at beta " + sci(beta)};
            gap_prev = gap;
        }
        worst_tail = std::max(worst_tail, gap_prev);
        if (gap_prev > 5e-3) return {false, false, "no approach to one at beta " + sci(beta)};
        const double u0 = freud::interpolate(g, 1e-6).real();
        ordered = ordered && u0 < u0_prev;
        u0_prev = u0;
    }
    if (!ordered)
        return {true, true, "tables pass; origin values not decreasing across beta"};
    return {true, false, "tables pass, worst tail gap " + sci(worst_tail)};
}

}  // namespace

int main() {
    criterion(1, "critical contraction parameter", 1.0, ac1_critical_parameter);
    criterion(2, "direct solve vs fixed-point iteration", 10e3, ac2_solver_oracle);
    criterion(3, "off-grid equation residuals", 30e3, ac3_residuals);
    criterion(4, "branch jump across the negative axis", 60e3, ac4_connection);
    criterion(5, "matrix boundary problem on the default grid", 60e3, ac5_matrix_problem);
    criterion(6, "half-turn pairing identity", 30e3, ac6_pairing);
    criterion(7, "exponential Stieltjes transform cross-checks", 30e3, ac7_transform);
    criterion(8, "series vs exponential-plus-integral values", 30e3, ac8_decomposition);
    criterion(9, "switch-on ray table", 1.0, ac9_switch_on_rays);
    criterion(10, "positive-axis solution tables", 20e3, ac10_tables);

    std::printf("acceptance: %d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
