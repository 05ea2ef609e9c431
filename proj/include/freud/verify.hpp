#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "continuation.hpp"
#include "gammafn.hpp"
#include "gbeta.hpp"
#include "kernel.hpp"
#include "mittag.hpp"
#include "rhp.hpp"
#include "solver.hpp"
#include "surface.hpp"

/*
 * Self-contained verification suites.  Every check is normalized by its
 * allowed tolerance, so `worst` reads as the fraction of the budget consumed
 * and a suite passes iff worst < 1.  The same suites back `verify` on the
 * command line and the acceptance runner.
 */

namespace freud {

struct SuiteResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;   // max over checks of observed / allowed
    std::string detail;
};

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"oracle",  "residual",    "connection",
                                                   "rhp",     "gbeta-cross", "ml-identity"};
    return names;
}

namespace detail {

class WorstTracker {
  public:
    void update(double observed, double allowed, const std::string& label) {
        const double ratio = observed / allowed;
        if (!(ratio <= worst_)) {   // also catches NaN
            worst_ = ratio;
            label_ = label + ": " + format_sci(observed) + " of " + format_sci(allowed);
        }
    }
    double worst() const { return worst_; }
    const std::string& label() const { return label_; }

    static std::string format_sci(double v) {
        std::ostringstream os;
        os.precision(3);
        os << std::scientific << v;
        return os.str();
    }

  private:
    double worst_ = 0.0;
    std::string label_ = "no checks ran";
};

inline SuiteResult suite_oracle() {
    WorstTracker t;
    for (const double b : {0.5, 0.6, 0.75, 0.9}) {
        const KernelParams p(b);
        for (const EquationTag tag : {EquationTag::u, EquationTag::v}) {
            const SolutionGrid ny = solve_ray(p, tag);
            const SolutionGrid pc = picard_solve(p, tag);
            double gap = 0.0;
            for (std::size_t i = 0; i < ny.values.size(); ++i)
                gap = std::max(gap, std::abs(ny.values[i] - pc.values[i]));
            t.update(gap, 1e-8, "beta " + std::to_string(b) + " " + equation_name(tag));
        }
    }
    return {"oracle", t.worst() < 1.0, t.worst(),
            "sup-node direct-solve vs fixed-point gap; " + t.label()};
}

inline SuiteResult suite_residual() {
    WorstTracker t;
    for (const double b : {0.2, 0.35, 0.5, 0.6, 0.8}) {
        const KernelParams p(b);
        for (const EquationTag tag : {EquationTag::u, EquationTag::v}) {
            const SolutionGrid g = solve_ray(p, tag);
            std::vector<double> pts;
            for (int i = 0; i < 64; ++i) {
                const double f = (i + 0.5) / 64.0;
                pts.push_back(std::exp((1.0 - f) * std::log(1e-3) + f * std::log(g.quad.t_max)));
            }
            t.update(max_equation_residual(g, pts), 10.0 * g.tol,
                     "beta " + std::to_string(b) + " " + equation_name(tag));
        }
    }
    return {"residual", t.worst() < 1.0, t.worst(),
            "off-grid equation residual vs 10x solver tolerance; " + t.label()};
}

inline SuiteResult suite_connection() {
    WorstTracker t;
    for (const double b : {0.5, 0.6, 0.8}) {
        const KernelParams p(b);
        for (const EquationTag tag : {EquationTag::u, EquationTag::v}) {
            RaySolutions rs(p, tag);
            for (const double r : {0.5, 1.0, 2.0, 5.0})
                t.update(connection_residual(rs, r), 1e-7,
                         "beta " + std::to_string(b) + " " + equation_name(tag) + " r " +
                             std::to_string(r));
        }
    }
    return {"connection", t.worst() < 1.0, t.worst(),
            "sheet-crossing identity residual; " + t.label()};
}

inline SuiteResult suite_rhp() {
    WorstTracker t;
    for (const Parity par : {Parity::even, Parity::odd}) {
        const Parametrix P(KernelParams(0.6), par);
        const RhpGridSpec grid;
        const RhpReport rep = verify_rhp(P, grid);
        const std::string tagp = par == Parity::even ? "even" : "odd";
        t.update(rep.max_jump_residual, grid.jump_tol, tagp + " jump");
        t.update(rep.max_det_err, grid.det_tol, tagp + " det");
        t.update(rep.far_field_bound, grid.far_field_cap, tagp + " far-field");
        t.update(rep.origin_max_norm, grid.origin_cap, tagp + " origin");
    }
    return {"rhp", t.worst() < 1.0, t.worst(),
            "jump/det/far-field/origin conditions, beta 0.6, both parities; " + t.label()};
}

inline SuiteResult suite_gbeta_cross() {
    WorstTracker t;

    const KernelParams p1(1.0, 0.05, 1.0);
    for (const double x : {0.5, 1.0, 2.0}) {
        const std::complex<double> ref = std::exp(x) * incomplete_gamma_upper(0.0, x);
        t.update(std::abs(g_beta(p1, {x, 0.0}) - ref), 1e-9,
                 "exp-integral identity x " + std::to_string(x));
    }

    const int fracs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    const double probe_r[3] = {0.3, 1.0, 3.0};
    const double probe_phi[4] = {0.0, 1.0, 2.5, -2.0};
    for (const auto& f : fracs) {
        const KernelParams p(static_cast<double>(f[0]) / f[1]);
        for (const double r : probe_r)
            for (const double phi : probe_phi) {
                const SurfacePoint z{r, phi};
                t.update(std::abs(g_beta_rational(f[0], f[1], z).value - g_beta(p, z)), 1e-8,
                         "reduction " + std::to_string(f[0]) + "/" + std::to_string(f[1]) +
                             " r " + std::to_string(r));
            }
    }

    for (const double b : {0.5, 0.7071067811865476, 0.6180339887498949}) {
        double series = 0.0, fact = 1.0;
        for (int n = 1; n <= 40; ++n) {
            fact *= n;
            series += (n % 2 ? -1.0 : 1.0) / (fact * n * b);
        }
        const double dual = series + incomplete_gamma_upper(0.0, 1.0) / b;
        t.update(std::abs(dual - (-euler_gamma / b)), 1e-10,
                 "constant-coefficient rule beta " + std::to_string(b));
    }

    for (const double b : {0.5, 0.6}) {
        const KernelParams p(b);
        const double lead = std::exp(log_gamma(1.0 / b)) / b;
        const double got = 1e4 * g_beta(p, {1e4, 0.0}).real();
        t.update(std::abs(got - lead) / lead, 1e-3, "leading far coefficient beta " + std::to_string(b));
    }

    return {"gbeta-cross", t.worst() < 1.0, t.worst(),
            "integer-exponent identity, rational reduction, coefficient rules; " + t.label()};
}

inline SuiteResult suite_ml_identity() {
    WorstTracker t;
    const std::complex<double> zs[4] = {
        {0.5, 0.0}, {1.0, 0.0}, {2.0, 0.0}, std::polar(4.0, pi / 6.0)};
    for (const double alpha : {1.2, 1.5, 1.8, 2.3, 2.7}) {
        for (const std::complex<double>& z : zs) {
            const std::complex<double> ref = ml_series(alpha, z);
            const MLDecomposition d = ml_via_gbeta(alpha, {std::abs(z), std::arg(z)});
            t.update(std::abs(d.value - ref), 1e-6 * (1.0 + std::abs(ref)),
                     "alpha " + std::to_string(alpha) + " |z| " + std::to_string(std::abs(z)));
        }
    }
    return {"ml-identity", t.worst() < 1.0, t.worst(),
            "exponential-plus-integral decomposition vs power series; " + t.label()};
}

}  // namespace detail

inline SuiteResult run_verify_suite(const std::string& name) {
    if (name == "oracle") return detail::suite_oracle();
    if (name == "residual") return detail::suite_residual();
    if (name == "connection") return detail::suite_connection();
    if (name == "rhp") return detail::suite_rhp();
    if (name == "gbeta-cross") return detail::suite_gbeta_cross();
    if (name == "ml-identity") return detail::suite_ml_identity();
    std::string all;
    for (const auto& n : verify_suite_names()) all += (all.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown suite '" + name + "'; available: " + all);
}

inline std::vector<SuiteResult> run_all_verify_suites() {
    std::vector<SuiteResult> out;
    for (const auto& n : verify_suite_names()) out.push_back(run_verify_suite(n));
    return out;
}

}  // namespace freud
