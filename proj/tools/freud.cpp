#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "freud/freud.hpp"

/*
 * Command-line front end.  Every command prints a single JSON document
 * (`table` prints CSV) so runs with identical configuration are
 * byte-identical.  A JSON config file supplied with --config fills any
 * option not set on the command line; flags always win.  Exit codes:
 * 0 success, 1 usage or validation error, 2 numerical failure.
 */

using nlohmann::json;

namespace {

json cfg = json::object();

/** Fill `var` from the config file when the flag was not given. */
template <class T>
bool merge_under(const CLI::Option* opt, T& var, const char* key) {
    if (opt->count() > 0) return true;
    if (!cfg.contains(key)) return false;
    var = cfg.at(key).get<T>();
    return true;
}

json cplx(std::complex<double> v) {
    return {{"re", v.real()}, {"im", v.imag()}};
}

void print(const json& j) {
    std::cout << j.dump(2) << "\n";
}

void require_have(bool have, const char* field, const char* command) {
    if (!have)
        throw std::invalid_argument(std::string(command) + ": " + field +
                                    " required (flag or config)");
}

void check_tol(double tol) {
    if (tol != 0.0 && !(tol >= 1e-14 && tol <= 1e-2))
        throw std::invalid_argument("tol out of range [1e-14, 1e-2]: " + std::to_string(tol));
}

freud::EquationTag parse_tag(const std::string& s, const char* command) {
    if (s == "u") return freud::EquationTag::u;
    if (s == "v") return freud::EquationTag::v;
    throw std::invalid_argument(std::string(command) + ": tag must be u or v, got '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stieltjes-kernel pair u/v: solver, continuation, parametrix, transforms"};
    app.require_subcommand(0, 1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file merged under command-line flags");

    // solve
    auto* sc_solve = app.add_subcommand("solve", "solve one equation on a ray and persist the grid");
    double so_beta = 0.0, so_theta = 0.0, so_tol = 0.0;
    std::string so_tag = "u", so_out;
    auto* so_beta_o = sc_solve->add_option("--beta", so_beta, "shape parameter");
    auto* so_tag_o = sc_solve->add_option("--tag", so_tag, "equation, u or v");
    auto* so_theta_o = sc_solve->add_option("--theta", so_theta, "ray angle in radians, |theta| < pi/2");
    auto* so_tol_o = sc_solve->add_option("--tol", so_tol, "solver tolerance (0 = per-beta default)");
    auto* so_out_o = sc_solve->add_option("--out", so_out, "grid JSON output path");

    // eval
    auto* sc_eval = app.add_subcommand("eval", "evaluate u, v, L, U, G, or E at one point");
    std::string ev_fn = "u";
    double ev_beta = 0.0, ev_r = 0.0, ev_phi = 0.0, ev_sheet = 0.0, ev_tol = 0.0;
    auto* ev_fn_o = sc_eval->add_option("--fn", ev_fn, "function selector: u, v, L, U, G, E");
    auto* ev_beta_o = sc_eval->add_option("--beta", ev_beta, "shape parameter");
    auto* ev_r_o = sc_eval->add_option("--r", ev_r, "modulus, r > 0");
    auto* ev_phi_o = sc_eval->add_option("--phi", ev_phi, "argument in radians");
    auto* ev_sheet_o =
        sc_eval->add_option("--arg-sheet", ev_sheet, "unrestricted surface argument; overrides --phi");
    auto* ev_tol_o = sc_eval->add_option("--tol", ev_tol, "tolerance (0 = default)");

    // table
    auto* sc_table = app.add_subcommand("table", "tabulate a function on an x grid as CSV");
    std::string tb_fn = "u", tb_grid, tb_out, tb_spacing = "linear";
    double tb_beta = 0.0, tb_xmin = 0.0, tb_xmax = 20.0, tb_tol = 0.0;
    int tb_points = 200;
    auto* tb_fn_o = sc_table->add_option("--fn", tb_fn, "function: u, v, or G");
    auto* tb_beta_o = sc_table->add_option("--beta", tb_beta, "shape parameter");
    auto* tb_grid_o = sc_table->add_option("--grid", tb_grid, "solved grid JSON (skips the inline solve)");
    auto* tb_xmin_o = sc_table->add_option("--xmin", tb_xmin, "first abscissa");
    auto* tb_xmax_o = sc_table->add_option("--xmax", tb_xmax, "last abscissa");
    auto* tb_points_o = sc_table->add_option("--points", tb_points, "row count");
    auto* tb_spacing_o = sc_table->add_option("--spacing", tb_spacing, "linear or log");
    auto* tb_tol_o = sc_table->add_option("--tol", tb_tol, "solver tolerance (0 = default)");
    auto* tb_out_o = sc_table->add_option("--out", tb_out, "CSV output path (default stdout)");

    // coeffs
    auto* sc_coeffs = app.add_subcommand("coeffs", "far-field expansion coefficients from a solved grid");
    double cf_beta = 0.0, cf_tol = 0.0;
    std::string cf_tag = "u";
    int cf_k = 0;
    auto* cf_beta_o = sc_coeffs->add_option("--beta", cf_beta, "shape parameter");
    auto* cf_tag_o = sc_coeffs->add_option("--tag", cf_tag, "equation, u or v");
    auto* cf_k_o = sc_coeffs->add_option("--k", cf_k, "highest order (0 = all reliable orders)");
    auto* cf_tol_o = sc_coeffs->add_option("--tol", cf_tol, "solver tolerance (0 = default)");

    // gbeta
    auto* sc_gbeta = app.add_subcommand("gbeta", "Stieltjes transform of exp(-t^beta) on the surface");
    double gb_beta = 0.0, gb_r = 0.0, gb_phi = 0.0, gb_sheet = 0.0, gb_tol = 0.0;
    auto* gb_beta_o = sc_gbeta->add_option("--beta", gb_beta, "shape parameter");
    auto* gb_r_o = sc_gbeta->add_option("--r", gb_r, "modulus, r > 0");
    auto* gb_phi_o = sc_gbeta->add_option("--phi", gb_phi, "argument in radians");
    auto* gb_sheet_o =
        sc_gbeta->add_option("--arg-sheet", gb_sheet, "unrestricted surface argument; overrides --phi");
    auto* gb_tol_o = sc_gbeta->add_option("--tol", gb_tol, "quadrature tolerance (0 = default)");

    // ml
    auto* sc_ml = app.add_subcommand("ml", "Mittag-Leffler decomposition into exponentials plus integral");
    double ml_alpha = 0.0, ml_z = 0.0, ml_r = 0.0, ml_phi = 0.0, ml_tol = 0.0;
    auto* ml_alpha_o = sc_ml->add_option("--alpha", ml_alpha, "order, alpha >= 1");
    auto* ml_z_o = sc_ml->add_option("--z", ml_z, "real argument");
    auto* ml_r_o = sc_ml->add_option("--r", ml_r, "modulus of a complex argument (with --phi)");
    auto* ml_phi_o = sc_ml->add_option("--phi", ml_phi, "argument angle in radians");
    auto* ml_tol_o = sc_ml->add_option("--tol", ml_tol, "tolerance for the integral part (0 = default)");

    // stokes
    auto* sc_stokes = app.add_subcommand("stokes", "switch-on rays of the subdominant exponential");
    double st_beta = 0.0;
    auto* st_beta_o = sc_stokes->add_option("--beta", st_beta, "shape parameter");

    // verify
    auto* sc_verify = app.add_subcommand("verify", "run verification suites");
    std::string vf_suite;
    auto* vf_suite_o = sc_verify->add_option(
        "--suite", vf_suite, "one of oracle, residual, connection, rhp, gbeta-cross, ml-identity");

    // info
    auto* sc_info = app.add_subcommand("info", "build and configuration summary");

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::invalid_argument("cannot open config file " + config_path);
            cfg = json::parse(in);
            if (!cfg.is_object()) throw std::invalid_argument("config file must hold a JSON object");
        }

        if (*sc_info) {
            json out = {{"name", "freud"},
                        {"version", "1.0.0"},
                        {"beta_critical", freud::beta_critical()},
                        {"beta_range", {0.05, 0.95}},
                        {"commands",
                         {"info", "solve", "eval", "table", "coeffs", "gbeta", "ml", "stokes",
                          "verify"}},
                        {"verify_suites", freud::verify_suite_names()}};
            print(out);
            return 0;
        }

        if (*sc_solve) {
            require_have(merge_under(so_beta_o, so_beta, "beta"), "--beta", "solve");
            merge_under(so_tag_o, so_tag, "tag");
            merge_under(so_theta_o, so_theta, "theta");
            merge_under(so_tol_o, so_tol, "tol");
            merge_under(so_out_o, so_out, "out");
            check_tol(so_tol);
            const freud::KernelParams p(so_beta);
            freud::SolverOptions opt;
            opt.tol = so_tol;
            const freud::SolutionGrid g =
                freud::solve_ray(p, parse_tag(so_tag, "solve"), so_theta, opt);
            if (!so_out.empty()) freud::save_grid(g, so_out);
            json out = {{"beta", so_beta},
                        {"tag", so_tag},
                        {"theta", so_theta},
                        {"tol", g.tol},
                        {"nodes", g.values.size()},
                        {"residual", g.residual},
                        {"out", so_out.empty() ? json() : json(so_out)}};
            print(out);
            return 0;
        }

        if (*sc_eval) {
            merge_under(ev_fn_o, ev_fn, "fn");
            require_have(merge_under(ev_beta_o, ev_beta, "beta"), "--beta", "eval");
            require_have(merge_under(ev_r_o, ev_r, "r"), "--r", "eval");
            merge_under(ev_phi_o, ev_phi, "phi");
            const bool have_sheet = merge_under(ev_sheet_o, ev_sheet, "arg_sheet");
            merge_under(ev_tol_o, ev_tol, "tol");
            check_tol(ev_tol);
            const double phi = have_sheet ? ev_sheet : ev_phi;
            const freud::SurfacePoint z{ev_r, phi};

            json out = {{"fn", ev_fn}, {"beta", ev_beta}, {"r", ev_r}, {"phi", phi}};
            freud::SolverOptions opt;
            opt.tol = ev_tol;
            if (ev_fn == "u" || ev_fn == "v") {
                const freud::KernelParams p(ev_beta);
                freud::RaySolutions rs(p, parse_tag(ev_fn, "eval"), opt);
                out["value"] = cplx(freud::eval_surface(rs, z));
                out["connection_residual"] = freud::connection_residual(rs, ev_r);
            } else if (ev_fn == "L" || ev_fn == "U") {
                const freud::KernelParams p(ev_beta);
                freud::RaySolutions us(p, freud::EquationTag::u, opt);
                freud::RaySolutions vs(p, freud::EquationTag::v, opt);
                out["value"] = cplx(ev_fn == "L" ? freud::L_beta(us, vs, z)
                                                 : freud::U_beta(us, vs, z));
                out["connection_residual"] = std::max(freud::connection_residual(us, ev_r),
                                                      freud::connection_residual(vs, ev_r));
            } else if (ev_fn == "G") {
                const freud::KernelParams p(ev_beta);
                const freud::GbetaValue gv =
                    freud::g_beta_ex(p, z, ev_tol > 0.0 ? ev_tol : freud::default_tol(p));
                out["value"] = cplx(gv.value);
                out["method"] = gv.method;
                out["pole_on_path"] = gv.pole_on_path;
                out["err_est"] = gv.err_est;
            } else if (ev_fn == "E") {
                const freud::KernelParams p(ev_beta);   // range check only
                out["alpha"] = 1.0 / ev_beta;
                out["value"] = cplx(freud::ml_series(1.0 / ev_beta, std::polar(ev_r, phi)));
            } else {
                throw std::invalid_argument("eval: fn must be one of u, v, L, U, G, E");
            }
            print(out);
            return 0;
        }

        if (*sc_table) {
            merge_under(tb_fn_o, tb_fn, "fn");
            const bool have_fn = tb_fn_o->count() > 0 || cfg.contains("fn");
            const bool have_beta = merge_under(tb_beta_o, tb_beta, "beta");
            const bool have_grid = merge_under(tb_grid_o, tb_grid, "grid");
            merge_under(tb_xmin_o, tb_xmin, "xmin");
            merge_under(tb_xmax_o, tb_xmax, "xmax");
            merge_under(tb_points_o, tb_points, "points");
            merge_under(tb_spacing_o, tb_spacing, "spacing");
            merge_under(tb_tol_o, tb_tol, "tol");
            merge_under(tb_out_o, tb_out, "out");
            check_tol(tb_tol);
            if (!(tb_points >= 2 && tb_points <= 1000000))
                throw std::invalid_argument("points out of range [2, 1000000]: " +
                                            std::to_string(tb_points));
            if (tb_spacing != "linear" && tb_spacing != "log")
                throw std::invalid_argument("table: spacing must be linear or log");
            if (tb_spacing == "log" && !(tb_xmin > 0.0))
                throw std::invalid_argument("table: log spacing needs xmin > 0");
            if (!(tb_xmax > tb_xmin))
                throw std::invalid_argument("table: needs xmax > xmin");

            std::vector<double> xs(tb_points);
            for (int i = 0; i < tb_points; ++i) {
                const double f = static_cast<double>(i) / (tb_points - 1);
                xs[i] = tb_spacing == "linear"
                            ? tb_xmin + f * (tb_xmax - tb_xmin)
                            : std::exp((1.0 - f) * std::log(tb_xmin) + f * std::log(tb_xmax));
            }
            xs.front() = tb_xmin;
            xs.back() = tb_xmax;

            std::vector<std::complex<double>> vals(tb_points);
            if (tb_fn == "u" || tb_fn == "v") {
                const freud::SolutionGrid g = [&] {
                    if (have_grid) return freud::load_grid(tb_grid);
                    require_have(have_beta, "--beta (or --grid)", "table");
                    freud::SolverOptions opt;
                    opt.tol = tb_tol;
                    return freud::solve_ray(freud::KernelParams(tb_beta),
                                            parse_tag(tb_fn, "table"), 0.0, opt);
                }();
                if (have_grid && have_fn && tb_fn != freud::equation_name(g.tag))
                    throw std::invalid_argument("table: --fn conflicts with the grid file tag " +
                                                std::string(freud::equation_name(g.tag)));
                for (int i = 0; i < tb_points; ++i) vals[i] = freud::interpolate(g, xs[i]);
            } else if (tb_fn == "G") {
                require_have(have_beta, "--beta", "table");
                const freud::KernelParams p(tb_beta);
                const double tol = tb_tol > 0.0 ? tb_tol : freud::default_tol(p);
                for (int i = 0; i < tb_points; ++i)
                    vals[i] = freud::g_beta(p, {xs[i], 0.0}, tol);
            } else {
                throw std::invalid_argument("table: fn must be u, v, or G");
            }

            if (tb_out.empty()) {
                freud::write_csv(std::cout, xs, vals);
            } else {
                std::ofstream outf(tb_out);
                if (!outf) throw std::runtime_error("cannot open output file " + tb_out);
                freud::write_csv(outf, xs, vals);
            }
            return 0;
        }

        if (*sc_coeffs) {
            require_have(merge_under(cf_beta_o, cf_beta, "beta"), "--beta", "coeffs");
            merge_under(cf_tag_o, cf_tag, "tag");
            merge_under(cf_k_o, cf_k, "k");
            merge_under(cf_tol_o, cf_tol, "tol");
            check_tol(cf_tol);
            const freud::KernelParams p(cf_beta);
            const freud::EquationTag tag = parse_tag(cf_tag, "coeffs");
            freud::SolverOptions opt;
            opt.tol = cf_tol;
            const freud::SolutionGrid g = freud::solve_ray(p, tag, 0.0, opt);
            const int k_max = freud::coeff_k_max(g);
            const int k_hi = cf_k > 0 ? cf_k : k_max;

            const std::size_t last_panel_first =
                g.quad.nodes.size() - static_cast<std::size_t>(g.quad.nodes_per_panel);
            json arr = json::array();
            for (int k = 1; k <= k_hi; ++k) {
                const std::complex<double> c = tag == freud::EquationTag::u
                                                   ? freud::coeff_c(k, g)
                                                   : freud::coeff_d(k, g);
                std::complex<double> edge(0.0, 0.0);
                for (std::size_t j = last_panel_first; j < g.quad.nodes.size(); ++j)
                    edge += g.quad.weights[j] * g.kernel_values[j] *
                            std::pow(g.quad.nodes[j], k - 1) * g.values[j];
                arr.push_back({{"k", k},
                               {"re", c.real()},
                               {"im", c.imag()},
                               {"err_est", std::abs(edge) + g.tol}});
            }
            print({{"beta", cf_beta},
                   {"tag", cf_tag},
                   {"t_max", g.quad.t_max},
                   {"k_max", k_max},
                   {"coefficients", arr}});
            return 0;
        }

        if (*sc_gbeta) {
            require_have(merge_under(gb_beta_o, gb_beta, "beta"), "--beta", "gbeta");
            require_have(merge_under(gb_r_o, gb_r, "r"), "--r", "gbeta");
            merge_under(gb_phi_o, gb_phi, "phi");
            const bool have_sheet = merge_under(gb_sheet_o, gb_sheet, "arg_sheet");
            merge_under(gb_tol_o, gb_tol, "tol");
            check_tol(gb_tol);
            const double phi = have_sheet ? gb_sheet : gb_phi;
            const freud::KernelParams p(gb_beta);
            const freud::GbetaValue gv =
                freud::g_beta_ex(p, {gb_r, phi}, gb_tol > 0.0 ? gb_tol : freud::default_tol(p));
            print({{"z",
                    {{"re", gb_r * std::cos(phi)},
                     {"im", gb_r * std::sin(phi)},
                     {"arg_sheet", phi}}},
                   {"value", cplx(gv.value)},
                   {"method", gv.method},
                   {"pole_on_path", gv.pole_on_path},
                   {"err_est", gv.err_est}});
            return 0;
        }

        if (*sc_ml) {
            require_have(merge_under(ml_alpha_o, ml_alpha, "alpha"), "--alpha", "ml");
            const bool have_z = merge_under(ml_z_o, ml_z, "z");
            const bool have_r = merge_under(ml_r_o, ml_r, "r");
            merge_under(ml_phi_o, ml_phi, "phi");
            merge_under(ml_tol_o, ml_tol, "tol");
            check_tol(ml_tol);
            if (have_z == have_r)
                throw std::invalid_argument("ml: give exactly one of --z or --r/--phi");
            const freud::SurfacePoint z = have_r
                                              ? freud::SurfacePoint{ml_r, ml_phi}
                                              : freud::SurfacePoint{std::abs(ml_z),
                                                                    ml_z < 0.0 ? freud::pi : 0.0};
            const freud::MLDecomposition d =
                freud::ml_via_gbeta(ml_alpha, z, ml_tol > 0.0 ? ml_tol : 1e-10);

            json terms = json::array();
            for (const freud::MLTerm& t : d.terms)
                terms.push_back({{"k", t.k},
                                 {"Z", cplx(t.Z)},
                                 {"weight", t.weight},
                                 {"exp", cplx(std::exp(t.Z))}});
            json out = {{"alpha", d.alpha},
                        {"beta", d.beta},
                        {"z", cplx(z.to_complex())},
                        {"case", d.case_id},
                        {"dented", d.dented},
                        {"terms", terms},
                        {"sigma", cplx(d.sigma)},
                        {"I", cplx(d.i_value)},
                        {"value", cplx(d.value)}};
            try {
                const std::complex<double> series = freud::ml_series(ml_alpha, z.to_complex());
                out["series"] = cplx(series);
                out["identity_gap"] = std::abs(d.value - series);
            } catch (const std::overflow_error&) {
                out["series"] = json();
            }
            print(out);
            return 0;
        }

        if (*sc_stokes) {
            require_have(merge_under(st_beta_o, st_beta, "beta"), "--beta", "stokes");
            const freud::StokesLines s = freud::stokes_lines(freud::KernelParams(st_beta));
            print({{"angles", {s.angles[0], s.angles[1]}}, {"l", s.l}});
            return 0;
        }

        if (*sc_verify) {
            merge_under(vf_suite_o, vf_suite, "suite");
            std::vector<freud::SuiteResult> results;
            if (vf_suite.empty()) {
                results = freud::run_all_verify_suites();
            } else {
                results.push_back(freud::run_verify_suite(vf_suite));
            }
            bool all = true;
            json arr = json::array();
            for (const freud::SuiteResult& r : results) {
                all = all && r.pass;
                arr.push_back({{"name", r.name},
                               {"pass", r.pass},
                               {"worst", r.worst},
                               {"detail", r.detail}});
            }
            print({{"pass", all}, {"suites", arr}});
            return all ? 0 : 2;
        }

        std::cout << app.help();
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
