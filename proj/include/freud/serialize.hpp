#pragma once

#include <complex>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "solver.hpp"

/*
 * JSON persistence for solution grids and fixed-format CSV for plot data.
 * Doubles round-trip bit-exactly: the JSON writer emits shortest-exact
 * decimal forms and the CSV writer uses %.17g.
 */

namespace freud {

inline nlohmann::json to_json(const SolutionGrid& g) {
    nlohmann::json j;
    j["beta"] = g.params.beta();
    j["theta"] = g.theta;
    j["tag"] = equation_name(g.tag);
    j["tol"] = g.tol;
    j["residual"] = g.residual;
    j["iterations"] = g.iterations;
    j["t_max"] = g.quad.t_max;
    j["w_max"] = g.quad.w_max;
    j["alpha"] = g.quad.alpha;
    j["nodes_per_panel"] = g.quad.nodes_per_panel;
    j["panel_bounds_w"] = g.quad.panel_bounds_w;
    j["nodes"] = g.quad.nodes;
    j["weights"] = g.quad.weights;
    auto split = [](const std::vector<std::complex<double>>& v, int part) {
        std::vector<double> out;
        out.reserve(v.size());
        for (const auto& z : v) out.push_back(part == 0 ? z.real() : z.imag());
        return out;
    };
    j["kernel_re"] = split(g.kernel_values, 0);
    j["kernel_im"] = split(g.kernel_values, 1);
    j["values_re"] = split(g.values, 0);
    j["values_im"] = split(g.values, 1);
    return j;
}

inline SolutionGrid grid_from_json(const nlohmann::json& j) {
    for (const char* key : {"beta", "theta", "tag", "tol", "residual", "nodes", "weights",
                            "values_re", "values_im", "kernel_re", "kernel_im"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("grid_from_json: missing field ") + key);

    SolutionGrid g(KernelParams(j.at("beta").get<double>()));
    const std::string tag = j.at("tag").get<std::string>();
    if (tag == "u")
        g.tag = EquationTag::u;
    else if (tag == "v")
        g.tag = EquationTag::v;
    else
        throw std::invalid_argument("grid_from_json: tag must be \"u\" or \"v\", got " + tag);
    g.theta = j.at("theta").get<double>();
    g.tol = j.at("tol").get<double>();
    g.residual = j.at("residual").get<double>();
    g.iterations = j.value("iterations", 0);
    g.quad.tol = g.tol;
    g.quad.t_max = j.value("t_max", 0.0);
    g.quad.w_max = j.value("w_max", 0.0);
    g.quad.alpha = j.value("alpha", 1.0);
    g.quad.nodes_per_panel = j.value("nodes_per_panel", 0);
    g.quad.panel_bounds_w = j.value("panel_bounds_w", std::vector<double>{});
    g.quad.nodes = j.at("nodes").get<std::vector<double>>();
    g.quad.weights = j.at("weights").get<std::vector<double>>();

    auto join = [&](const char* re_key, const char* im_key) {
        const auto re = j.at(re_key).get<std::vector<double>>();
        const auto im = j.at(im_key).get<std::vector<double>>();
        if (re.size() != im.size())
            throw std::invalid_argument("grid_from_json: mismatched re/im lengths");
        std::vector<std::complex<double>> v;
        v.reserve(re.size());
        for (std::size_t k = 0; k < re.size(); ++k) v.emplace_back(re[k], im[k]);
        return v;
    };
    g.kernel_values = join("kernel_re", "kernel_im");
    g.values = join("values_re", "values_im");
    if (g.values.size() != g.quad.nodes.size() || g.quad.weights.size() != g.quad.nodes.size() ||
        g.kernel_values.size() != g.quad.nodes.size())
        throw std::invalid_argument("grid_from_json: mismatched array lengths");
    return g;
}

inline void save_grid(const SolutionGrid& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_grid: cannot open " + path);
    out << to_json(g).dump(2) << '\n';
    if (!out) throw std::runtime_error("save_grid: write failed for " + path);
}

inline SolutionGrid load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_grid: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return grid_from_json(j);
}

/** One %.17g field; enough digits to reproduce the double exactly. */
inline std::string format_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline void write_csv(std::ostream& out, const std::vector<double>& x,
                      const std::vector<std::complex<double>>& values) {
    if (x.size() != values.size())
        throw std::invalid_argument("write_csv: mismatched column lengths");
    out << "x,re,im\n";
    for (std::size_t k = 0; k < x.size(); ++k)
        out << format_g17(x[k]) << ',' << format_g17(values[k].real()) << ','
            << format_g17(values[k].imag()) << '\n';
}

}  // namespace freud
