#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmux/analysis.hpp"
#include "gmux/designs.hpp"
#include "gmux/errors.hpp"
#include "gmux/figures.hpp"
#include "gmux/hadamard.hpp"
#include "gmux/io.hpp"
#include "gmux/model.hpp"
#include "gmux/simulate.hpp"

namespace {

using nlohmann::json;

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            out.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw gmux::InvalidArgumentError("cannot parse number: " + cell);
        }
    }
    return out;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw gmux::InvalidArgumentError("cannot write output file: " + out_path);
    f << text;
}

json number_or_null(const std::optional<std::pair<double, double>>& structure) {
    if (!structure) return nullptr;
    return json::array({structure->first, structure->second});
}

int run_evaluate(const std::string& design_path) {
    const gmux::Design design = gmux::read_design_file(design_path);
    gmux::require_valid(design);
    const gmux::ValidationReport report = gmux::validate_design(design);
    const gmux::FisherInfo info = gmux::fisher_information(design);
    json out{{"trace_inverse", gmux::trace_inverse(info)},
             {"rank", report.rank},
             {"structured", number_or_null(info.structure)}};
    std::cout << out.dump() << '\n';
    return 0;
}

int run_design(const std::string& family, int n, int k, double beta,
               const std::string& weights_text, const std::string& out_path) {
    gmux::Design design;
    if (family == "identity") {
        design = gmux::identity_design(n);
    } else if (family == "complement") {
        design = gmux::complement_design(n);
    } else if (family == "individual-plus-joint") {
        design = gmux::individual_plus_joint(n, beta);
    } else if (family == "single-k") {
        design = gmux::single_k_design(n, k);
    } else if (family == "multi-k") {
        gmux::MultiKWeights w{parse_csv_doubles(weights_text)};
        design = gmux::multi_k_design(n, w);
    } else if (family == "hadamard") {
        design = gmux::core_design(n).design;
    } else if (family == "hadamard-truncated") {
        design = gmux::truncated_core_design(n).design;
    } else {
        throw gmux::InvalidArgumentError(
            "unknown family '" + family +
            "' (expected identity, complement, individual-plus-joint, single-k, "
            "multi-k, hadamard, hadamard-truncated)");
    }
    const std::string text = gmux::design_to_json(design).dump() + "\n";
    emit(out_path, text);
    return 0;
}

int run_optimize(int n) {
    const gmux::GlobalOptimum opt = gmux::global_optimum(n);
    json out{{"n", opt.n}, {"family", opt.family}, {"mse", opt.mse}};
    if (opt.family == "single-k") {
        out["k"] = opt.k;
        if (opt.rows < 9007199254740992.0)
            out["rows"] = static_cast<long long>(opt.rows);
        else
            out["rows"] = opt.rows;
        out["time_per_row"] = opt.time_per_row;
    } else {
        out["beta"] = opt.beta;
        out["rows"] = static_cast<long long>(opt.rows);
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int run_simulate(const std::string& design_path, long long trials, std::uint64_t seed,
                 const std::string& mu_text, double sigma2, const std::string& out_path) {
    gmux::SimConfig cfg;
    cfg.design = gmux::read_design_file(design_path);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.noise_variance = sigma2;
    if (mu_text.empty()) {
        cfg.mu.resize(cfg.design.n_params);
        for (int i = 0; i < cfg.design.n_params; ++i)
            cfg.mu[i] = static_cast<double>(i + 1) / cfg.design.n_params;
    } else {
        cfg.mu = parse_csv_doubles(mu_text);
    }
    const gmux::SimReport report = gmux::simulate(cfg);
    emit(out_path, gmux::report_to_json(report).dump() + "\n");
    return 0;
}

int run_figures(int which, int n, int grid, int cap, const std::string& out_path) {
    gmux::FigureTable table;
    switch (which) {
        case 1: table = gmux::figure1(grid > 0 ? grid : 1001); break;
        case 2: table = gmux::figure2(n); break;
        case 3: table = gmux::figure3(n, grid > 0 ? grid : 101); break;
        case 4: table = gmux::figure4(cap); break;
        default:
            throw gmux::InvalidArgumentError("--which must be 1, 2, 3 or 4");
    }
    for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
    if (out_path.empty()) {
        std::ostringstream ss;
        gmux::write_csv(table, ss);
        std::cout << ss.str();
    } else {
        gmux::write_csv_file(table, out_path);
    }
    return 0;
}

int run_hadamard(int order, const std::string& what, const std::string& out_path) {
    std::ostringstream ss;
    if (what == "matrix") {
        const gmux::HadamardMatrix h = gmux::hadamard(order);
        for (int i = 0; i < h.order(); ++i) {
            for (int j = 0; j < h.order(); ++j)
                ss << static_cast<int>(h(i, j)) << (j + 1 < h.order() ? "," : "\n");
        }
    } else if (what == "core") {
        const gmux::CoreDesign core = gmux::core_design(order - 1);
        for (const auto& row : core.design.rows) {
            for (std::size_t j = 0; j < row.size(); ++j)
                ss << static_cast<int>(row[j]) << (j + 1 < row.size() ? "," : "\n");
        }
    } else if (what == "design") {
        ss << gmux::design_to_json(gmux::core_design(order - 1).design).dump() << '\n';
    } else {
        throw gmux::InvalidArgumentError("--emit must be matrix, core or design");
    }
    emit(out_path, ss.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Switch-schedule design toolkit for the Gaussian multiplex channel"};
    app.require_subcommand(1);

    std::string design_path, out_path, family, weights_text, mu_text, emit_what = "matrix";
    int n = 20, k = 0, which = 2, grid = -1, cap = 100, order = 4;
    long long trials = 100000;
    std::uint64_t seed = 0;
    double beta = 0.0, sigma2 = 1.0;

    auto* evaluate = app.add_subcommand("evaluate", "Evaluate a design file");
    evaluate->add_option("design", design_path, "design JSON file")->required();

    auto* design = app.add_subcommand("design", "Generate a design");
    design->add_option("--family", family, "design family")->required();
    design->add_option("--n", n, "number of sensors")->required();
    design->add_option("--k", k, "switches closed per row (single-k)");
    design->add_option("--beta", beta, "joint-row weight (individual-plus-joint)");
    design->add_option("--weights", weights_text, "comma-separated alpha_1..alpha_n (multi-k)");
    design->add_option("--out", out_path, "output file (stdout if omitted)");

    auto* optimize = app.add_subcommand("optimize", "Print the MSE-optimal design summary");
    optimize->add_option("--n", n, "number of sensors")->required();

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimator validation");
    simulate->add_option("--design", design_path, "design JSON file")->required();
    simulate->add_option("--trials", trials, "number of trials");
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_option("--mu", mu_text, "comma-separated true parameters (default i/N)");
    simulate->add_option("--sigma2", sigma2, "noise variance");
    simulate->add_option("--out", out_path, "report file (stdout if omitted)");

    auto* figures = app.add_subcommand("figures", "Emit figure datasets as CSV");
    figures->add_option("--which", which, "figure number 1-4")->required();
    figures->add_option("--n", n, "number of sensors (figures 2 and 3)");
    figures->add_option("--grid", grid, "beta grid size (figures 1 and 3; defaults 1001 and 101)");
    figures->add_option("--cap", cap, "largest n (figure 4)");
    figures->add_option("--out", out_path, "output CSV (stdout if omitted)");

    auto* hadamard = app.add_subcommand("hadamard", "Construct Hadamard matrices");
    hadamard->add_option("--order", order, "matrix order")->required();
    hadamard->add_option("--emit", emit_what, "matrix, core or design");
    hadamard->add_option("--out", out_path, "output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(evaluate)) return run_evaluate(design_path);
        if (app.got_subcommand(design)) return run_design(family, n, k, beta, weights_text, out_path);
        if (app.got_subcommand(optimize)) return run_optimize(n);
        if (app.got_subcommand(simulate))
            return run_simulate(design_path, trials, seed, mu_text, sigma2, out_path);
        if (app.got_subcommand(figures)) return run_figures(which, n, grid, cap, out_path);
        if (app.got_subcommand(hadamard)) return run_hadamard(order, emit_what, out_path);
    } catch (const gmux::Error& e) {
        std::cerr << nlohmann::json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}
