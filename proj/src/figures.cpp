#include "gmux/figures.hpp"

#include <fstream>
#include <ostream>

#include "gmux/analysis.hpp"
#include "gmux/errors.hpp"
#include "gmux/hadamard.hpp"
#include "gmux/io.hpp"

namespace gmux {

FigureTable figure1(int grid_size) {
    FigureTable t;
    t.header = {"n", "beta", "mse"};
    for (int n = 2; n <= 20; ++n) {
        const BetaSweep sweep = beta_sweep(n, grid_size);
        for (const auto& p : sweep.points)
            t.rows.push_back({std::to_string(n), format_double(p.beta), format_double(p.mse)});
    }
    return t;
}

FigureTable figure2(int n) {
    FigureTable t;
    t.header = {"k", "mse"};
    for (const auto& p : mse_vs_k_curve(n))
        t.rows.push_back({std::to_string(p.k), format_double(p.mse)});
    return t;
}

FigureTable figure3(int n, int grid_size) {
    FigureTable t;
    t.header = {"k2", "beta", "mse"};
    const int k_star = optimal_k(n);
    for (int k2 = 1; k2 <= n; ++k2) {
        if (k2 == k_star) continue;
        for (const auto& p : convex_combination_sweep(n, k_star, k2, grid_size))
            t.rows.push_back({std::to_string(k2), format_double(p.beta), format_double(p.mse)});
    }
    return t;
}

FigureTable figure4(int cap) {
    FigureTable t;
    t.header = {"n", "mse_optimal", "mse_hadamard"};
    for (int n = 2; n <= cap; n += 2) {
        const double optimal = single_k_mse(n, n / 2);
        std::string hadamard_cell;
        try {
            const CoreDesign core = truncated_core_design(n);
            hadamard_cell = format_double(trace_inverse(fisher_information(core.design)));
        } catch (const UnsupportedOrderError& e) {
            t.warnings.push_back("n=" + std::to_string(n) + ": " + e.what());
        }
        t.rows.push_back({std::to_string(n), format_double(optimal), hadamard_cell});
    }
    return t;
}

void write_csv(const FigureTable& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << table.header[i] << (i + 1 < table.header.size() ? "," : "\n");
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
}

void write_csv_file(const FigureTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidArgumentError("cannot write figure file: " + path);
    write_csv(table, out);
}

}  // namespace gmux
