#ifndef GMUX_FIGURES_HPP
#define GMUX_FIGURES_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gmux {

/// CSV-shaped dataset with cells already formatted as shortest
/// round-trip decimals; warnings carry skipped-row notes (figure 4's
/// unsupported Hadamard orders).
struct FigureTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> warnings;
};

/// (n, beta, mse) for n = 2..20 over the joint-sensing beta grid.
FigureTable figure1(int grid_size = 1001);

/// (k, mse) for k = 1..n-1.
FigureTable figure2(int n);

/// (k2, beta, mse): two-k combinations against k* = optimal_k(n),
/// beta on a `grid_size`-point grid per k2.
FigureTable figure3(int n, int grid_size = 101);

/// (n, mse_optimal, mse_hadamard) for even n up to `cap`; rows whose
/// truncated core design needs an unreachable Hadamard order get an
/// empty third cell plus a warning.
FigureTable figure4(int cap = 100);

void write_csv(const FigureTable& table, std::ostream& out);
void write_csv_file(const FigureTable& table, const std::string& path);

}  // namespace gmux

#endif
