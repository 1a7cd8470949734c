#ifndef GMUX_TESTS_HELPERS_HPP
#define GMUX_TESTS_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "gmux/linalg.hpp"
#include "gmux/model.hpp"
#include "gmux/simulate.hpp"

namespace gmux::testing {

/// Positive times summing to `total`, drawn from the uniform simplex
/// (normalized exponentials).
inline std::vector<double> random_simplex_times(Rng& rng, int m, double total) {
    std::vector<double> t(m);
    double sum = 0.0;
    for (double& v : t) {
        v = -std::log(1.0 - rng.next_unit());
        sum += v;
    }
    for (double& v : t) v = v / sum * total;
    return t;
}

/// Random design with distinct nonzero rows and rank n.
inline Design random_identifiable_design(Rng& rng, int n, int max_rows = 0) {
    const int cap = (1 << n) - 1;
    const int want = max_rows > 0 ? max_rows : std::min(2 * n, cap);
    while (true) {
        std::set<unsigned> masks;
        while (static_cast<int>(masks.size()) < want)
            masks.insert(1u + static_cast<unsigned>(rng.next_u64() % cap));
        Design d;
        d.n_params = n;
        for (unsigned m : masks) {
            std::vector<std::uint8_t> row(n, 0);
            for (int j = 0; j < n; ++j)
                if (m & (1u << j)) row[j] = 1;
            d.rows.push_back(std::move(row));
        }
        d.times = random_simplex_times(rng, d.row_count(), n);
        if (binary_rank(d.rows, n) == n) return d;
    }
}

/// Largest gap between the expanded spectrum and a sorted dense
/// eigenvalue list.
inline double spectrum_distance(const Spectrum& s, std::vector<double> dense) {
    std::vector<double> a = s.expand();
    std::sort(dense.begin(), dense.end());
    if (a.size() != dense.size()) return 1e300;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - dense[i]));
    return worst;
}

}  // namespace gmux::testing

#endif
