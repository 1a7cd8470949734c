#include "gmux/designs.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gmux/errors.hpp"

namespace gmux {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    // Exact integer below 2^53, best-effort float above.
    return r < 9007199254740992.0 ? std::round(r) : r;
}

long long binomial_within_cap(int n, int k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) stays exact because r is always a binomial
        // coefficient times i!/..; guard against overflow before the cap check.
        if (r > (std::numeric_limits<long long>::max() / (n - k + i)))
            throw CapExceededError("C(" + std::to_string(n) + "," + std::to_string(k) +
                                   ") overflows; use the closed-form cost instead");
        r = r * (n - k + i) / i;
        if (r > cap)
            throw CapExceededError("C(" + std::to_string(n) + "," + std::to_string(k) +
                                   ") exceeds the enumeration cap of " + std::to_string(cap) +
                                   " rows; use the closed-form cost instead");
    }
    return r;
}

void validate_weights(int n, const MultiKWeights& weights) {
    if (static_cast<int>(weights.alphas.size()) != n)
        throw InvalidArgumentError("weights must have length n = " + std::to_string(n));
    double total = 0.0;
    for (double a : weights.alphas) {
        if (!(a >= 0.0))
            throw InvalidArgumentError("weights must be nonnegative");
        total += a;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw InvalidArgumentError("weights must sum to 1 (got " + std::to_string(total) + ")");
}

Design identity_design(int n) {
    if (n < 1) throw InvalidArgumentError("identity_design needs n >= 1");
    Design d;
    d.n_params = n;
    d.rows.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) d.rows[i][i] = 1;
    d.times.assign(n, 1.0);
    return d;
}

Design complement_design(int n) {
    if (n < 2) throw InvalidArgumentError("complement_design needs n >= 2");
    Design d;
    d.n_params = n;
    d.rows.assign(n, std::vector<std::uint8_t>(n, 1));
    for (int i = 0; i < n; ++i) d.rows[i][i] = 0;
    d.times.assign(n, 1.0);
    return d;
}

Design individual_plus_joint(int n, double beta) {
    if (n < 2) throw InvalidArgumentError("individual_plus_joint needs n >= 2");
    if (!(beta >= 0.0 && beta < 1.0))
        throw InvalidArgumentError("beta must lie in [0, 1)");
    if (beta == 0.0) return identity_design(n);
    Design d;
    d.n_params = n;
    d.rows.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) d.rows[i][i] = 1;
    d.rows.push_back(std::vector<std::uint8_t>(n, 1));
    d.times.assign(n, 1.0 - beta);
    d.times.push_back(n * beta);
    return d;
}

double individual_plus_joint_mse(int n, double beta) {
    return (n - 1) / (1.0 - beta) + 1.0 / (1.0 + (static_cast<double>(n) * n - 1) * beta);
}

Design single_k_design(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw InvalidArgumentError("single_k_design needs 1 <= k <= n-1");
    const long long m = binomial_within_cap(n, k, kEnumerationCap);

    Design d;
    d.n_params = n;
    d.rows.reserve(static_cast<std::size_t>(m));

    // Lexicographic enumeration of k-subsets by index increment.
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<std::uint8_t> row(n, 0);
        for (int j : idx) row[j] = 1;
        d.rows.push_back(std::move(row));

        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }

    d.times.assign(d.rows.size(), static_cast<double>(n) / static_cast<double>(m));
    return d;
}

double single_k_mse(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw InvalidArgumentError("single_k_mse needs 1 <= k <= n-1");
    // Single rational division: (N-1)^2/(k(N-k)) + 1/k^2 over the common
    // denominator. Numerator and denominator are exact integers below
    // 2^53 for every n this library handles, so the result is the
    // correctly rounded value of the exact rational.
    const double nm1 = n - 1;
    const double numerator = nm1 * nm1 * k + (n - k);
    const double denominator = static_cast<double>(k) * k * (n - k);
    return numerator / denominator;
}

Spectrum multi_k_spectrum(int n, const MultiKWeights& weights) {
    validate_weights(n, weights);
    double lambda_small = 0.0;
    double lambda_big = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double a = weights.alphas[k - 1];
        if (a == 0.0) continue;
        if (k < n) lambda_small += a * (static_cast<double>(k) * (n - k)) / (n - 1);
        lambda_big += a * static_cast<double>(k) * k;
    }
    Spectrum s;
    if (n == 1) {
        s.entries.push_back({lambda_big, 1});
        return s;
    }
    if (lambda_small == lambda_big) {
        s.entries.push_back({lambda_small, n});
    } else if (lambda_small < lambda_big) {
        s.entries.push_back({lambda_small, n - 1});
        s.entries.push_back({lambda_big, 1});
    } else {
        s.entries.push_back({lambda_big, 1});
        s.entries.push_back({lambda_small, n - 1});
    }
    return s;
}

Design multi_k_design(int n, const MultiKWeights& weights) {
    validate_weights(n, weights);
    long long total_rows = 0;
    for (int k = 1; k <= n; ++k) {
        if (weights.alphas[k - 1] == 0.0) continue;
        total_rows += (k == n) ? 1 : binomial_within_cap(n, k, kEnumerationCap);
        if (total_rows > kEnumerationCap)
            throw CapExceededError("multi-k design would have more than " +
                                   std::to_string(kEnumerationCap) + " rows");
    }
    if (total_rows == 0)
        throw InvalidArgumentError("multi-k design needs at least one positive weight");

    Design d;
    d.n_params = n;
    d.rows.reserve(static_cast<std::size_t>(total_rows));
    d.times.reserve(static_cast<std::size_t>(total_rows));
    for (int k = 1; k <= n; ++k) {
        const double a = weights.alphas[k - 1];
        if (a == 0.0) continue;
        if (k == n) {
            d.rows.push_back(std::vector<std::uint8_t>(n, 1));
            d.times.push_back(a * n);
            continue;
        }
        Design block = single_k_design(n, k);
        const double t = a * n / static_cast<double>(block.row_count());
        for (auto& row : block.rows) {
            d.rows.push_back(std::move(row));
            d.times.push_back(t);
        }
    }
    return d;
}

double mse_from_spectrum(const Spectrum& spectrum) {
    double total = 0.0;
    for (const auto& e : spectrum.entries) {
        if (!(e.value > 0.0)) return std::numeric_limits<double>::infinity();
        total += e.multiplicity / e.value;
    }
    return total;
}

}  // namespace gmux
