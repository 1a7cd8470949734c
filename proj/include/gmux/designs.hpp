#ifndef GMUX_DESIGNS_HPP
#define GMUX_DESIGNS_HPP

#include <cstdint>
#include <vector>

#include "gmux/model.hpp"

namespace gmux {

/// Row-count ceiling for explicit subset enumeration; the closed forms
/// cover everything above it.
inline constexpr long long kEnumerationCap = 2'000'000;

/// C(n, k) as a double; exact while the value fits in 53 bits.
double binomial(int n, int k);

/// C(n, k) as an exact integer, or a CapExceededError when it exceeds
/// `cap`.
long long binomial_within_cap(int n, int k, long long cap);

/// Convex weights over k = 1..n, stored dense: alphas[k-1] is the
/// fraction of the time budget spent on k-switches-closed rows.
struct MultiKWeights {
    std::vector<double> alphas;
};

/// Throws InvalidArgumentError unless the weights are a valid point of
/// the simplex of the right dimension.
void validate_weights(int n, const MultiKWeights& weights);

/// B = I_n, unit times. Tr C^{-1} = n.
Design identity_design(int n);

/// Each row closes every switch but one; unit times.
Design complement_design(int n);

/// Identity rows with time 1-beta each plus one all-ones row with time
/// n*beta (dropped at beta = 0).
Design individual_plus_joint(int n, double beta);

/// Closed-form Tr C^{-1} of individual_plus_joint(n, beta); matches the
/// dense path: (n-1)/(1-beta) + 1/(1+(n^2-1)beta).
double individual_plus_joint_mse(int n, double beta);

/// All C(n,k) rows with exactly k ones, lexicographic, equal times n/M.
Design single_k_design(int n, int k);

/// (N-1)^2/(k(N-k)) + 1/k^2.
double single_k_mse(int n, int k);

/// Eigenvalues of the convex combination of single-k Fisher matrices:
/// lambda_1 = sum_k alpha_k k(n-k)/(n-1) with multiplicity n-1 and
/// lambda_2 = sum_k alpha_k k^2 with multiplicity 1. The k = n term
/// contributes zero to lambda_1.
Spectrum multi_k_spectrum(int n, const MultiKWeights& weights);

/// Concatenated single-k blocks, block-k rows carrying time
/// alpha_k * n / C(n,k) each.
Design multi_k_design(int n, const MultiKWeights& weights);

/// (n-1)/lambda_1 + 1/lambda_2 from a two-entry spectrum; +inf when an
/// eigenvalue is nonpositive.
double mse_from_spectrum(const Spectrum& spectrum);

}  // namespace gmux

#endif
