#ifndef GMUX_ANALYSIS_HPP
#define GMUX_ANALYSIS_HPP

#include <string>
#include <vector>

#include "gmux/designs.hpp"
#include "gmux/model.hpp"

namespace gmux {

/// Minimizer of single_k_mse over integer k: n/2 for even n >= 4,
/// (n+1)/2 for odd n >= 3, and 1 for n = 2 (the only finite point).
int optimal_k(int n);

struct KCurvePoint {
    int k = 0;
    double mse = 0.0;
};

/// single_k_mse at every k = 1..n-1.
std::vector<KCurvePoint> mse_vs_k_curve(int n);

struct SweepPoint {
    double beta = 0.0;
    double mse = 0.0;
};

/// Cost of the two-block convex combination with weight 1-beta on k1
/// and beta on k2, over a uniform beta grid on [0, 1] of `grid_size`
/// points (endpoints included). Singular combinations report +inf.
std::vector<SweepPoint> convex_combination_sweep(int n, int k1, int k2, int grid_size);

/// Spectral certificate that flattening the small eigenvalues around
/// the all-ones Rayleigh quotient can only lower Tr C^{-1}: the
/// transformed spectrum keeps the trace, caps the top eigenvalue at
/// u^T C u (u = 1/sqrt(N) * ones) and averages the rest.
struct MajorizationCertificate {
    Spectrum original_spectrum;
    Spectrum transformed_spectrum;
    double quadratic_form_bound = 0.0;  // u^T C u = sum_k alpha_k k^2
    double trace_original = 0.0;
    double trace_inverse_original = 0.0;
    double trace_inverse_transformed = 0.0;
};

MajorizationCertificate majorization_certificate(const Design& design);

struct BetaSweep {
    std::vector<SweepPoint> points;
    double argmin_beta = 0.0;
    double min_mse = 0.0;
    double refined_beta = 0.0;  // golden-section polish of the grid argmin
    double refined_mse = 0.0;
};

/// The individual-plus-joint benchmark cost n/(1-beta) + 1/(1+(n^2-1)beta),
/// which counts the isolated-sensing eigenvalue with multiplicity n.
/// The exact MSE of the generated design counts it n-1 times
/// (individual_plus_joint_mse); this is the curve the figure-1 data
/// reproduces.
double joint_sensing_curve(int n, double beta);

/// joint_sensing_curve on `grid_size` uniform points in [0, 1).
BetaSweep beta_sweep(int n, int grid_size = 1001);

struct GlobalOptimum {
    int n = 0;
    std::string family;        // "single-k" or "individual-plus-joint"
    int k = 0;                 // single-k only
    double rows = 0.0;         // C(n, k), approximate above 2^53
    double time_per_row = 0.0; // single-k only
    double beta = 0.0;         // individual-plus-joint only
    double mse = 0.0;
};

/// Equal-time single-k description at k = optimal_k(n); for n = 2 the
/// individual-plus-joint design at the numerically optimal beta, which
/// beats every single-k choice.
GlobalOptimum global_optimum(int n);

/// Golden-section minimizer on [lo, hi] to absolute tolerance `tol`.
double golden_minimize(double (*f)(int, double), int n, double lo, double hi, double tol);

}  // namespace gmux

#endif
