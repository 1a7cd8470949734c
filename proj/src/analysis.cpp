#include "gmux/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gmux/errors.hpp"

namespace gmux {

int optimal_k(int n) {
    if (n < 2) throw InvalidArgumentError("optimal_k needs n >= 2");
    if (n == 2) return 1;
    return n % 2 == 0 ? n / 2 : (n + 1) / 2;
}

std::vector<KCurvePoint> mse_vs_k_curve(int n) {
    if (n < 2) throw InvalidArgumentError("mse_vs_k_curve needs n >= 2");
    std::vector<KCurvePoint> points;
    points.reserve(n - 1);
    for (int k = 1; k <= n - 1; ++k) points.push_back({k, single_k_mse(n, k)});
    return points;
}

std::vector<SweepPoint> convex_combination_sweep(int n, int k1, int k2, int grid_size) {
    if (k1 < 1 || k1 > n || k2 < 1 || k2 > n)
        throw InvalidArgumentError("convex_combination_sweep needs 1 <= k1, k2 <= n");
    if (grid_size < 2) throw InvalidArgumentError("grid_size must be at least 2");

    std::vector<SweepPoint> points;
    points.reserve(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        const double beta = static_cast<double>(i) / (grid_size - 1);
        MultiKWeights w{std::vector<double>(n, 0.0)};
        w.alphas[k1 - 1] += 1.0 - beta;
        w.alphas[k2 - 1] += beta;
        points.push_back({beta, mse_from_spectrum(multi_k_spectrum(n, w))});
    }
    return points;
}

MajorizationCertificate majorization_certificate(const Design& design) {
    require_valid(design);
    const int n = design.n_params;
    const FisherInfo info = fisher_information(design);

    MajorizationCertificate cert;
    const std::vector<double> evals = jacobi_eigenvalues(info.matrix);
    for (double v : evals) cert.original_spectrum.entries.push_back({v, 1});

    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += info.matrix(i, i);
    cert.trace_original = trace;

    double all_ones_sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) all_ones_sum += info.matrix(i, j);
    cert.quadratic_form_bound = all_ones_sum / n;

    const double lambda_max = evals.back();
    if (cert.quadratic_form_bound > lambda_max + 1e-9 * std::max(1.0, lambda_max))
        throw std::logic_error("Rayleigh quotient exceeded the largest eigenvalue");

    cert.trace_inverse_original = trace_inverse(info);

    if (n == 1) {
        cert.transformed_spectrum = cert.original_spectrum;
        cert.trace_inverse_transformed = cert.trace_inverse_original;
        return cert;
    }

    const double top = cert.quadratic_form_bound;
    const double rest_avg = (trace - top) / (n - 1);
    if (!(top > 0.0) || !(rest_avg > 0.0))
        throw SingularMatrixError("transformed spectrum is singular");
    if (rest_avg == top) {
        cert.transformed_spectrum.entries.push_back({top, n});
    } else if (rest_avg < top) {
        cert.transformed_spectrum.entries.push_back({rest_avg, n - 1});
        cert.transformed_spectrum.entries.push_back({top, 1});
    } else {
        cert.transformed_spectrum.entries.push_back({top, 1});
        cert.transformed_spectrum.entries.push_back({rest_avg, n - 1});
    }
    cert.trace_inverse_transformed = (n - 1) / rest_avg + 1.0 / top;
    return cert;
}

double joint_sensing_curve(int n, double beta) {
    return n / (1.0 - beta) + 1.0 / (1.0 + (static_cast<double>(n) * n - 1.0) * beta);
}

double golden_minimize(double (*f)(int, double), int n, double lo, double hi, double tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(n, x1), f2 = f(n, x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(n, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(n, x2);
        }
    }
    return 0.5 * (a + b);
}

BetaSweep beta_sweep(int n, int grid_size) {
    if (n < 2) throw InvalidArgumentError("beta_sweep needs n >= 2");
    if (grid_size < 2) throw InvalidArgumentError("grid_size must be at least 2");

    BetaSweep sweep;
    sweep.points.reserve(grid_size);
    int best = 0;
    for (int i = 0; i < grid_size; ++i) {
        const double beta = static_cast<double>(i) / grid_size;  // [0, 1)
        const double mse = joint_sensing_curve(n, beta);
        sweep.points.push_back({beta, mse});
        if (mse < sweep.points[best].mse) best = i;
    }
    sweep.argmin_beta = sweep.points[best].beta;
    sweep.min_mse = sweep.points[best].mse;

    const double step = 1.0 / grid_size;
    const double lo = std::max(0.0, sweep.argmin_beta - step);
    const double hi = std::min(1.0 - 1e-12, sweep.argmin_beta + step);
    sweep.refined_beta = golden_minimize(&joint_sensing_curve, n, lo, hi, 1e-8);
    sweep.refined_mse = joint_sensing_curve(n, sweep.refined_beta);
    return sweep;
}

GlobalOptimum global_optimum(int n) {
    if (n < 2) throw InvalidArgumentError("global_optimum needs n >= 2");
    GlobalOptimum opt;
    opt.n = n;
    if (n == 2) {
        // The n=2 exception: the individual-plus-joint family beats the
        // best single-k value (2.0). Minimize its exact MSE over beta.
        opt.family = "individual-plus-joint";
        opt.rows = 3;
        double lo = 0.0, hi = 0.5;
        // Coarse grid then golden polish.
        double best_beta = 0.0, best = individual_plus_joint_mse(2, 0.0);
        for (int i = 1; i < 1000; ++i) {
            const double beta = 0.5 * i / 1000.0;
            const double v = individual_plus_joint_mse(2, beta);
            if (v < best) {
                best = v;
                best_beta = beta;
            }
        }
        lo = std::max(0.0, best_beta - 0.001);
        hi = std::min(0.999999, best_beta + 0.001);
        opt.beta = golden_minimize(&individual_plus_joint_mse, 2, lo, hi, 1e-10);
        opt.mse = individual_plus_joint_mse(2, opt.beta);
        return opt;
    }
    opt.family = "single-k";
    opt.k = optimal_k(n);
    opt.rows = binomial(n, opt.k);
    opt.time_per_row = n / opt.rows;
    opt.mse = single_k_mse(n, opt.k);
    return opt;
}

}  // namespace gmux
