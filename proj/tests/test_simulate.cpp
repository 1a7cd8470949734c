#include <doctest.h>

#include <cmath>

#include "gmux/analysis.hpp"
#include "gmux/designs.hpp"
#include "gmux/errors.hpp"
#include "gmux/hadamard.hpp"
#include "gmux/model.hpp"
#include "gmux/simulate.hpp"
#include "helpers.hpp"

using namespace gmux;

TEST_CASE("rng streams are deterministic") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng c(42), d(43);
    bool all_equal = true;
    for (int i = 0; i < 10; ++i) all_equal = all_equal && c.next_u64() == d.next_u64();
    CHECK_FALSE(all_equal);

    Rng s0 = Rng::substream(7, 0);
    Rng s1 = Rng::substream(7, 1);
    CHECK(s0.next_u64() != s1.next_u64());
}

TEST_CASE("rng uniform and gaussian moments") {
    Rng rng(99);
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sum2 / n == doctest::Approx(1.0 / 3.0).epsilon(0.01));

    double gsum = 0.0, gsum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.next_gaussian();
        gsum += g;
        gsum2 += g * g;
    }
    CHECK(gsum / n == doctest::Approx(0.0).epsilon(0.02));
    CHECK(gsum2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("sample_observation moments and exact zero-noise values") {
    Design single;
    single.n_params = 2;
    single.rows = {{1, 1}};
    single.times = {2.0};
    Rng rng(5);
    const Observation noiseless = sample_observation(single, {3.0, 4.0}, 1.0, rng, true);
    CHECK(noiseless.values[0] == 14.0);  // t * (mu1 + mu2), exact

    double sum = 0.0, sum2 = 0.0;
    const int trials = 100000;
    for (int i = 0; i < trials; ++i) {
        const Observation x = sample_observation(single, {3.0, 4.0}, 1.0, rng);
        sum += x.values[0];
        sum2 += x.values[0] * x.values[0];
    }
    const double mean = sum / trials;
    const double var = sum2 / trials - mean * mean;
    // X ~ N(14, 2): four standard errors on each moment.
    CHECK(std::abs(mean - 14.0) < 4.0 * std::sqrt(2.0 / trials));
    CHECK(std::abs(var - 2.0) < 4.0 * 2.0 * std::sqrt(2.0 / trials));

    // Identity design: X_i ~ N(mu_i, 1) coordinatewise.
    const Design id2 = identity_design(2);
    double m0 = 0.0, m1 = 0.0, v0 = 0.0, v1 = 0.0;
    for (int i = 0; i < trials; ++i) {
        const Observation x = sample_observation(id2, {1.0, 2.0}, 1.0, rng);
        m0 += x.values[0];
        m1 += x.values[1];
        v0 += x.values[0] * x.values[0];
        v1 += x.values[1] * x.values[1];
    }
    m0 /= trials;
    m1 /= trials;
    const double se_mean = std::sqrt(1.0 / trials);
    CHECK(std::abs(m0 - 1.0) < 4.0 * se_mean);
    CHECK(std::abs(m1 - 2.0) < 4.0 * se_mean);
    CHECK(std::abs(v0 / trials - m0 * m0 - 1.0) < 4.0 * std::sqrt(2.0 / trials));
    CHECK(std::abs(v1 / trials - m1 * m1 - 1.0) < 4.0 * std::sqrt(2.0 / trials));
}

TEST_CASE("simulate reproducibility is bitwise") {
    SimConfig cfg;
    cfg.design = core_design(3).design;
    cfg.mu = {0.5, -1.0, 2.0};
    cfg.trials = 2000;
    cfg.seed = 321;
    const SimReport a = simulate(cfg);
    const SimReport b = simulate(cfg);
    CHECK(a.empirical_mse == b.empirical_mse);
    CHECK(a.mse_standard_error == b.mse_standard_error);
    CHECK(a.per_coordinate_bias == b.per_coordinate_bias);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(a.empirical_covariance(i, j) == b.empirical_covariance(i, j));
}

TEST_CASE("simulate zero-noise collapses the error") {
    SimConfig cfg;
    cfg.design = core_design(7).design;
    cfg.mu.assign(7, 0.0);
    for (int i = 0; i < 7; ++i) cfg.mu[i] = (i + 1) / 7.0;
    cfg.trials = 100;
    cfg.seed = 9;
    cfg.zero_noise = true;
    const SimReport r = simulate(cfg);
    CHECK(r.empirical_mse <= 1e-24);
    for (double b : r.per_coordinate_bias) CHECK(std::abs(b) < 1e-12);
    CHECK(r.theoretical_mse == 0.0);
}

TEST_CASE("simulate matches the closed-form MSE on core_design(7)") {
    SimConfig cfg;
    cfg.design = core_design(7).design;
    cfg.mu.resize(7);
    for (int i = 0; i < 7; ++i) cfg.mu[i] = (i + 1) / 7.0;
    cfg.trials = 100000;
    cfg.seed = 42;
    const SimReport r = simulate(cfg);
    CHECK(r.theoretical_mse == doctest::Approx(3.0625).epsilon(1e-12));
    CHECK(std::abs(r.empirical_mse - 3.0625) < 3.0 * r.mse_standard_error);
}

TEST_CASE("simulate matches the identity-design baseline") {
    SimConfig cfg;
    cfg.design = identity_design(4);
    cfg.mu = {0.25, -1.5, 3.0, 0.0};
    cfg.trials = 100000;
    cfg.seed = 1234;
    const SimReport r = simulate(cfg);
    CHECK(r.theoretical_mse == doctest::Approx(4.0));
    CHECK(std::abs(r.empirical_mse - 4.0) < 3.0 * r.mse_standard_error);
}

TEST_CASE("per-coordinate bias stays within four standard errors") {
    Rng seeds(77);
    for (int n = 2; n <= 8; ++n) {
        std::vector<Design> designs;
        designs.push_back(identity_design(n));
        designs.push_back(complement_design(n));
        designs.push_back(individual_plus_joint(n, 0.1));
        designs.push_back(single_k_design(n, optimal_k(n)));
        designs.push_back(truncated_core_design(n).design);
        for (const Design& d : designs) {
            SimConfig cfg;
            cfg.design = d;
            cfg.mu.resize(n);
            for (int i = 0; i < n; ++i) cfg.mu[i] = (i + 1) / static_cast<double>(n);
            cfg.trials = 100000;
            cfg.seed = seeds.next_u64();
            const SimReport r = simulate(cfg);
            const Matrix cov = estimator_covariance(d);
            for (int j = 0; j < n; ++j) {
                const double se = std::sqrt(cov(j, j) / cfg.trials);
                CHECK(std::abs(r.per_coordinate_bias[j]) < 4.0 * se);
            }
        }
    }
}

TEST_CASE("empirical covariance converges to the inverse Fisher matrix") {
    // Entrywise 5-standard-error check at 10^6 trials, with the standard
    // error estimated from the per-trial products themselves.
    const Design d = core_design(3).design;
    const int n = 3;
    std::vector<double> mu = {1.0, -2.0, 0.5};
    const Matrix target = estimator_covariance(d);

    const Cholesky chol = Cholesky::factor(fisher_matrix(d));
    Rng rng(2024);
    const long long trials = 1000000;
    Matrix sum_p(n, n), sum_p2(n, n);
    for (long long t = 0; t < trials; ++t) {
        const Observation x = sample_observation(d, mu, 1.0, rng);
        const std::vector<double> est = chol.solve(bt_apply(d, x.values));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double p = (est[i] - mu[i]) * (est[j] - mu[j]);
                sum_p(i, j) += p;
                sum_p2(i, j) += p * p;
            }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double mean = sum_p(i, j) / trials;
            const double var = sum_p2(i, j) / trials - mean * mean;
            const double se = std::sqrt(var / trials);
            CHECK(std::abs(mean - target(i, j)) < 5.0 * se);
        }
}

TEST_CASE("doubling the noise variance doubles the MSE") {
    SimConfig cfg;
    cfg.design = identity_design(4);
    cfg.mu = {1.0, 2.0, 3.0, 4.0};
    cfg.trials = 100000;
    cfg.seed = 31;
    const SimReport r1 = simulate(cfg);
    cfg.noise_variance = 2.0;
    const SimReport r2 = simulate(cfg);
    CHECK(r2.theoretical_mse == doctest::Approx(2.0 * r1.theoretical_mse).epsilon(1e-12));
    const double ratio = r2.empirical_mse / r1.empirical_mse;
    const double rel_se = (r1.mse_standard_error / r1.empirical_mse) +
                          (r2.mse_standard_error / r2.empirical_mse);
    CHECK(std::abs(ratio - 2.0) < 2.0 * 3.0 * rel_se);
}

TEST_CASE("invariance_check across parameter scales") {
    const InvarianceReport small = invariance_check(
        identity_design(3), {{0.0, 0.0, 0.0}, {10.0, -10.0, 5.0}}, 50000, 17);
    CHECK(small.consistent);

    const InvarianceReport core = invariance_check(
        core_design(3).design, {{0.0, 0.0, 0.0}, {500.0, -300.0, 1000.0}}, 50000, 18);
    CHECK(core.consistent);

    CHECK_THROWS_AS(invariance_check(identity_design(2), {{0, 0}, {1, 1}}, 50, 1),
                    InvalidArgumentError);
    CHECK_THROWS_AS(invariance_check(identity_design(2), {{1, 1}, {1, 1}}, 500, 1),
                    InvalidArgumentError);
}

TEST_CASE("simulate validates its configuration") {
    SimConfig cfg;
    cfg.design = identity_design(2);
    cfg.mu = {1.0};
    CHECK_THROWS_AS(simulate(cfg), InvalidArgumentError);
    cfg.mu = {1.0, 2.0};
    cfg.trials = 0;
    CHECK_THROWS_AS(simulate(cfg), InvalidArgumentError);
    cfg.trials = 10;
    cfg.noise_variance = 0.0;
    CHECK_THROWS_AS(simulate(cfg), InvalidArgumentError);

    SimConfig singular;
    singular.design.n_params = 2;
    singular.design.rows = {{1, 1}};
    singular.design.times = {2.0};
    singular.mu = {0.0, 0.0};
    singular.trials = 10;
    CHECK_THROWS_AS(simulate(singular), SingularMatrixError);
}
