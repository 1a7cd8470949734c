#include "gmux/simulate.hpp"

#include <cmath>
#include <numbers>

#include "gmux/errors.hpp"

namespace gmux {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t sm = seed;
    const std::uint64_t a = splitmix64(sm);
    sm = index ^ 0xD1B54A32D192ED03ULL;
    const std::uint64_t b = splitmix64(sm);
    return Rng(a ^ rotl(b, 17));
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps log finite
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

Observation sample_observation(const Design& design, const std::vector<double>& mu,
                               double noise_variance, Rng& rng, bool zero_noise) {
    const int m = design.row_count();
    Observation x;
    x.values.resize(m);
    for (int i = 0; i < m; ++i) {
        const auto& row = design.rows[i];
        double dot = 0.0;
        for (int j = 0; j < design.n_params; ++j)
            if (row[j]) dot += mu[j];
        const double t = design.times[i];
        double v = t * dot;
        if (!zero_noise) v += std::sqrt(noise_variance * t) * rng.next_gaussian();
        x.values[i] = v;
    }
    return x;
}

SimReport simulate(const SimConfig& config) {
    require_valid(config.design);
    const int n = config.design.n_params;
    if (static_cast<int>(config.mu.size()) != n)
        throw InvalidArgumentError("mu must have length N");
    if (config.trials < 1) throw InvalidArgumentError("trials must be at least 1");
    if (!(config.noise_variance > 0.0))
        throw InvalidArgumentError("noise_variance must be positive");

    const FisherInfo info = fisher_information(config.design);
    const Cholesky chol = Cholesky::factor(info.matrix);
    const double sigma2 = config.zero_noise ? 0.0 : config.noise_variance;

    Rng rng(config.seed);

    std::vector<double> sum_mu_hat(n, 0.0);
    Matrix sum_outer(n, n);
    std::vector<double> bias_sum(n, 0.0);
    double sum_sq = 0.0, sum_sq2 = 0.0;

    for (long long trial = 0; trial < config.trials; ++trial) {
        const Observation x = sample_observation(config.design, config.mu,
                                                 config.noise_variance, rng,
                                                 config.zero_noise);
        const std::vector<double> mu_hat = chol.solve(bt_apply(config.design, x.values));

        double sq = 0.0;
        for (int j = 0; j < n; ++j) {
            const double err = mu_hat[j] - config.mu[j];
            sq += err * err;
            bias_sum[j] += err;
            sum_mu_hat[j] += mu_hat[j];
            for (int l = j; l < n; ++l) sum_outer(j, l) += mu_hat[j] * mu_hat[l];
        }
        sum_sq += sq;
        sum_sq2 += sq * sq;
    }

    const double t = static_cast<double>(config.trials);
    SimReport report;
    report.trials = config.trials;
    report.seed = config.seed;
    report.theoretical_mse = trace_inverse(info) * sigma2;
    report.empirical_mse = sum_sq / t;
    if (config.trials > 1) {
        const double var_sq = (sum_sq2 - t * report.empirical_mse * report.empirical_mse) / (t - 1.0);
        report.mse_standard_error = std::sqrt(std::max(var_sq, 0.0) / t);
    }
    report.per_coordinate_bias.resize(n);
    for (int j = 0; j < n; ++j) report.per_coordinate_bias[j] = bias_sum[j] / t;

    report.empirical_covariance = Matrix(n, n);
    if (config.trials > 1) {
        for (int j = 0; j < n; ++j)
            for (int l = j; l < n; ++l) {
                const double cov =
                    (sum_outer(j, l) - sum_mu_hat[j] * sum_mu_hat[l] / t) / (t - 1.0);
                report.empirical_covariance(j, l) = cov;
                report.empirical_covariance(l, j) = cov;
            }
    }
    return report;
}

InvarianceReport invariance_check(const Design& design,
                                  const std::vector<std::vector<double>>& mus,
                                  long long trials, std::uint64_t seed) {
    if (mus.size() < 2)
        throw InvalidArgumentError("invariance_check needs at least 2 mu vectors");
    bool any_distinct = false;
    for (std::size_t i = 1; i < mus.size(); ++i) any_distinct = any_distinct || mus[i] != mus[0];
    if (!any_distinct)
        throw InvalidArgumentError("invariance_check needs distinct mu vectors");
    if (trials < 100)
        throw InvalidArgumentError("invariance_check needs trials >= 100 for a usable "
                                   "standard error");

    InvarianceReport report;
    for (std::size_t i = 0; i < mus.size(); ++i) {
        SimConfig cfg;
        cfg.design = design;
        cfg.mu = mus[i];
        cfg.trials = trials;
        cfg.seed = Rng::substream(seed, i).next_u64();
        const SimReport r = simulate(cfg);
        report.mses.push_back(r.empirical_mse);
        report.standard_errors.push_back(r.mse_standard_error);
    }
    report.consistent = true;
    for (std::size_t i = 0; i < report.mses.size(); ++i)
        for (std::size_t j = i + 1; j < report.mses.size(); ++j) {
            const double joint = std::sqrt(report.standard_errors[i] * report.standard_errors[i] +
                                           report.standard_errors[j] * report.standard_errors[j]);
            if (std::abs(report.mses[i] - report.mses[j]) > 3.0 * joint)
                report.consistent = false;
        }
    return report;
}

}  // namespace gmux
