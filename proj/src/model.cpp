#include "gmux/model.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "gmux/errors.hpp"

namespace gmux {

namespace {

constexpr double kTimeBudgetRelTol = 1e-12;
constexpr double kStructureAbsTol = 1e-12;

std::vector<std::string> collect_violations(const Design& d) {
    std::vector<std::string> v;
    const int n = d.n_params;
    if (n < 1) v.push_back("n_params must be positive");
    if (d.rows.empty()) v.push_back("design has no rows");
    if (d.times.size() != d.rows.size())
        v.push_back("times length does not match row count");

    bool shape_ok = n >= 1;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
        const auto& row = d.rows[i];
        if (static_cast<int>(row.size()) != n) {
            v.push_back("row " + std::to_string(i) + " has wrong length");
            shape_ok = false;
            continue;
        }
        bool any = false;
        for (std::uint8_t b : row) {
            if (b > 1) {
                v.push_back("row " + std::to_string(i) + " has a non-binary entry");
                break;
            }
            any = any || b;
        }
        if (!any) v.push_back("row " + std::to_string(i) + " is all zeros");
    }

    if (shape_ok && d.rows.size() > 1) {
        std::vector<std::size_t> order(d.rows.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return d.rows[a] < d.rows[b];
        });
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (d.rows[order[i - 1]] == d.rows[order[i]]) {
                v.push_back("duplicate switch configuration (rows " +
                            std::to_string(order[i - 1]) + " and " +
                            std::to_string(order[i]) + ")");
                break;
            }
        }
    }

    double total = 0.0;
    for (std::size_t i = 0; i < d.times.size(); ++i) {
        if (!(d.times[i] > 0.0)) {
            v.push_back("time " + std::to_string(i) + " is not positive");
        }
        total += d.times[i];
    }
    if (d.times.size() == d.rows.size() && n >= 1 &&
        std::abs(total - n) > kTimeBudgetRelTol * n) {
        v.push_back("time budget: sum(times) = " + std::to_string(total) +
                    ", expected " + std::to_string(n));
    }
    return v;
}

}  // namespace

std::vector<double> Spectrum::expand() const {
    std::vector<double> out;
    for (const auto& e : entries)
        out.insert(out.end(), e.multiplicity, e.value);
    std::sort(out.begin(), out.end());
    return out;
}

void require_valid(const Design& design) {
    std::vector<std::string> v = collect_violations(design);
    if (!v.empty()) {
        std::string msg = v.front();
        for (std::size_t i = 1; i < v.size(); ++i) msg += "; " + v[i];
        throw InvalidDesignError(msg);
    }
}

ValidationReport validate_design(const Design& design) {
    ValidationReport report;
    report.violations = collect_violations(design);

    bool shapes_ok = design.n_params >= 1;
    for (const auto& row : design.rows)
        shapes_ok = shapes_ok && static_cast<int>(row.size()) == design.n_params;
    if (shapes_ok && !design.rows.empty()) {
        report.rank = binary_rank(design.rows, design.n_params);
        report.identifiable = report.rank == design.n_params;
    }
    return report;
}

Matrix fisher_matrix(const Design& design) {
    const int n = design.n_params;
    Matrix c(n, n);
    std::vector<int> ones;

    bool equal_times = !design.times.empty();
    for (double t : design.times) equal_times = equal_times && t == design.times.front();

    if (equal_times) {
        // One rounding per entry: integer row counts scaled by the
        // common time, so equal-time designs keep exact integer cells.
        std::vector<long long> counts(static_cast<std::size_t>(n) * n, 0);
        for (const auto& row : design.rows) {
            ones.clear();
            for (int j = 0; j < n; ++j)
                if (row[j]) ones.push_back(j);
            for (std::size_t a = 0; a < ones.size(); ++a)
                for (std::size_t b = a; b < ones.size(); ++b)
                    ++counts[static_cast<std::size_t>(ones[a]) * n + ones[b]];
        }
        const double t = design.times.front();
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = static_cast<double>(counts[static_cast<std::size_t>(i) * n + j]) * t;
                c(i, j) = v;
                c(j, i) = v;
            }
        return c;
    }

    for (std::size_t i = 0; i < design.rows.size(); ++i) {
        const auto& row = design.rows[i];
        const double t = design.times[i];
        ones.clear();
        for (int j = 0; j < n; ++j)
            if (row[j]) ones.push_back(j);
        for (std::size_t a = 0; a < ones.size(); ++a) {
            c(ones[a], ones[a]) += t;
            for (std::size_t b = a + 1; b < ones.size(); ++b) {
                c(ones[a], ones[b]) += t;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c(j, i) = c(i, j);
    return c;
}

FisherInfo fisher_information(const Design& design) {
    require_valid(design);
    FisherInfo info;
    info.matrix = fisher_matrix(design);

    const int n = design.n_params;
    const Matrix& c = info.matrix;
    const double a = c(0, 0);
    bool structured = true;
    for (int i = 1; i < n && structured; ++i)
        structured = std::abs(c(i, i) - a) <= kStructureAbsTol;
    double b = 0.0;
    if (n > 1) {
        b = c(0, 1);
        for (int i = 0; i < n && structured; ++i)
            for (int j = i + 1; j < n && structured; ++j)
                structured = std::abs(c(i, j) - b) <= kStructureAbsTol;
    }
    if (structured) info.structure = std::make_pair(a, b);
    return info;
}

double trace_inverse(const FisherInfo& c) {
    const int n = c.dim();
    if (c.structure) {
        const auto [a, b] = *c.structure;
        const double lambda_small = a - b;
        const double lambda_big = a + (n - 1) * b;
        const double floor = 1e-12 * a;
        if (!(lambda_small > floor) || !(lambda_big > floor)) {
            throw SingularMatrixError(
                "structured Fisher matrix has a near-zero eigenvalue; design is not identifiable");
        }
        const double value = (n - 1) / lambda_small + 1.0 / lambda_big;
#ifndef NDEBUG
        // Factorization agreement degrades with conditioning; a throw
        // here means the pivot floor disagreed at the boundary, which
        // the closed form already adjudicated.
        try {
            const double dense = Cholesky::factor(c.matrix).trace_inverse();
            const double cond = std::max(lambda_big, lambda_small) /
                                std::min(lambda_big, lambda_small);
            const double tol = (1e-9 + cond * 1e-13) * std::max(1.0, std::abs(dense));
            assert(std::abs(value - dense) <= tol);
        } catch (const SingularMatrixError&) {
        }
#endif
        return value;
    }
    return Cholesky::factor(c.matrix).trace_inverse();
}

std::vector<double> ml_estimate(const Design& design, const Observation& x) {
    require_valid(design);
    if (x.values.size() != design.rows.size())
        throw InvalidArgumentError("observation length " + std::to_string(x.values.size()) +
                                   " does not match design row count " +
                                   std::to_string(design.rows.size()));
    const Matrix c = fisher_matrix(design);
    return Cholesky::factor(c).solve(bt_apply(design, x.values));
}

Matrix estimator_covariance(const Design& design) {
    require_valid(design);
    return Cholesky::factor(fisher_matrix(design)).inverse();
}

std::vector<double> bt_apply(const Design& design, const std::vector<double>& x) {
    const int n = design.n_params;
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < design.rows.size(); ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        const auto& row = design.rows[i];
        for (int j = 0; j < n; ++j)
            if (row[j]) out[j] += xi;
    }
    return out;
}

Spectrum spectrum_ai_bj(double a, double b, int n) {
    if (n < 1) throw InvalidArgumentError("spectrum_ai_bj needs n >= 1");
    Spectrum s;
    const double big = a + (n - 1) * b;
    if (n == 1) {
        s.entries.push_back({big, 1});
        return s;
    }
    const double small = a - b;
    if (small == big) {
        s.entries.push_back({small, n});
        return s;
    }
    if (small < big) {
        s.entries.push_back({small, n - 1});
        s.entries.push_back({big, 1});
    } else {
        s.entries.push_back({big, 1});
        s.entries.push_back({small, n - 1});
    }
    return s;
}

}  // namespace gmux
