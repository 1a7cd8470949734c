#ifndef GMUX_MODEL_HPP
#define GMUX_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmux/linalg.hpp"

namespace gmux {

/// Switch schedule: binary rows b_i (one per observation segment) and
/// per-row observation times t_i with Tr T = N. Immutable by convention
/// once built; every operation takes it by const reference.
struct Design {
    int n_params = 0;                                // N
    std::vector<std::vector<std::uint8_t>> rows;     // M x N, entries 0/1
    std::vector<double> times;                       // M positive reals, sum N

    int row_count() const { return static_cast<int>(rows.size()); }
};

/// C = B^T T B with an optional (a, b) tag when C is exactly of the
/// form (a-b)I + bJ as stored.
struct FisherInfo {
    Matrix matrix;
    std::optional<std::pair<double, double>> structure;

    int dim() const { return matrix.rows(); }
};

struct SpectrumEntry {
    double value = 0.0;
    int multiplicity = 0;
};

/// Eigenvalue multiset, ascending, multiplicities summing to N.
struct Spectrum {
    std::vector<SpectrumEntry> entries;

    int total_multiplicity() const {
        int m = 0;
        for (const auto& e : entries) m += e.multiplicity;
        return m;
    }
    /// Expanded to a sorted vector of length N.
    std::vector<double> expand() const;
};

struct Observation {
    std::vector<double> values;  // X_1 .. X_M
};

struct ValidationReport {
    std::vector<std::string> violations;
    int rank = 0;
    bool identifiable = false;

    bool valid() const { return violations.empty(); }
};

FisherInfo fisher_information(const Design& design);

/// Tr C^{-1} via Cholesky plus N triangular solves; uses the closed
/// form (N-1)/(a-b) + 1/(a+(N-1)b) when the structure tag is present
/// (cross-checked against the factorization path in debug builds).
/// Throws SingularMatrixError for unidentifiable designs.
double trace_inverse(const FisherInfo& c);

/// (B^T T B)^{-1} B^T x by factorization solve.
std::vector<double> ml_estimate(const Design& design, const Observation& x);

/// C^{-1}; its trace matches trace_inverse.
Matrix estimator_covariance(const Design& design);

/// Eigenvalues of (a-b)I + bJ_n: {a-b (n-1 times), a+(n-1)b (once)},
/// merged when equal.
Spectrum spectrum_ai_bj(double a, double b, int n);

ValidationReport validate_design(const Design& design);

/// Throws InvalidDesignError when the design violates its invariants
/// (used as the precondition gate by the operations above).
void require_valid(const Design& design);

/// B^T x for an observation of matching length.
std::vector<double> bt_apply(const Design& design, const std::vector<double>& x);

/// Dense C = B^T T B without the structure scan.
Matrix fisher_matrix(const Design& design);

}  // namespace gmux

#endif
