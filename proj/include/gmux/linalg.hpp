#ifndef GMUX_LINALG_HPP
#define GMUX_LINALG_HPP

#include <cstdint>
#include <vector>

namespace gmux {

/// Dense row-major matrix of doubles. Sized for the small symmetric
/// systems this library works with (N up to a few hundred).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& data() const { return a_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_symmetric(const Matrix& m, double rel_tol = 1e-12);

/// Lower-triangular Cholesky factor of a symmetric positive-definite
/// matrix. factor() rejects pivots below 1e-12 times the largest
/// diagonal entry of the input, which is how rank-deficient designs
/// surface as singular-matrix errors.
class Cholesky {
public:
    static Cholesky factor(const Matrix& spd);

    std::vector<double> solve(const std::vector<double>& rhs) const;

    /// Tr A^{-1} as the sum of squared norms of the n forward-solve
    /// columns L^{-1} e_i; never forms the inverse.
    double trace_inverse() const;

    /// A^{-1}, column by column from unit right-hand sides, symmetrized.
    Matrix inverse() const;

    int size() const { return l_.rows(); }

private:
    explicit Cholesky(Matrix l) : l_(std::move(l)) {}
    Matrix l_;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// returned sorted ascending.
std::vector<double> jacobi_eigenvalues(Matrix a, int max_sweeps = 100);

/// Real rank of a 0/1 matrix given as rows of length n, via the
/// eigenvalues of its Gram matrix.
int binary_rank(const std::vector<std::vector<std::uint8_t>>& rows, int n);

}  // namespace gmux

#endif
