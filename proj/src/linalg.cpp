#include "gmux/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "gmux/errors.hpp"

namespace gmux {

double max_abs_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

bool is_symmetric(const Matrix& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    double scale = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) scale = std::max(scale, std::abs(m(i, j)));
    const double tol = rel_tol * std::max(scale, 1.0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol) return false;
    return true;
}

Cholesky Cholesky::factor(const Matrix& spd) {
    const int n = spd.rows();
    if (n != spd.cols()) throw InvalidArgumentError("Cholesky needs a square matrix");

    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, spd(i, i));
    const double pivot_floor = 1e-12 * max_diag;

    Matrix l(n, n);
    for (int j = 0; j < n; ++j) {
        double d = spd(j, j);
        for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > pivot_floor)) {
            throw SingularMatrixError(
                "pivot " + std::to_string(d) + " at column " + std::to_string(j) +
                " below 1e-12 * max diagonal; design is not identifiable (rank(B) < N)");
        }
        l(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = spd(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / l(j, j);
        }
    }
    return Cholesky(std::move(l));
}

std::vector<double> Cholesky::solve(const std::vector<double>& rhs) const {
    const int n = l_.rows();
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        double s = rhs[i];
        for (int k = 0; k < i; ++k) s -= l_(i, k) * y[k];
        y[i] = s / l_(i, i);
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= l_(k, i) * x[k];
        x[i] = s / l_(i, i);
    }
    return x;
}

double Cholesky::trace_inverse() const {
    // Tr A^{-1} = sum_i || L^{-1} e_i ||^2. The forward solve for e_i
    // only touches rows >= i.
    const int n = l_.rows();
    std::vector<double> y(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int r = i; r < n; ++r) {
            double s = (r == i) ? 1.0 : 0.0;
            for (int k = i; k < r; ++k) s -= l_(r, k) * y[k];
            y[r] = s / l_(r, r);
            total += y[r] * y[r];
        }
    }
    return total;
}

Matrix Cholesky::inverse() const {
    const int n = l_.rows();
    Matrix inv(n, n);
    std::vector<double> e(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        std::vector<double> col = solve(e);
        e[j] = 0.0;
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = v;
            inv(j, i) = v;
        }
    return inv;
}

std::vector<double> jacobi_eigenvalues(Matrix a, int max_sweeps) {
    const int n = a.rows();
    if (n != a.cols()) throw InvalidArgumentError("jacobi_eigenvalues needs a square matrix");
    if (n == 1) return {a(0, 0)};

    auto off_norm2 = [&] {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        return s;
    };
    double diag2 = 0.0;
    for (int p = 0; p < n; ++p) diag2 += a(p, p) * a(p, p);
    const double stop = 1e-28 * std::max(diag2, 1.0);

    for (int sweep = 0; sweep < max_sweeps && off_norm2() > stop; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p), arq = a(r, q);
                    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

int binary_rank(const std::vector<std::vector<std::uint8_t>>& rows, int n) {
    if (n <= 0) return 0;
    Matrix gram(n, n);
    for (const auto& row : rows) {
        std::vector<int> ones;
        for (int j = 0; j < n; ++j)
            if (row[j]) ones.push_back(j);
        for (int a : ones)
            for (int b : ones) gram(a, b) += 1.0;
    }
    std::vector<double> ev = jacobi_eigenvalues(gram);
    const double lambda_max = std::max(ev.back(), 1.0);
    int rank = 0;
    for (double v : ev)
        if (v > 1e-9 * lambda_max) ++rank;
    return rank;
}

}  // namespace gmux
