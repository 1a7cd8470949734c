#include "gmux/hadamard.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "gmux/errors.hpp"

namespace gmux {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

/// Quadratic-residue character chi on GF(q), q an odd prime:
/// chi(0) = 0, chi(square) = 1, chi(non-square) = -1.
std::vector<int> legendre_table(int q) {
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (int x = 1; x < q; ++x) chi[(x * x) % q] = 1;
    return chi;
}

HadamardMatrix sylvester_double(const HadamardMatrix& h) {
    const int n = h.order();
    HadamardMatrix out(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out(i, j) = h(i, j);
            out(i, j + n) = h(i, j);
            out(i + n, j) = h(i, j);
            out(i + n, j + n) = static_cast<std::int8_t>(-h(i, j));
        }
    return out;
}

HadamardMatrix kronecker(const HadamardMatrix& a, const HadamardMatrix& b) {
    const int na = a.order(), nb = b.order();
    HadamardMatrix out(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int p = 0; p < nb; ++p)
                for (int q = 0; q < nb; ++q)
                    out(i * nb + p, j * nb + q) = static_cast<std::int8_t>(a(i, j) * b(p, q));
    return out;
}

/// Paley I, q prime, q = 3 (mod 4): H = I + S of order q+1 where S is
/// the skew bordered Jacobsthal matrix.
HadamardMatrix paley_one(int q) {
    const std::vector<int> chi = legendre_table(q);
    const int n = q + 1;
    HadamardMatrix h(n);
    for (int j = 1; j < n; ++j) {
        h(0, j) = 1;
        h(j, 0) = -1;
    }
    h(0, 0) = 1;  // I + S, S has zero diagonal
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            if (i == j) {
                h(i, j) = 1;
            } else {
                const int diff = ((i - j) % q + q) % q;
                h(i, j) = static_cast<std::int8_t>(chi[diff]);
            }
        }
    return h;
}

/// Paley II, q prime, q = 1 (mod 4): order 2(q+1), built by expanding
/// the symmetric conference matrix C entrywise with
///   0 -> [[1,-1],[-1,-1]],  +1 -> [[1,1],[1,-1]],  -1 -> [[-1,-1],[-1,1]].
HadamardMatrix paley_two(int q) {
    const std::vector<int> chi = legendre_table(q);
    const int m = q + 1;
    std::vector<std::vector<int>> conf(m, std::vector<int>(m, 0));
    for (int j = 1; j < m; ++j) {
        conf[0][j] = 1;
        conf[j][0] = 1;
    }
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j)
            if (i != j) conf[i][j] = chi[((i - j) % q + q) % q];

    HadamardMatrix h(2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int a, b, c, d;
            if (i == j) {
                a = 1; b = -1; c = -1; d = -1;
            } else if (conf[i][j] == 1) {
                a = 1; b = 1; c = 1; d = -1;
            } else if (conf[i][j] == -1) {
                a = -1; b = -1; c = -1; d = 1;
            } else {
                a = 1; b = -1; c = -1; d = -1;
            }
            h(2 * i, 2 * j) = static_cast<std::int8_t>(a);
            h(2 * i, 2 * j + 1) = static_cast<std::int8_t>(b);
            h(2 * i + 1, 2 * j) = static_cast<std::int8_t>(c);
            h(2 * i + 1, 2 * j + 1) = static_cast<std::int8_t>(d);
        }
    return h;
}

std::optional<HadamardMatrix> try_build(int order);

bool reachable(int order) { return try_build(order).has_value(); }

std::optional<HadamardMatrix> try_build(int order) {
    if (order == 1) {
        HadamardMatrix h(1);
        h(0, 0) = 1;
        return h;
    }
    if (order == 2) {
        HadamardMatrix h(2);
        h(1, 1) = -1;
        return h;
    }
    if (order < 1 || order % 4 != 0) return std::nullopt;

    if (order % 2 == 0) {
        if (auto half = try_build(order / 2)) return sylvester_double(*half);
    }
    if (is_prime(order - 1) && (order - 1) % 4 == 3) return paley_one(order - 1);
    if (order % 2 == 0) {
        const int q = order / 2 - 1;
        if (is_prime(q) && q % 4 == 1) return paley_two(q);
    }
    for (int a = 4; a * a <= order; a += 4) {
        if (order % a != 0) continue;
        const int b = order / a;
        if (b % 4 != 0) continue;
        if (reachable(a) && reachable(b)) return kronecker(*try_build(a), *try_build(b));
    }
    return std::nullopt;
}

}  // namespace

bool is_hadamard(const HadamardMatrix& h) {
    const int n = h.order();
    if (n < 1) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (h(i, j) != 1 && h(i, j) != -1) return false;
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            long long dot = 0;
            for (int i = 0; i < n; ++i) dot += static_cast<long long>(h(i, a)) * h(i, b);
            if (dot != (a == b ? n : 0)) return false;
        }
    return true;
}

HadamardMatrix hadamard(int order) {
    static std::map<int, HadamardMatrix> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(order);
        if (it != memo.end()) return it->second;
    }

    std::optional<HadamardMatrix> h = try_build(order);
    if (!h) {
        std::string msg = "no Hadamard construction for order " + std::to_string(order);
        if (order < 1 || (order > 2 && order % 4 != 0)) {
            msg += ": order must be 1, 2, or a multiple of 4";
        } else {
            msg += ": not reachable via Sylvester doubling, prime-field Paley I/II, or "
                   "Kronecker products (the gaps below 128 are 52, 92, 100 and 116, "
                   "which need prime-power Paley fields or Williamson-type constructions)";
        }
        throw UnsupportedOrderError(msg);
    }
    if (!is_hadamard(*h))
        throw std::logic_error("constructed matrix of order " + std::to_string(order) +
                               " failed the Hadamard check");

    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo.emplace(order, std::move(*h)).first->second;
}

HadamardMatrix normalize(const HadamardMatrix& h) {
    const int n = h.order();
    HadamardMatrix out = h;
    for (int i = 0; i < n; ++i) {
        if (out(i, 0) == -1)
            for (int j = 0; j < n; ++j) out(i, j) = static_cast<std::int8_t>(-out(i, j));
    }
    for (int j = 0; j < n; ++j) {
        if (out(0, j) == -1)
            for (int i = 0; i < n; ++i) out(i, j) = static_cast<std::int8_t>(-out(i, j));
    }
    return out;
}

CoreDesign core_design(int n) {
    if (n < 1) throw InvalidArgumentError("core_design needs n >= 1");
    const HadamardMatrix h = normalize(hadamard(n + 1));

    CoreDesign core;
    core.source_order = n + 1;
    core.design.n_params = n;
    core.design.rows.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            core.design.rows[i][j] = h(i + 1, j + 1) == -1 ? 1 : 0;
    core.design.times.assign(n, 1.0);
    return core;
}

CoreDesign truncated_core_design(int n) {
    if (n < 2) throw InvalidArgumentError("truncated_core_design needs n >= 2");
    const int order = ((n + 1 + 3) / 4) * 4;  // next multiple of 4 at or above n+1
    CoreDesign full = core_design(order - 1);

    CoreDesign out;
    out.source_order = order;
    out.design.n_params = n;
    const int m = order - 1;  // row count
    out.design.rows.reserve(m);
    for (int i = 0; i < m; ++i)
        out.design.rows.emplace_back(full.design.rows[i].begin(),
                                     full.design.rows[i].begin() + n);
    out.design.times.assign(m, static_cast<double>(n) / static_cast<double>(m));
    return out;
}

std::vector<std::vector<long long>> gram_integer(const Design& design) {
    const int n = design.n_params;
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
    for (const auto& row : design.rows)
        for (int i = 0; i < n; ++i) {
            if (!row[i]) continue;
            for (int j = i; j < n; ++j)
                if (row[j]) ++g[i][j];
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g[j][i] = g[i][j];
    return g;
}

}  // namespace gmux
