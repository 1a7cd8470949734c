#ifndef GMUX_HADAMARD_HPP
#define GMUX_HADAMARD_HPP

#include <cstdint>
#include <vector>

#include "gmux/model.hpp"

namespace gmux {

/// Square +/-1 matrix. Outputs of hadamard() are verified to satisfy
/// H^T H = n I in integer arithmetic; raw instances (e.g. for
/// is_hadamard probes) carry no such guarantee.
class HadamardMatrix {
public:
    HadamardMatrix() = default;
    explicit HadamardMatrix(int order)
        : order_(order), e_(static_cast<std::size_t>(order) * order, 1) {}

    int order() const { return order_; }

    std::int8_t& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * order_ + j]; }
    std::int8_t operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * order_ + j]; }

private:
    int order_ = 0;
    std::vector<std::int8_t> e_;
};

/// True iff H^T H = n I exactly (integer arithmetic).
bool is_hadamard(const HadamardMatrix& h);

/// Builds a verified Hadamard matrix of the requested order out of
/// Sylvester doubling, Paley I (prime q = order-1, q = 3 mod 4),
/// Paley II (prime q = order/2 - 1, q = 1 mod 4) and Kronecker
/// products of reachable factors. Results are memoized per order.
/// Throws UnsupportedOrderError for orders outside the repertoire
/// (92 is the smallest multiple of 4 this planner cannot reach).
HadamardMatrix hadamard(int order);

/// Sign-flips rows then columns so row 0 and column 0 are all ones.
HadamardMatrix normalize(const HadamardMatrix& h);

struct CoreDesign {
    Design design;
    int source_order = 0;
};

/// Drops the first row and column of the normalized order-(n+1)
/// Hadamard matrix and maps -1 -> 1, +1 -> 0; unit times. The
/// resulting B is square with B^T B = ((n+1)/4)(I + J).
CoreDesign core_design(int n);

/// Core design of size n' = (next multiple of 4 at or above n+1) - 1
/// with the rightmost n'-n columns removed; times all n/n'. Identical
/// to core_design(n) when n+1 is already a multiple of 4.
CoreDesign truncated_core_design(int n);

/// Exact integer Gram matrix B^T B of a design's rows.
std::vector<std::vector<long long>> gram_integer(const Design& design);

}  // namespace gmux

#endif
