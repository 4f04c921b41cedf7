#pragma once

#include <cstdint>

#include "stunted/nilpotent.hpp"

namespace stunted {

// Parameters of the operator P_k at the prime p: it lowers the cell index by
// shift = p^k - 1 (homological degree by 2(p^k - 1)) and generates a
// truncated polynomial algebra with P_k^p = 0. The associated height is
// n = k(p - 1).
struct PkParams {
    PkParams(std::uint32_t prime, std::uint32_t kk);

    std::uint32_t p;
    std::uint32_t k;

    std::uint32_t height() const { return k * (p - 1); }
    long long shift() const { return ipow(p, k) - 1; }
};

// Graded basis b_bot..b_top of the homology of the stunted projective space
// with cells in degrees 2*bot..2*top; degree(b_i) = 2i. Negative bottom cells
// are Thom spectra of negative multiples of the tautological bundle.
struct StuntedBasis {
    StuntedBasis(long long bottom, long long topc);

    long long bot;
    long long top;

    std::size_t dim() const { return static_cast<std::size_t>(top - bot + 1); }
    long long index_at(std::size_t pos) const { return bot + static_cast<long long>(pos); }
    long long degree_at(std::size_t pos) const { return 2 * index_at(pos); }
};

// The homology action b_i -> (i - p^k + 1) b_{i - p^k + 1} mod p, zero when
// the target drops below the bottom cell.
NilOperator pk_homology_operator(const PkParams& params, const StuntedBasis& basis);

// Coefficient of x^{i + p^k - 1} u_c in P_k(x^i u_c), namely (i + c) mod p.
std::uint32_t pk_cohomology_coefficient(const PkParams& params, long long c, long long i);

// True iff the homology matrix is the transpose of the cohomology action
// matrix assembled from pk_cohomology_coefficient over the same cell range.
bool duality_check(const PkParams& params, const StuntedBasis& basis);

}  // namespace stunted
