#pragma once

#include <cstdint>
#include <vector>

#include "stunted/stunted_cp.hpp"

namespace stunted {

// beta = (p-1)(p^k - 1) and beta_hat = p^k(p-1), the smallest multiple of p
// strictly greater than beta. beta is also the width (in cell indices) of the
// truncation margin: a block chain spans at most (p-1)(p^k-1) indices, so
// blocks living entirely below top - beta cannot be truncation artifacts.
struct BetaConstants {
    std::uint32_t p, k;
    long long beta;
    long long beta_hat;
};

BetaConstants beta_constants(std::uint32_t p, std::uint32_t k);

// One chain block of the P_k action on a cell window: consecutive basis
// vectors b_i, b_{i-shift}, ... joined by nonzero coefficients. A block is
// flagged boundary, and kept out of the free/finite classification, when the
// top truncation cut its chain: its head would receive a nonzero coefficient
// from a cell above the window. Such heads live within beta indices of the
// top, so blocks below the stable margin are never flagged.
struct ChainBlock {
    std::vector<long long> indices;  // descending: generator first, socle last
    bool boundary;

    int size() const { return static_cast<int>(indices.size()); }
    long long generator_index() const { return indices.front(); }
    long long socle_index() const { return indices.back(); }
};

struct SplittingReport {
    PkParams params;
    long long c;    // bottom cell
    long long top;  // truncation
    JordanType jordan;
    std::vector<ChainBlock> blocks;
    std::vector<long long> free_generator_degrees;  // stable size-p blocks
    std::vector<long long> free_socle_degrees;      // bottom degrees of stable free blocks
    std::vector<long long> finite_socle_degrees;    // stable blocks of size < p
    std::vector<int> finite_block_sizes;
    std::vector<int> boundary_block_sizes;
    long long stable_top_index;  // top - beta

    long long free_rank() const { return static_cast<long long>(free_generator_degrees.size()); }
};

// Jordan type and block structure of the P_k action on the homology of the
// cell window [c, top], with boundary blocks flagged per the margin rule.
SplittingReport decompose_stunted(const PkParams& params, long long c, long long top);

// Checks that every predicted free generator b_{pi} -- pi > beta - c, chain
// contained in the window, generator below the stable margin -- generates a
// length-p chain: applying the operator p-1 times gives a nonzero vector, and
// the images are jointly linearly independent.
bool verify_free_generators(const PkParams& params, long long c, long long top);

struct FiniteSupportReport {
    long long max_degree;  // largest degree in any stable finite block
    bool finite_part_empty;
    long long skeleton_degree;      // 2(c + beta_hat - 1)
    long long skeleton_degree_alt;  // 2(c + beta_hat)
    bool within_skeleton;
    bool within_skeleton_alt;
};

// Requires p | c. Reports the top degree of the finite part and whether it
// fits inside the expected skeleton; both candidate thresholds are reported
// since they differ by one cell.
FiniteSupportReport finite_part_support(const PkParams& params, long long c, long long top);

// True iff the degree shift b_i -> b_{i+c} from the window [0, top] to
// [c, top + c] intertwines the two P_k actions; holds exactly when p | c.
bool thom_shift_linearity(const PkParams& params, long long c, long long top);

// Models the coskeletal collapse from the window [s, top] to [s + beta_hat, top]
// (b_i -> b_i when i >= s + beta_hat, else 0) and checks by rank computation
// that every stable free-block socle of the target lies in the image of the
// source's stable free part.
bool tate_transition_surjective(const PkParams& params, long long s, long long top);

// Bottom degrees of the stable free blocks of the (p, k) = (2, 1), c = 0
// decomposition; these follow the pattern {4j - 2 : j >= 1}, with a single
// finite summand in degree 0.
std::vector<long long> ko_pattern(long long top);

}  // namespace stunted
