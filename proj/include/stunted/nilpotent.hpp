#pragma once

#include <cstdint>
#include <vector>

#include "stunted/matrix.hpp"

namespace stunted {

// Multiset of Jordan block sizes of a nilpotent operator over F_p; every
// block has size in 1..p. Blocks of size p are the free summands over
// F_p[chi]/(chi^p), smaller blocks form the finite part.
struct JordanType {
    std::vector<int> blocks;  // ascending

    long long dimension() const {
        long long d = 0;
        for (int b : blocks)
            d += b;
        return d;
    }
    bool operator==(const JordanType&) const = default;
};

// Jordan type from the power-rank profile: the number of blocks of size >= j
// equals rank(N^(j-1)) - rank(N^j). Throws if N^p != 0.
JordanType jordan_type(const FpMatrix& n, std::uint32_t p);

struct FreeFiniteSplit {
    long long free_rank;             // multiplicity of size-p blocks
    std::vector<int> finite_blocks;  // blocks of size < p, ascending
};

FreeFiniteSplit split_free_finite(const JordanType& jt, std::uint32_t p);

// A degree-lowering nilpotent endomorphism of a graded F_p-vector space with
// N^p = 0; column j of the matrix is the image of basis vector j.
class NilOperator {
public:
    NilOperator(std::vector<long long> degrees, FpMatrix action, std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return matrix_.rows(); }
    const FpMatrix& matrix() const { return matrix_; }
    const std::vector<long long>& degrees() const { return degrees_; }

    JordanType jordan_type() const { return stunted::jordan_type(matrix_, p_); }

private:
    std::vector<long long> degrees_;
    FpMatrix matrix_;
    std::uint32_t p_;
};

// Element of the group ring F_p[C_p], coefficients indexed by zeta^0..zeta^(p-1).
struct GroupRingElement {
    std::vector<std::uint32_t> coeff;
};

GroupRingElement group_ring_unit(std::uint32_t p);           // 1
GroupRingElement group_ring_zeta(std::uint32_t p);           // zeta
GroupRingElement group_ring_chi(std::uint32_t p);            // zeta - 1
GroupRingElement group_ring_mul(const GroupRingElement& a, const GroupRingElement& b,
                                std::uint32_t p);

// Expands Delta(chi) with chi = zeta - 1 in F_p[C_p] (x) F_p[C_p] and checks
//   Delta(chi) = chi (x) 1 + 1 (x) chi + chi (x) chi
// exactly, together with the weight bookkeeping that makes the cross term
// drop out of the associated graded: with chi assigned weight 2 - 2p^k, the
// cross term has weight 2(2 - 2p^k), strictly below the linear terms for
// every k >= 1.
struct CoproductCheck {
    std::uint32_t p;
    bool identity_holds;
    bool cross_term_lower_weight;
    std::uint32_t max_k_checked;
    bool pass() const { return identity_holds && cross_term_lower_weight; }
};

CoproductCheck coproduct_chi_check(std::uint32_t p);

}  // namespace stunted
