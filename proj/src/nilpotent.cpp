#include "stunted/nilpotent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stunted {

JordanType jordan_type(const FpMatrix& n, std::uint32_t p) {
    if (n.rows() != n.cols())
        throw std::invalid_argument("jordan_type: operator must be square");
    auto profile = power_rank_profile(n, p);
    if (profile[p] != 0)
        throw std::invalid_argument("jordan_type: operator does not satisfy N^p = 0");
    JordanType jt;
    for (std::uint32_t j = 1; j <= p; ++j) {
        std::size_t at_least_j = profile[j - 1] - profile[j];
        std::size_t at_least_j1 = j < p ? profile[j] - profile[j + 1] : 0;
        for (std::size_t i = at_least_j1; i < at_least_j; ++i)
            jt.blocks.push_back(static_cast<int>(j));
    }
    std::sort(jt.blocks.begin(), jt.blocks.end());
    if (jt.dimension() != static_cast<long long>(n.rows()))
        throw internal_error("jordan_type: block sizes do not sum to the dimension");
    return jt;
}

FreeFiniteSplit split_free_finite(const JordanType& jt, std::uint32_t p) {
    FreeFiniteSplit s{0, {}};
    for (int b : jt.blocks) {
        if (b == static_cast<int>(p))
            ++s.free_rank;
        else
            s.finite_blocks.push_back(b);
    }
    return s;
}

NilOperator::NilOperator(std::vector<long long> degrees, FpMatrix action, std::uint32_t p)
    : degrees_(std::move(degrees)), matrix_(std::move(action)), p_(p) {
    if (matrix_.rows() != matrix_.cols())
        throw std::invalid_argument("NilOperator: matrix must be square");
    if (degrees_.size() != matrix_.rows())
        throw std::invalid_argument("NilOperator: one degree per basis vector required");
    if (matrix_.field().p != p_)
        throw std::invalid_argument("NilOperator: field characteristic mismatch");
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
        for (std::size_t j = 0; j < matrix_.cols(); ++j)
            if (matrix_(i, j) != 0 && degrees_[i] >= degrees_[j])
                throw std::invalid_argument(
                    "NilOperator: action must strictly decrease the grading");
    if (!matrix_.pow(p_).is_zero())
        throw std::invalid_argument("NilOperator: N^p = 0 violated");
}

GroupRingElement group_ring_unit(std::uint32_t p) {
    GroupRingElement e{std::vector<std::uint32_t>(p, 0)};
    e.coeff[0] = 1;
    return e;
}

GroupRingElement group_ring_zeta(std::uint32_t p) {
    GroupRingElement e{std::vector<std::uint32_t>(p, 0)};
    e.coeff[1 % p] = 1;
    return e;
}

GroupRingElement group_ring_chi(std::uint32_t p) {
    PrimeField f(p);
    GroupRingElement e{std::vector<std::uint32_t>(p, 0)};
    e.coeff[1 % p] = f.add(e.coeff[1 % p], 1);
    e.coeff[0] = f.sub(e.coeff[0], 1);
    return e;
}

GroupRingElement group_ring_mul(const GroupRingElement& a, const GroupRingElement& b,
                                std::uint32_t p) {
    PrimeField f(p);
    GroupRingElement c{std::vector<std::uint32_t>(p, 0)};
    for (std::uint32_t i = 0; i < p; ++i) {
        if (a.coeff[i] == 0)
            continue;
        for (std::uint32_t j = 0; j < p; ++j)
            c.coeff[(i + j) % p] =
                f.add(c.coeff[(i + j) % p], f.mul(a.coeff[i], b.coeff[j]));
    }
    return c;
}

namespace {

// Element of F_p[C_p] (x) F_p[C_p] as a p x p coefficient matrix.
using Tensor = std::vector<std::uint32_t>;

Tensor tensor_of(const GroupRingElement& a, const GroupRingElement& b, std::uint32_t p) {
    PrimeField f(p);
    Tensor t(static_cast<std::size_t>(p) * p, 0);
    for (std::uint32_t i = 0; i < p; ++i)
        for (std::uint32_t j = 0; j < p; ++j)
            t[i * p + j] = f.mul(a.coeff[i], b.coeff[j]);
    return t;
}

Tensor tensor_add(const Tensor& x, const Tensor& y, std::uint32_t p) {
    PrimeField f(p);
    Tensor t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        t[i] = f.add(x[i], y[i]);
    return t;
}

Tensor tensor_sub(const Tensor& x, const Tensor& y, std::uint32_t p) {
    PrimeField f(p);
    Tensor t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        t[i] = f.sub(x[i], y[i]);
    return t;
}

}  // namespace

CoproductCheck coproduct_chi_check(std::uint32_t p) {
    PrimeField f(p);  // validates primality
    auto one = group_ring_unit(p);
    auto zeta = group_ring_zeta(p);
    auto chi = group_ring_chi(p);

    // Delta is multiplicative with Delta(zeta) = zeta (x) zeta, so
    // Delta(chi) = zeta (x) zeta - 1 (x) 1.
    Tensor delta_chi = tensor_sub(tensor_of(zeta, zeta, p), tensor_of(one, one, p), p);
    Tensor rhs = tensor_add(tensor_of(chi, one, p), tensor_of(one, chi, p), p);
    rhs = tensor_add(rhs, tensor_of(chi, chi, p), p);

    CoproductCheck check{p, delta_chi == rhs, true, 4};
    for (std::uint32_t k = 1; k <= check.max_k_checked; ++k) {
        long long w = 2 - 2 * ipow(p, k);  // weight of chi; negative for all k >= 1
        if (!(2 * w < w))
            check.cross_term_lower_weight = false;
    }
    return check;
}

}  // namespace stunted
