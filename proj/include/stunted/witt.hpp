#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "stunted/fields.hpp"

namespace stunted {

// W(F_{p^m}) / p^N: the unramified degree-m extension of Z/p^N, presented as
// (Z/p^N)[x] / (f) where f is the lift of the deterministic modulus of
// F_{p^m}. Elements are coefficient vectors of length m with entries in
// [0, p^N). The Teichmuller lift of a residue a is the fixed point of
// z -> z^(p^m) starting from the digit lift of a, and Frobenius acts
// digit-wise on Teichmuller expansions: tau(a) -> tau(a^p).
class WittRing {
public:
    using Elem = std::vector<std::uint64_t>;

    WittRing(std::uint32_t p, std::uint32_t m, std::uint32_t precision_exponent);

    std::uint32_t p() const { return p_; }
    std::uint32_t degree() const { return m_; }
    std::uint32_t precision() const { return N_; }
    std::uint64_t p_power_modulus() const { return pN_; }
    const ExtField& residue_field() const { return residue_; }

    Elem zero() const { return Elem(m_, 0); }
    Elem one() const;
    Elem from_int(long long v) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::uint64_t e) const;
    Elem mul_scalar(const Elem& a, std::uint64_t s) const;

    bool is_zero(const Elem& a) const;

    // Image in F_{p^m} (encoded) under reduction mod p.
    std::uint32_t residue(const Elem& a) const;

    // Multiplicative lift; cached per residue.
    const Elem& teichmuller(std::uint32_t a) const;

    // First `count` coefficients of the Teichmuller expansion
    // w = sum_j tau(d_j) p^j; requires count <= precision.
    std::vector<std::uint32_t> teichmuller_digits(Elem w, std::size_t count) const;

    Elem from_teichmuller_digits(const std::vector<std::uint32_t>& d) const;

    // The ring automorphism lifting a -> a^p.
    Elem frobenius(const Elem& a) const;

private:
    std::uint32_t p_, m_, N_;
    std::uint64_t pN_;
    ExtField residue_;
    std::vector<std::uint64_t> modulus_;  // monic lift, coefficients c_0..c_m
    mutable std::unordered_map<std::uint32_t, Elem> teich_cache_;

    std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) const;
};

}  // namespace stunted
