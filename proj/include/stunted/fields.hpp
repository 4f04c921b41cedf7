#pragma once

#include <cstdint>
#include <vector>

#include "stunted/common.hpp"

namespace stunted {

// Arithmetic in F_p with canonical representatives in [0, p).
struct PrimeField {
    explicit PrimeField(std::uint32_t prime);

    std::uint32_t p;

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1 % p; }
    std::uint64_t order() const { return p; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws on 0
    std::uint32_t frobenius(std::uint32_t a) const { return a; }
    std::uint32_t from_int(long long v) const {
        return static_cast<std::uint32_t>(mod_ll(v, p));
    }

    bool operator==(const PrimeField&) const = default;
};

// The field F_{p^m} presented as F_p[x]/(f) for a deterministically chosen
// monic irreducible f of degree m (smallest in the base-p encoding of its
// non-leading coefficients, so results are reproducible across runs).
//
// Elements are encoded as integers in [0, p^m): the base-p digits of the
// encoding are the coefficients of the residue polynomial, constant term
// first. F_p sits inside as the encodings 0..p-1.
class ExtField {
public:
    ExtField(std::uint32_t p, std::uint32_t m);

    std::uint32_t p() const { return base_.p; }
    std::uint32_t degree() const { return m_; }
    std::uint64_t order() const { return q_; }
    const PrimeField& base() const { return base_; }
    // Monic modulus, coefficients c_0..c_m with c_m = 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws on 0
    std::uint32_t from_int(long long v) const { return base_.from_int(v); }

    // a |-> a^p, the generator of Gal(F_{p^m}/F_p); iterate() applies it r times.
    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, base_.p); }
    std::uint32_t frobenius_iter(std::uint32_t a, std::uint32_t r) const;

    // Smallest encoding generating the multiplicative group.
    std::uint32_t generator() const { return generator_; }

    // Multiplicative order of a nonzero element.
    std::uint64_t element_order(std::uint32_t a) const;

    std::vector<std::uint32_t> digits(std::uint32_t a) const;
    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;

    bool operator==(const ExtField& o) const {
        return base_ == o.base_ && m_ == o.m_;
    }

private:
    PrimeField base_;
    std::uint32_t m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::vector<std::uint32_t>> xpow_red_;  // x^m..x^(2m-2) mod f
    std::uint32_t generator_ = 0;
};

ExtField make_ext_field(std::uint32_t p, std::uint32_t m);

}  // namespace stunted
