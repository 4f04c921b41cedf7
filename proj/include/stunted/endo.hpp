#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "stunted/witt.hpp"

namespace stunted {

// T-adic valuation j/n; v(T) = 1/n and v(p) = v(T^n) = 1. Infinite for zero.
struct TValuation {
    long long num = 0;
    std::uint32_t den = 1;
    bool infinite = false;

    bool operator==(const TValuation&) const = default;
    bool equals_fraction(long long a, long long b) const {
        return !infinite && static_cast<long long>(den) * a == num * b;
    }
};

class EndoElement;

// Truncated arithmetic in W(F_{p^n})<T> / (T a - phi(a) T, T^n - p), working
// mod T^M with the normalization u = 1. Elements are stored by their
// Teichmuller digit vectors a_0..a_{M-1} in F_{p^n}, the canonical form of
// e = sum a_i T^i; regrouping along residue classes of i mod n identifies the
// ring with the free left W-module on T^0..T^{n-1}, where products are
// computed. The p-adic working precision is interlocked with M via
// N = ceil(M/n) + 1 so that truncation mod T^M is well defined.
class EndoRing {
public:
    EndoRing(std::uint32_t p, std::uint32_t n, std::uint32_t t_precision);

    std::uint32_t p() const;
    std::uint32_t n() const;
    std::uint32_t t_precision() const;
    const WittRing& witt() const;
    const ExtField& residue_field() const;

    EndoElement zero() const;
    EndoElement one() const;
    EndoElement t_power(std::uint32_t j) const;
    EndoElement from_int(long long v) const;
    EndoElement from_digits(std::vector<std::uint32_t> digits) const;

    bool same_ring(const EndoRing& o) const;

private:
    friend class EndoElement;
    friend EndoElement endo_mul(const EndoElement&, const EndoElement&);
    friend EndoElement endo_add(const EndoElement&, const EndoElement&);
    friend EndoElement endo_sub(const EndoElement&, const EndoElement&);

    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

class EndoElement {
public:
    EndoElement(EndoRing ring, std::vector<std::uint32_t> digits);

    const EndoRing& ring() const { return ring_; }
    // Teichmuller digits a_0..a_{M-1}, encoded in the residue field.
    const std::vector<std::uint32_t>& digits() const { return digits_; }

    bool is_zero() const;
    bool is_unit() const { return digits_[0] != 0; }
    bool operator==(const EndoElement& o) const;

private:
    EndoRing ring_;
    std::vector<std::uint32_t> digits_;
};

// Skew product, truncated mod T^M; rejects mismatched ring parameters.
EndoElement endo_mul(const EndoElement& x, const EndoElement& y);
EndoElement endo_add(const EndoElement& x, const EndoElement& y);
EndoElement endo_sub(const EndoElement& x, const EndoElement& y);
EndoElement endo_pow(const EndoElement& x, std::uint32_t e);

// j/n for the least j with a nonzero digit; infinite if none to precision.
TValuation t_valuation(const EndoElement& x);

// Finds zeta = 1 + sum_{i >= k} a_i T^i with zeta^p = 1 mod T^M in the ring
// of height n = k(p-1), by digit-by-digit successive approximation: each next
// digit is determined by exhaustive search over the residue field (with
// backtracking, in encoding order, so the result is deterministic). The
// leading digit a_k is required to be nonzero, which pins v(zeta - 1) =
// k/n = 1/(p-1). Throws internal_error if no digit sequence works.
EndoElement find_order_p_unit(std::uint32_t p, std::uint32_t k, std::uint32_t t_precision);

// Digits a_i of zeta - 1 for i = 1..M-1; rejects non-units.
std::vector<std::uint32_t> tbar_coefficients(const EndoElement& zeta);

struct TkLemmaReport {
    std::uint32_t p, k, n, t_precision;
    TValuation v_zeta_minus_1;
    std::vector<std::uint32_t> tbar_digits;  // positions 1..M-1
    bool zeta_has_order_p;                   // zeta^p = 1 to precision and zeta != 1
    bool digits_below_k_vanish;
    bool digit_k_is_unit;
    bool valuation_is_k_over_n;

    bool pass() const {
        return zeta_has_order_p && digits_below_k_vanish && digit_k_is_unit &&
               valuation_is_k_over_n;
    }
};

// Composes find_order_p_unit and tbar_coefficients and checks the digit
// pattern: a_i = 0 for i < k, a_k a unit, v(zeta - 1) = k/n. Requires M > k.
TkLemmaReport verify_tk_lemma(std::uint32_t p, std::uint32_t k, std::uint32_t t_precision);

}  // namespace stunted
