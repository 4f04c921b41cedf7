#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace stunted {

// Largest e with p^e dividing n; rejects n <= 0.
long long nu_p(long long n, std::uint32_t p);

// p-adic valuation of the sphere orientation order of the tautological
// bundle over the n-dimensional projective space:
//   max{ r + nu_p(r) : 1 <= r <= floor(n / (p-1)) }  when p <= n + 1,
//   0                                                 when p > n + 1.
long long theta_sphere_valuation(std::uint32_t p, long long n);

// Orders are carried as p-adic valuations throughout: the bound p^(p^k - 1)
// overflows machine words already at small parameters. power_decimal renders
// p^e exactly for display.
std::string power_decimal(std::uint32_t base, long long exponent);

struct OrientationReport {
    std::uint32_t p, k;
    long long n;                 // beta_hat - 1
    long long sphere_valuation;  // theta_sphere_valuation(p, n)
    long long bound_valuation;   // p^k - 1
    long long bound_order_exponent;
    std::optional<long long> known_valuation;
    std::string known_provenance;
    long long conjecture_valuation;  // k
};

// Evaluates the sphere valuation at n = beta_hat - 1 and checks it equals
// p^k - 1 exactly; a mismatch is an internal error.
OrientationReport eo_bound(std::uint32_t p, std::uint32_t k);

struct KnownOrdersReport {
    std::uint32_t p, k;
    long long bound_valuation;  // p^k - 1
    std::optional<long long> known_valuation;
    std::string known_provenance;
    long long conjecture_valuation;  // k
    bool divisibility_ok;            // conjecture | known | bound as valuations
    std::optional<long long> override_n;
    std::optional<long long> override_sphere_valuation;
};

// Assembles the comparison row: upper bound from eo_bound, the exact order p
// at k = 1, the 2^n comparison divisor at p = 2, and the conjectured p^k,
// with the divisibility chain checked on valuations. n_override additionally
// evaluates the sphere valuation at a caller-chosen dimension.
KnownOrdersReport known_orders_report(std::uint32_t p, std::uint32_t k,
                                      std::optional<long long> n_override = std::nullopt);

}  // namespace stunted
