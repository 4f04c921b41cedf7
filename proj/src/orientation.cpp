#include "stunted/orientation.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "stunted/common.hpp"
#include "stunted/splitting.hpp"

namespace stunted {

long long nu_p(long long n, std::uint32_t p) {
    if (n <= 0)
        throw std::invalid_argument("nu_p: argument must be a positive integer");
    if (!is_prime(p))
        throw std::invalid_argument("nu_p: p must be prime");
    long long e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

long long theta_sphere_valuation(std::uint32_t p, long long n) {
    if (n < 1)
        throw std::invalid_argument("theta_sphere_valuation: n must be positive");
    if (!is_prime(p))
        throw std::invalid_argument("theta_sphere_valuation: p must be prime");
    if (static_cast<long long>(p) > n + 1)
        return 0;
    long long best = 0;
    for (long long r = 1; r <= n / (p - 1); ++r)
        best = std::max(best, r + nu_p(r, p));
    return best;
}

std::string power_decimal(std::uint32_t base, long long exponent) {
    if (exponent < 0)
        throw std::invalid_argument("power_decimal: exponent must be nonnegative");
    if (exponent > 20000)  // ~6000+ decimal digits; render symbolically beyond this
        return std::to_string(base) + "^" + std::to_string(exponent);
    std::vector<std::uint32_t> digits{1};  // little-endian base 10^9
    for (long long i = 0; i < exponent; ++i) {
        std::uint64_t carry = 0;
        for (auto& d : digits) {
            std::uint64_t v = static_cast<std::uint64_t>(d) * base + carry;
            d = static_cast<std::uint32_t>(v % 1000000000);
            carry = v / 1000000000;
        }
        while (carry) {
            digits.push_back(static_cast<std::uint32_t>(carry % 1000000000));
            carry /= 1000000000;
        }
    }
    std::string out = std::to_string(digits.back());
    for (std::size_t i = digits.size() - 1; i-- > 0;) {
        std::string part = std::to_string(digits[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

namespace {

void fill_known(std::uint32_t p, std::uint32_t k, std::optional<long long>& valuation,
                std::string& provenance) {
    if (k == 1) {
        valuation = 1;  // exact order p at height p - 1
        provenance = "exact order at height p-1";
    } else if (p == 2) {
        valuation = static_cast<long long>(k);  // divides 2^n with n = k at p = 2
        provenance = "real Johnson-Wilson comparison divisor";
    } else {
        valuation.reset();
        provenance = "";
    }
}

}  // namespace

OrientationReport eo_bound(std::uint32_t p, std::uint32_t k) {
    auto consts = beta_constants(p, k);  // validates p, k
    if (consts.beta_hat > 200000000)
        throw std::invalid_argument(
            "eo_bound: beta_hat exceeds the supported range for direct evaluation");
    OrientationReport rep{};
    rep.p = p;
    rep.k = k;
    rep.n = consts.beta_hat - 1;
    rep.sphere_valuation = theta_sphere_valuation(p, rep.n);
    rep.bound_valuation = ipow(p, k) - 1;
    rep.bound_order_exponent = rep.bound_valuation;
    rep.conjecture_valuation = k;
    fill_known(p, k, rep.known_valuation, rep.known_provenance);
    if (rep.sphere_valuation != rep.bound_valuation)
        throw internal_error("eo_bound: sphere valuation at beta_hat - 1 is not p^k - 1");
    if (rep.conjecture_valuation > rep.bound_valuation)
        throw internal_error("eo_bound: conjectured order exceeds the bound");
    return rep;
}

KnownOrdersReport known_orders_report(std::uint32_t p, std::uint32_t k,
                                      std::optional<long long> n_override) {
    auto bound = eo_bound(p, k);
    KnownOrdersReport rep{};
    rep.p = p;
    rep.k = k;
    rep.bound_valuation = bound.bound_valuation;
    rep.conjecture_valuation = k;
    fill_known(p, k, rep.known_valuation, rep.known_provenance);

    rep.divisibility_ok = rep.conjecture_valuation <= rep.bound_valuation;
    if (rep.known_valuation) {
        rep.divisibility_ok = rep.divisibility_ok &&
                              rep.conjecture_valuation <= *rep.known_valuation &&
                              *rep.known_valuation <= rep.bound_valuation;
    }
    if (n_override) {
        rep.override_n = *n_override;
        rep.override_sphere_valuation = theta_sphere_valuation(p, *n_override);
    }
    return rep;
}

}  // namespace stunted
