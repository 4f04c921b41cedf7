#include "stunted/stunted_cp.hpp"

#include <stdexcept>
#include <string>

namespace stunted {

PkParams::PkParams(std::uint32_t prime, std::uint32_t kk) : p(prime), k(kk) {
    if (!is_prime(p))
        throw std::invalid_argument("PkParams: p must be prime");
    if (k == 0)
        throw std::invalid_argument("PkParams: k must be positive");
    ipow(p, k);  // overflow guard
}

StuntedBasis::StuntedBasis(long long bottom, long long topc) : bot(bottom), top(topc) {
    if (top < bot)
        throw std::invalid_argument("StuntedBasis: top cell below bottom cell");
}

NilOperator pk_homology_operator(const PkParams& params, const StuntedBasis& basis) {
    const long long s = params.shift();
    const std::size_t d = basis.dim();
    PrimeField f(params.p);
    FpMatrix m(f, d, d);
    std::vector<long long> degrees(d);
    for (std::size_t j = 0; j < d; ++j) {
        long long i = basis.index_at(j);
        degrees[j] = 2 * i;
        long long target = i - s;
        if (target < basis.bot)
            continue;
        std::uint32_t coef = f.from_int(i - s);
        if (coef != 0)
            m(static_cast<std::size_t>(target - basis.bot), j) = coef;
    }
    return NilOperator(std::move(degrees), std::move(m), params.p);
}

std::uint32_t pk_cohomology_coefficient(const PkParams& params, long long c, long long i) {
    if (i < 0)
        throw std::invalid_argument("pk_cohomology_coefficient: exponent must be >= 0");
    return static_cast<std::uint32_t>(mod_ll(i + c, params.p));
}

bool duality_check(const PkParams& params, const StuntedBasis& basis) {
    const long long s = params.shift();
    const std::size_t d = basis.dim();
    const long long c = basis.bot;
    PrimeField f(params.p);

    // Cohomology action on x^j u_c for j = 0..top-bot; column j sends
    // x^j u_c to (j + c) x^{j + s} u_c when the target stays in range.
    FpMatrix coh(f, d, d);
    for (std::size_t j = 0; j < d; ++j) {
        std::size_t target = j + static_cast<std::size_t>(s);
        if (target >= d)
            continue;
        std::uint32_t coef = pk_cohomology_coefficient(params, c, static_cast<long long>(j));
        if (coef != 0)
            coh(target, j) = coef;
    }
    return pk_homology_operator(params, basis).matrix() == coh.transpose();
}

}  // namespace stunted
