#include "stunted/kernels.hpp"

#include <algorithm>

#include "stunted/fields.hpp"

namespace stunted::kernels {

namespace {

std::uint32_t pow_mod(std::uint32_t a, std::uint32_t e, std::uint32_t p) {
    std::uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Below this many scalar operations the OpenMP fork/join overhead dominates.
constexpr std::size_t kParallelThreshold = 1u << 15;

}  // namespace

namespace serial {

void mul_mod_p(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c,
               std::size_t n, std::size_t k, std::size_t m, std::uint32_t p) {
    std::vector<std::uint64_t> acc(m);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t l = 0; l < k; ++l) {
            std::uint64_t av = a[i * k + l];
            if (av == 0)
                continue;
            const std::uint32_t* brow = b + l * m;
            for (std::size_t j = 0; j < m; ++j)
                acc[j] += av * brow[j];
        }
        for (std::size_t j = 0; j < m; ++j)
            c[i * m + j] = static_cast<std::uint32_t>(acc[j] % p);
    }
}

std::size_t rank_mod_p(std::uint32_t* a, std::size_t rows, std::size_t cols,
                       std::uint32_t p) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            std::swap_ranges(a + piv * cols, a + (piv + 1) * cols, a + r * cols);
        std::uint32_t inv = pow_mod(a[r * cols + col], p - 2, p);
        for (std::size_t j = col; j < cols; ++j)
            a[r * cols + j] =
                static_cast<std::uint32_t>(std::uint64_t(a[r * cols + j]) * inv % p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint64_t f = a[i * cols + col];
            if (f == 0)
                continue;
            std::uint64_t fc = p - f;
            for (std::size_t j = col; j < cols; ++j)
                a[i * cols + j] = static_cast<std::uint32_t>(
                    (a[i * cols + j] + fc * a[r * cols + j]) % p);
        }
        ++r;
    }
    return r;
}

}  // namespace serial

void mul_mod_p(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c,
               std::size_t n, std::size_t k, std::size_t m, std::uint32_t p) {
    if (n * k * m < kParallelThreshold) {
        serial::mul_mod_p(a, b, c, n, k, m, p);
        return;
    }
#pragma omp parallel
    {
        std::vector<std::uint64_t> acc(m);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t l = 0; l < k; ++l) {
                std::uint64_t av = a[i * k + l];
                if (av == 0)
                    continue;
                const std::uint32_t* brow = b + l * m;
                for (std::size_t j = 0; j < m; ++j)
                    acc[j] += av * brow[j];
            }
            for (std::size_t j = 0; j < m; ++j)
                c[i * m + j] = static_cast<std::uint32_t>(acc[j] % p);
        }
    }
}

std::size_t rank_mod_p(std::uint32_t* a, std::size_t rows, std::size_t cols,
                       std::uint32_t p) {
    if (rows * cols < kParallelThreshold)
        return serial::rank_mod_p(a, rows, cols, p);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            std::swap_ranges(a + piv * cols, a + (piv + 1) * cols, a + r * cols);
        std::uint32_t inv = pow_mod(a[r * cols + col], p - 2, p);
        for (std::size_t j = col; j < cols; ++j)
            a[r * cols + j] =
                static_cast<std::uint32_t>(std::uint64_t(a[r * cols + j]) * inv % p);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(r) + 1;
             i < static_cast<std::ptrdiff_t>(rows); ++i) {
            std::uint64_t f = a[i * cols + col];
            if (f == 0)
                continue;
            std::uint64_t fc = p - f;
            for (std::size_t j = col; j < cols; ++j)
                a[i * cols + j] = static_cast<std::uint32_t>(
                    (a[i * cols + j] + fc * a[r * cols + j]) % p);
        }
        ++r;
    }
    return r;
}

}  // namespace stunted::kernels
