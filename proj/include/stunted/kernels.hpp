#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Dense mod-p matrix kernels. The functions in kernels::serial are the
// reference implementations; the top-level ones parallelize the inner loops
// with OpenMP and must produce identical results (cross-checked in the test
// suite, timed against each other by the bench target).

namespace stunted::kernels {

namespace serial {

// C (n x m) = A (n x k) * B (k x m), entries reduced mod p.
void mul_mod_p(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c,
               std::size_t n, std::size_t k, std::size_t m, std::uint32_t p);

// Rank by Gaussian elimination; destroys the row-major buffer.
std::size_t rank_mod_p(std::uint32_t* data, std::size_t rows, std::size_t cols,
                       std::uint32_t p);

}  // namespace serial

void mul_mod_p(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* c,
               std::size_t n, std::size_t k, std::size_t m, std::uint32_t p);

std::size_t rank_mod_p(std::uint32_t* data, std::size_t rows, std::size_t cols,
                       std::uint32_t p);

}  // namespace stunted::kernels
