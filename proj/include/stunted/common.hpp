#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stunted {

// Raised when a computation contradicts an identity that should hold
// unconditionally for valid inputs; indicates a bug, not bad user input.
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

bool is_prime(std::uint64_t n);

// base^exp as a signed 64-bit integer; throws std::overflow_error past 2^62.
long long ipow(std::uint32_t base, std::uint32_t exp);

// Representative of a mod m in [0, m), m > 0.
long long mod_ll(long long a, long long m);

}  // namespace stunted
