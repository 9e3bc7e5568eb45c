#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bajinv {

// Exact unsigned arithmetic. Counts and coefficients in this library must
// never wrap; every fixed-width operation that could overflow goes through
// these helpers and throws instead.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in addition");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit overflow in multiplication");
    return r;
}

// n! for 0 <= n <= 20; 21! does not fit in 64 bits.
inline std::uint64_t factorial(int n) {
    if (n < 0 || n > 20)
        throw std::overflow_error("factorial(" + std::to_string(n) +
                                  ") exceeds the 64-bit range (max n = 20)");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace bajinv
