#pragma once

#include <cstdint>
#include <vector>

#include "bajinv/permutation.hpp"

namespace bajinv {

// Prefix-rank encoding of a permutation: v_i = |{j <= i : sigma_j <= sigma_i}|,
// with 1 <= v_i <= i (so v_1 = 1) and v_n = sigma_n.
class VCode {
public:
    explicit VCode(std::vector<int> values);

    int n() const noexcept { return static_cast<int>(v_.size()); }
    const std::vector<int>& values() const noexcept { return v_; }

    bool operator==(const VCode&) const = default;

private:
    std::vector<int> v_;
};

// Digit form of the v-code relative to a fixed last value k = v_n:
// r_i = i*chi(v_{i+1} <= v_i) + v_{i+1} - v_i - 1, with 0 <= r_i < i.
// The digit sequence alone does not determine the permutation; k is stored.
class RCode {
public:
    RCode(int n, int k, std::vector<int> digits);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const std::vector<int>& digits() const noexcept { return r_; }

    bool operator==(const RCode&) const = default;

private:
    int n_;
    int k_;
    std::vector<int> r_;  // r_1..r_{n-1}
};

VCode v_encode(const Permutation& p);

// Inverse of v_encode by incremental insertion: grow sigma^(1), ..., sigma^(n),
// at step i placing v_i last and shifting existing values >= v_i up by one.
Permutation v_decode(const VCode& c);

// All intermediate stages sigma^(1)..sigma^(n) of the construction above;
// stage i is a permutation of {1..i} and the last stage is v_decode(c).
std::vector<Permutation> v_decode_stages(const VCode& c);

RCode r_encode(const VCode& c);

// Backward recursion from v_n = k: with c = v_{i+1} - r_i - 1, take
// v_i = c when c >= 1 and v_i = i + c otherwise. Total on valid RCodes.
VCode r_decode(const RCode& rc);

// sum over i of (n-i)*r_i; equals baj - inv of the decoded permutation.
std::int64_t weight(const RCode& rc);

// Factorial-base index: digit r_i has place value (i-1)!, so rank is a
// bijection from the digit tuples for fixed (n, k) onto 0..(n-1)!-1.
// Throws std::overflow_error if the index exceeds 64 bits.
std::uint64_t rank(const RCode& rc);

RCode unrank(int n, int k, std::uint64_t idx);

}  // namespace bajinv
