#include "bajinv/codes.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "bajinv/checked.hpp"

namespace bajinv {

VCode::VCode(std::vector<int> values) : v_(std::move(values)) {
    if (v_.empty())
        throw std::invalid_argument("v-code must be nonempty");
    for (int i = 1; i <= n(); ++i) {
        const int vi = v_[static_cast<std::size_t>(i - 1)];
        if (vi < 1 || vi > i)
            throw std::invalid_argument("v_" + std::to_string(i) + " = " +
                                        std::to_string(vi) + " out of range 1.." +
                                        std::to_string(i));
    }
}

RCode::RCode(int n, int k, std::vector<int> digits)
    : n_(n), k_(k), r_(std::move(digits)) {
    if (n_ < 1)
        throw std::invalid_argument("r-code needs n >= 1, got n = " + std::to_string(n_));
    if (k_ < 1 || k_ > n_)
        throw std::invalid_argument("k = " + std::to_string(k_) +
                                    " out of range 1.." + std::to_string(n_));
    if (static_cast<int>(r_.size()) != n_ - 1)
        throw std::invalid_argument("r-code for n = " + std::to_string(n_) +
                                    " needs " + std::to_string(n_ - 1) +
                                    " digits, got " + std::to_string(r_.size()));
    for (int i = 1; i <= n_ - 1; ++i) {
        const int ri = r_[static_cast<std::size_t>(i - 1)];
        if (ri < 0 || ri > i - 1)
            throw std::invalid_argument("r_" + std::to_string(i) + " = " +
                                        std::to_string(ri) + " out of range 0.." +
                                        std::to_string(i - 1));
    }
}

VCode v_encode(const Permutation& p) {
    const auto& s = p.one_line();
    const int n = p.size();
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (int j = 0; j <= i; ++j) count += s[j] <= s[i];
        v[static_cast<std::size_t>(i)] = count;
    }
    return VCode(std::move(v));
}

namespace {

// One insertion step: append v_i, shifting existing values >= v_i up by one.
void insert_step(std::vector<int>& cur, int vi) {
    for (int& x : cur)
        if (x >= vi) ++x;
    cur.push_back(vi);
}

}  // namespace

Permutation v_decode(const VCode& c) {
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(c.n()));
    for (int vi : c.values()) insert_step(cur, vi);
    return Permutation(std::move(cur));
}

std::vector<Permutation> v_decode_stages(const VCode& c) {
    std::vector<Permutation> stages;
    stages.reserve(static_cast<std::size_t>(c.n()));
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(c.n()));
    for (int vi : c.values()) {
        insert_step(cur, vi);
        stages.emplace_back(cur);
    }
    return stages;
}

RCode r_encode(const VCode& c) {
    const auto& v = c.values();
    const int n = c.n();
    std::vector<int> r(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n - 1; ++i) {
        const int chi = v[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(i - 1)];
        r[static_cast<std::size_t>(i - 1)] =
            chi * i + v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i - 1)] - 1;
    }
    return RCode(n, v[static_cast<std::size_t>(n - 1)], std::move(r));
}

VCode r_decode(const RCode& rc) {
    const int n = rc.n();
    std::vector<int> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(n - 1)] = rc.k();
    for (int i = n - 1; i >= 1; --i) {
        const int c = v[static_cast<std::size_t>(i)] -
                      rc.digits()[static_cast<std::size_t>(i - 1)] - 1;
        v[static_cast<std::size_t>(i - 1)] = c >= 1 ? c : i + c;
    }
    return VCode(std::move(v));
}

std::int64_t weight(const RCode& rc) {
    const std::int64_t n = rc.n();
    std::int64_t total = 0;
    for (std::int64_t i = 1; i <= n - 1; ++i)
        total += (n - i) * rc.digits()[static_cast<std::size_t>(i - 1)];
    return total;
}

std::uint64_t rank(const RCode& rc) {
    std::uint64_t place = 1;  // (i-1)! for the digit about to be consumed
    bool saturated = false;
    std::uint64_t total = 0;
    for (int i = 2; i <= rc.n() - 1; ++i) {
        const auto digit =
            static_cast<std::uint64_t>(rc.digits()[static_cast<std::size_t>(i - 1)]);
        if (digit != 0) {
            if (saturated)
                throw std::overflow_error("rank exceeds the 64-bit range at digit r_" +
                                          std::to_string(i));
            total = checked_add(total, checked_mul(place, digit));
        }
        if (!saturated &&
            __builtin_mul_overflow(place, static_cast<std::uint64_t>(i), &place))
            saturated = true;
    }
    return total;
}

RCode unrank(int n, int k, std::uint64_t idx) {
    if (n < 1)
        throw std::invalid_argument("unrank needs n >= 1, got n = " + std::to_string(n));
    if (k < 1 || k > n)
        throw std::invalid_argument("k = " + std::to_string(k) + " out of range 1.." +
                                    std::to_string(n));

    // Bound check while (n-1)! is representable; past that every index fits.
    if (n - 1 <= 20) {
        const std::uint64_t limit = factorial(n - 1);
        if (idx >= limit)
            throw std::out_of_range("idx " + std::to_string(idx) +
                                    " out of range 0.." + std::to_string(limit - 1));
    }

    std::vector<int> digits(static_cast<std::size_t>(n - 1), 0);
    std::uint64_t place = 1;
    for (int i = 2; i <= n - 1; ++i) {
        digits[static_cast<std::size_t>(i - 1)] =
            static_cast<int>((idx / place) % static_cast<std::uint64_t>(i));
        if (__builtin_mul_overflow(place, static_cast<std::uint64_t>(i), &place))
            break;  // remaining digits are all zero
    }
    return RCode(n, k, std::move(digits));
}

}  // namespace bajinv
