#include "bajinv/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "bajinv/checked.hpp"
#include "bajinv/codes.hpp"
#include "bajinv/kernels.hpp"
#include "bajinv/permutation.hpp"

namespace bajinv {

namespace {

using Clock = std::chrono::steady_clock;

void ensure_args(int n, std::optional<int> k, int ceiling) {
    if (n < 1)
        throw std::invalid_argument("n must be >= 1, got n = " + std::to_string(n));
    if (k && (*k < 1 || *k > n))
        throw std::invalid_argument("k = " + std::to_string(*k) +
                                    " out of range 1.." + std::to_string(n));
    if (n > ceiling)
        throw std::invalid_argument(
            "n = " + std::to_string(n) + " exceeds the enumeration ceiling " +
            std::to_string(ceiling) +
            " (the sweep touches up to n! permutations); raise the ceiling to "
            "override");
}

std::vector<std::uint64_t> zero_counts(int n) {
    return std::vector<std::uint64_t>(static_cast<std::size_t>(max_weight(n)) + 1, 0);
}

void trim(std::vector<std::uint64_t>& counts) {
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

// Tally baj - inv over every rearrangement of buf[from, to), the rest of buf
// held fixed, in lexicographic order of the mutable window.
void tally_window_permutations(std::vector<std::uint8_t>& buf, int from, int to,
                               std::vector<std::uint64_t>& counts) {
    const auto& kern = kernels::active();
    const int n = static_cast<int>(buf.size());
    do {
        ++counts[kern.baj_minus_inv(buf.data(), n)];
    } while (std::next_permutation(buf.begin() + from, buf.begin() + to));
}

void tally_with_last(int n, int k, std::vector<std::uint64_t>& counts) {
    std::vector<std::uint8_t> buf;
    buf.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        if (v != k) buf.push_back(static_cast<std::uint8_t>(v));
    buf.push_back(static_cast<std::uint8_t>(k));
    tally_window_permutations(buf, 0, n - 1, counts);
}

// --- raw decode helpers for the rank-range workers -------------------------
// Same maps as codes.cpp, operating on plain digit/value vectors so the hot
// loop skips per-tuple object validation.

void digits_to_v(const std::vector<int>& digits, int k, std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    v[static_cast<std::size_t>(n - 1)] = k;
    for (int i = n - 1; i >= 1; --i) {
        const int c = v[static_cast<std::size_t>(i)] -
                      digits[static_cast<std::size_t>(i - 1)] - 1;
        v[static_cast<std::size_t>(i - 1)] = c >= 1 ? c : i + c;
    }
}

void v_to_perm_bytes(const std::vector<int>& v, std::vector<std::uint8_t>& buf) {
    buf.clear();
    for (int vi : v) {
        for (auto& x : buf)
            if (x >= vi) ++x;
        buf.push_back(static_cast<std::uint8_t>(vi));
    }
}

// Advance the factorial-base odometer (digit r_i has radix i). Returns false
// after the last tuple.
bool next_digits(std::vector<int>& digits) {
    for (std::size_t j = 1; j < digits.size(); ++j) {
        if (digits[j] < static_cast<int>(j)) {
            ++digits[j];
            return true;
        }
        digits[j] = 0;
    }
    return false;
}

void tally_rank_range(int n, int k, std::uint64_t lo, std::uint64_t hi,
                      std::vector<std::uint64_t>& counts) {
    if (lo >= hi) return;
    const auto& kern = kernels::active();
    std::vector<int> digits = unrank(n, k, lo).digits();
    std::vector<int> v(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> buf;
    buf.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        digits_to_v(digits, k, v);
        v_to_perm_bytes(v, buf);
        ++counts[kern.baj_minus_inv(buf.data(), n)];
        next_digits(digits);
    }
}

std::optional<Mismatch> first_difference(const QPolynomial& lhs,
                                         const QPolynomial& rhs) {
    const int top = std::max(lhs.degree(), rhs.degree());
    for (int e = 0; e <= top; ++e)
        if (lhs.coeff(e) != rhs.coeff(e))
            return Mismatch{static_cast<std::uint64_t>(e), lhs.coeff(e), rhs.coeff(e)};
    return std::nullopt;
}

VerificationReport compare_against(const Distribution& d, const QPolynomial& rhs,
                                   Clock::time_point start) {
    VerificationReport rep;
    rep.n = d.n;
    rep.k = d.k;
    rep.permutations_checked = d.total();
    rep.first_mismatch = first_difference(d.to_polynomial(), rhs);
    rep.passed = !rep.first_mismatch.has_value();
    if (!rep.passed) {
        const auto& m = *rep.first_mismatch;
        rep.detail = "first mismatch at exponent " + std::to_string(m.exponent) +
                     ": lhs " + std::to_string(m.lhs) + ", rhs " +
                     std::to_string(m.rhs);
    }
    rep.elapsed = Clock::now() - start;
    return rep;
}

}  // namespace

std::int64_t max_weight(int n) {
    std::int64_t total = 0;
    for (std::int64_t i = 1; i <= n - 1; ++i) total += (i - 1) * (n - i);
    return total;
}

std::uint64_t Distribution::total() const {
    std::uint64_t t = 0;
    for (std::uint64_t c : counts) t = checked_add(t, c);
    return t;
}

Distribution distribution(int n, int k, int ceiling) {
    ensure_args(n, k, ceiling);
    auto counts = zero_counts(n);
    tally_with_last(n, k, counts);
    trim(counts);
    return Distribution{n, k, std::move(counts)};
}

Distribution distribution_all(int n, int ceiling) {
    ensure_args(n, std::nullopt, ceiling);
    auto counts = zero_counts(n);
    for (int k = 1; k <= n; ++k) tally_with_last(n, k, counts);
    trim(counts);
    return Distribution{n, std::nullopt, std::move(counts)};
}

Distribution parallel_distribution(int n, int k, int parts, int ceiling) {
    ensure_args(n, k, ceiling);
    if (parts < 1)
        throw std::invalid_argument("parts must be >= 1, got " + std::to_string(parts));
    if (parts == 1 || n == 1) return distribution(n, k, ceiling);

    std::vector<std::vector<std::uint64_t>> locals;
    std::vector<std::thread> workers;
    std::vector<int> firsts;  // outlives the workers that read it

    const int blocks = n - 1;  // one block per possible first entry
    if (parts <= blocks) {
        for (int v = 1; v <= n; ++v)
            if (v != k) firsts.push_back(v);
        locals.assign(static_cast<std::size_t>(parts), zero_counts(n));
        for (int w = 0; w < parts; ++w) {
            workers.emplace_back([&, w] {
                auto& counts = locals[static_cast<std::size_t>(w)];
                for (std::size_t b = static_cast<std::size_t>(w); b < firsts.size();
                     b += static_cast<std::size_t>(parts)) {
                    std::vector<std::uint8_t> buf;
                    buf.reserve(static_cast<std::size_t>(n));
                    buf.push_back(static_cast<std::uint8_t>(firsts[b]));
                    for (int v = 1; v <= n; ++v)
                        if (v != k && v != firsts[b])
                            buf.push_back(static_cast<std::uint8_t>(v));
                    buf.push_back(static_cast<std::uint8_t>(k));
                    // first entry stays fixed; the window is the middle n-2
                    tally_window_permutations(buf, 1, n - 1, counts);
                }
            });
        }
    } else {
        const std::uint64_t total = factorial(n - 1);
        locals.assign(static_cast<std::size_t>(parts), zero_counts(n));
        for (int w = 0; w < parts; ++w) {
            const std::uint64_t lo =
                total / static_cast<std::uint64_t>(parts) * static_cast<std::uint64_t>(w) +
                std::min<std::uint64_t>(static_cast<std::uint64_t>(w),
                                        total % static_cast<std::uint64_t>(parts));
            const std::uint64_t len = total / static_cast<std::uint64_t>(parts) +
                                      (static_cast<std::uint64_t>(w) <
                                       total % static_cast<std::uint64_t>(parts));
            workers.emplace_back([&, w, lo, len] {
                tally_rank_range(n, k, lo, lo + len,
                                 locals[static_cast<std::size_t>(w)]);
            });
        }
    }

    for (auto& t : workers) t.join();

    auto counts = zero_counts(n);
    for (const auto& local : locals)
        for (std::size_t e = 0; e < counts.size(); ++e)
            counts[e] = checked_add(counts[e], local[e]);
    trim(counts);
    return Distribution{n, k, std::move(counts)};
}

VerificationReport verify_theorem2(int n, int k, int parts, int ceiling) {
    const auto start = Clock::now();
    const Distribution d = parts > 1 ? parallel_distribution(n, k, parts, ceiling)
                                     : distribution(n, k, ceiling);
    return compare_against(d, rhs_product(n), start);
}

VerificationReport verify_theorem1(int n, int parts, int ceiling) {
    const auto start = Clock::now();
    ensure_args(n, std::nullopt, ceiling);
    auto counts = zero_counts(n);
    for (int k = 1; k <= n; ++k) {
        const Distribution d = parts > 1 ? parallel_distribution(n, k, parts, ceiling)
                                         : distribution(n, k, ceiling);
        for (std::size_t e = 0; e < d.counts.size(); ++e)
            counts[e] = checked_add(counts[e], d.counts[e]);
    }
    trim(counts);
    const Distribution all{n, std::nullopt, std::move(counts)};
    return compare_against(all, rhs_product(n).scaled(static_cast<std::uint64_t>(n)),
                           start);
}

VerificationReport check_bijection(int n, int k, int ceiling) {
    const auto start = Clock::now();
    ensure_args(n, k, ceiling);

    VerificationReport rep;
    rep.n = n;
    rep.k = k;

    const auto& kern = kernels::active();
    std::vector<int> digits(static_cast<std::size_t>(n - 1), 0);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> buf;
    buf.reserve(static_cast<std::size_t>(n));

    // Re-encode equality below already forces decoded permutations to be
    // distinct; the packed-set cross-check runs only where it fits in memory.
    const bool track_distinct = n <= 11;
    std::vector<std::uint64_t> packed;
    if (track_distinct) packed.reserve(static_cast<std::size_t>(factorial(n - 1)));

    std::uint64_t index = 0;
    auto fail = [&](const std::string& what, std::uint64_t lhs, std::uint64_t rhs) {
        rep.passed = false;
        rep.first_mismatch = Mismatch{index, lhs, rhs};
        rep.detail = "digit tuple #" + std::to_string(index) + ": " + what;
        rep.permutations_checked = index + 1;
        rep.elapsed = Clock::now() - start;
    };

    do {
        digits_to_v(digits, k, v);
        v_to_perm_bytes(v, buf);

        if (buf.back() != static_cast<std::uint8_t>(k)) {
            fail("decoded permutation does not end in k", buf.back(),
                 static_cast<std::uint64_t>(k));
            return rep;
        }

        const std::uint64_t stat = kern.baj_minus_inv(buf.data(), n);
        std::uint64_t w = 0;
        for (int i = 1; i <= n - 1; ++i)
            w += static_cast<std::uint64_t>(n - i) *
                 static_cast<std::uint64_t>(digits[static_cast<std::size_t>(i - 1)]);
        if (stat != w) {
            fail("baj - inv differs from the digit weight", stat, w);
            return rep;
        }

        // re-encode: prefix counts back to v, then the digit formula back to r
        for (int i = 0; i < n; ++i) {
            int count = 0;
            for (int j = 0; j <= i; ++j) count += buf[j] <= buf[i];
            if (count != v[static_cast<std::size_t>(i)]) {
                fail("re-encoded v differs at position " + std::to_string(i + 1),
                     static_cast<std::uint64_t>(count),
                     static_cast<std::uint64_t>(v[static_cast<std::size_t>(i)]));
                return rep;
            }
        }
        for (int i = 1; i <= n - 1; ++i) {
            const int chi = v[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(i - 1)];
            const int ri =
                chi * i + v[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i - 1)] - 1;
            if (ri != digits[static_cast<std::size_t>(i - 1)]) {
                fail("re-encoded digit r_" + std::to_string(i) + " differs",
                     static_cast<std::uint64_t>(ri),
                     static_cast<std::uint64_t>(digits[static_cast<std::size_t>(i - 1)]));
                return rep;
            }
        }

        if (track_distinct) {
            std::uint64_t key = 0;
            for (int i = 0; i < n; ++i)
                key |= static_cast<std::uint64_t>(buf[static_cast<std::size_t>(i)] - 1)
                       << (4 * i);
            packed.push_back(key);
        }

        ++index;
    } while (next_digits(digits));

    if (track_distinct) {
        std::sort(packed.begin(), packed.end());
        if (std::adjacent_find(packed.begin(), packed.end()) != packed.end()) {
            index = 0;
            fail("two digit tuples decoded to the same permutation", 0, 0);
            return rep;
        }
    }

    rep.passed = true;
    rep.permutations_checked = index;
    rep.elapsed = Clock::now() - start;
    return rep;
}

}  // namespace bajinv
