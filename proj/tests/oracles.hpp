#pragma once

// Definitional oracles for the test suites. Everything here is written
// straight from the defining formulas and stays independent of the library
// implementation paths it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

inline std::int64_t inv_pairs(const std::vector<int>& s) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            total += s[i] > s[j];
    return total;
}

inline std::vector<int> descents(const std::vector<int>& s) {
    std::vector<int> d;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] > s[i]) d.push_back(static_cast<int>(i));
    return d;
}

// Indicator form: sum_{i=1}^{n-1} i(n-i) [sigma_{i+1} < sigma_i].
inline std::int64_t baj_indicator(const std::vector<int>& s) {
    const std::int64_t n = static_cast<std::int64_t>(s.size());
    std::int64_t total = 0;
    for (std::int64_t i = 1; i <= n - 1; ++i)
        total += i * (n - i) *
                 (s[static_cast<std::size_t>(i)] < s[static_cast<std::size_t>(i - 1)]);
    return total;
}

// Descent-set form: sum of i(n-i) over the descent set.
inline std::int64_t baj_descent_sum(const std::vector<int>& s) {
    const std::int64_t n = static_cast<std::int64_t>(s.size());
    std::int64_t total = 0;
    for (int i : descents(s)) total += static_cast<std::int64_t>(i) * (n - i);
    return total;
}

// v_i = |{j <= i : sigma_j <= sigma_i}| by direct counting.
inline std::vector<int> vcode_counts(const std::vector<int>& s) {
    std::vector<int> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        int count = 0;
        for (std::size_t j = 0; j <= i; ++j) count += s[j] <= s[i];
        v[i] = count;
    }
    return v;
}

template <class F>
void for_all_perms(int n, F&& fn) {
    std::vector<int> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    do {
        fn(s);
    } while (std::next_permutation(s.begin(), s.end()));
}

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> s(static_cast<std::size_t>(n));
    std::iota(s.begin(), s.end(), 1);
    std::shuffle(s.begin(), s.end(), rng);
    return s;
}

// The product-of-sums right-hand side tallied tuple by tuple: one term
// q^{sum (n-i) r_i} per digit tuple 0 <= r_i < i. No polynomial arithmetic.
inline std::vector<std::uint64_t> rhs_by_tuple_sum(int n) {
    std::int64_t max_e = 0;
    for (std::int64_t i = 1; i <= n - 1; ++i) max_e += (i - 1) * (n - i);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_e) + 1, 0);

    std::vector<int> r(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0);
    while (true) {
        std::int64_t e = 0;
        for (std::size_t j = 0; j < r.size(); ++j)
            e += static_cast<std::int64_t>(n - 1 - static_cast<std::int64_t>(j)) * r[j];
        ++counts[static_cast<std::size_t>(e)];
        std::size_t j = 0;
        for (; j < r.size(); ++j) {
            if (r[j] < static_cast<int>(j)) {
                ++r[j];
                break;
            }
            r[j] = 0;
        }
        if (j == r.size()) break;
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return counts;
}

}  // namespace oracle
