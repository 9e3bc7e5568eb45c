#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bajinv/qpoly.hpp"

namespace bajinv {

// Enumerating more than ceiling! permutations is refused by default;
// override per call (or via --max-n on the command line).
inline constexpr int kDefaultCeiling = 13;

// Tally of baj - inv over sigma in S_n with sigma_n = k (k = nullopt means
// all of S_n). counts[e] is the exact number of permutations with value e;
// trailing zeros are trimmed.
struct Distribution {
    int n = 0;
    std::optional<int> k;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    QPolynomial to_polynomial() const { return QPolynomial(counts); }

    bool operator==(const Distribution&) const = default;
};

struct Mismatch {
    std::uint64_t exponent = 0;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
};

struct VerificationReport {
    int n = 0;
    std::optional<int> k;
    bool passed = false;
    std::optional<Mismatch> first_mismatch;  // absent iff passed
    std::string detail;                      // empty when passed
    std::uint64_t permutations_checked = 0;
    std::chrono::duration<double> elapsed{0};
};

// Largest attainable value of baj - inv on S_n: sum_{i=1}^{n-1} (i-1)(n-i).
std::int64_t max_weight(int n);

Distribution distribution(int n, int k, int ceiling = kDefaultCeiling);

Distribution distribution_all(int n, int ceiling = kDefaultCeiling);

// Disjoint-block tally, identical to distribution() for every parts and
// schedule. Blocks are keyed by the first entry; when parts exceeds n-1 the
// index range of the factorial-base unrank map is split instead.
Distribution parallel_distribution(int n, int k, int parts,
                                   int ceiling = kDefaultCeiling);

// distribution(n, k) as a polynomial equals rhs_product(n), coefficient-exact.
VerificationReport verify_theorem2(int n, int k, int parts = 1,
                                   int ceiling = kDefaultCeiling);

// The all-k sum equals n * rhs_product(n), coefficient-exact.
VerificationReport verify_theorem1(int n, int parts = 1,
                                   int ceiling = kDefaultCeiling);

// Decodes every digit tuple for (n, k) and checks the decoded permutation
// ends in k, satisfies baj - inv = weight, re-encodes to the same digits,
// and that all decoded permutations are distinct.
VerificationReport check_bijection(int n, int k, int ceiling = kDefaultCeiling);

}  // namespace bajinv
