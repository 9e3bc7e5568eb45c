#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bajinv {

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-based at every interface; construction validates the rearrangement
// property and names the first offending value on failure.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(elems_.size()); }

    // Value at 1-based position pos.
    int at(int pos) const { return elems_[static_cast<std::size_t>(pos - 1)]; }

    const std::vector<int>& one_line() const noexcept { return elems_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> elems_;
};

// Strictly increasing 1-based positions i with sigma_i > sigma_{i+1}.
using DescentSet = std::vector<int>;

DescentSet descent_set(const Permutation& p);

// Number of pairs i < j with sigma_i > sigma_j. Bounded by n(n-1)/2.
std::int64_t inv(const Permutation& p);

// Sum of i*(n-i) over descent positions i. Bounded by (n^3 - n)/6.
std::int64_t baj(const Permutation& p);

// baj - inv; nonnegative for every permutation.
std::int64_t baj_minus_inv(const Permutation& p);

struct ClassicStats {
    std::int64_t des = 0;  // number of descents
    std::int64_t maj = 0;  // sum of descent positions
};

ClassicStats classic_stats(const Permutation& p);

// Streams the (n-1)! permutations with sigma_n = k, in lexicographic order
// of the first n-1 entries. Single consumer; the span returned by current()
// is invalidated by advance(). Enumeration entry points accept n <= 64.
class LastFixedStream {
public:
    LastFixedStream(int n, int k);

    bool done() const noexcept { return done_; }

    std::span<const std::uint8_t> current() const noexcept {
        return {buf_.data(), buf_.size()};
    }

    void advance() noexcept;

    Permutation materialize() const;

private:
    std::vector<std::uint8_t> buf_;
    bool done_ = false;
};

template <class F>
void for_each_with_last(int n, int k, F&& fn) {
    for (LastFixedStream s(n, k); !s.done(); s.advance()) fn(s.current());
}

// All of S_n, visiting k = 1..n and within each k the stream above.
template <class F>
void for_each_permutation(int n, F&& fn) {
    for (int k = 1; k <= n; ++k) for_each_with_last(n, k, fn);
}

}  // namespace bajinv
