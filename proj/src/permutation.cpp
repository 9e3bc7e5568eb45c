#include "bajinv/permutation.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bajinv/kernels.hpp"

namespace bajinv {

Permutation::Permutation(std::vector<int> one_line) : elems_(std::move(one_line)) {
    if (elems_.empty())
        throw std::invalid_argument("permutation must be nonempty");
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : elems_) {
        if (x < 1 || x > n)
            throw std::invalid_argument("value " + std::to_string(x) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("duplicate value " + std::to_string(x));
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation must be nonempty");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

DescentSet descent_set(const Permutation& p) {
    const auto& s = p.one_line();
    DescentSet d;
    for (int i = 1; i < p.size(); ++i)
        if (s[i - 1] > s[i]) d.push_back(i);
    return d;
}

namespace {

// Bridge into the byte kernels when values fit; statistics accept any n.
template <class Kernel, class Fallback>
std::int64_t run_stat(const Permutation& p, Kernel kernel, Fallback fallback) {
    const int n = p.size();
    if (n <= 255) {
        std::uint8_t buf[256];
        const auto& s = p.one_line();
        for (int i = 0; i < n; ++i) buf[i] = static_cast<std::uint8_t>(s[i]);
        return static_cast<std::int64_t>(kernel(buf, n));
    }
    return fallback(p);
}

std::int64_t inv_wide(const Permutation& p) {
    const auto& s = p.one_line();
    const int n = p.size();
    std::int64_t total = 0;
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 1; j < n; ++j)
            total += s[i] > s[j];
    return total;
}

std::int64_t baj_wide(const Permutation& p) {
    const auto& s = p.one_line();
    const std::int64_t n = p.size();
    std::int64_t total = 0;
    for (std::int64_t i = 1; i < n; ++i)
        if (s[i - 1] > s[i]) total += i * (n - i);
    return total;
}

}  // namespace

std::int64_t inv(const Permutation& p) {
    return run_stat(p, kernels::active().inv, inv_wide);
}

std::int64_t baj(const Permutation& p) {
    return run_stat(p, kernels::active().baj, baj_wide);
}

std::int64_t baj_minus_inv(const Permutation& p) {
    return run_stat(p, kernels::active().baj_minus_inv,
                    [](const Permutation& q) { return baj_wide(q) - inv_wide(q); });
}

ClassicStats classic_stats(const Permutation& p) {
    ClassicStats st;
    const auto& s = p.one_line();
    for (int i = 1; i < p.size(); ++i) {
        if (s[i - 1] > s[i]) {
            ++st.des;
            st.maj += i;
        }
    }
    return st;
}

LastFixedStream::LastFixedStream(int n, int k) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("enumeration supports 1 <= n <= 64, got n = " +
                                    std::to_string(n));
    if (k < 1 || k > n)
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " out of range 1.." + std::to_string(n));
    buf_.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        if (v != k) buf_.push_back(static_cast<std::uint8_t>(v));
    buf_.push_back(static_cast<std::uint8_t>(k));
}

void LastFixedStream::advance() noexcept {
    done_ = !std::next_permutation(buf_.begin(), buf_.end() - 1);
}

Permutation LastFixedStream::materialize() const {
    return Permutation(std::vector<int>(buf_.begin(), buf_.end()));
}

}  // namespace bajinv
