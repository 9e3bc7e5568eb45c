// AVX2 variants of the statistic kernels. Compiled with -mavx2 in its own
// translation unit; callers reach it only through the runtime dispatch in
// kernels.cpp after a cpuid check.

#include "bajinv/kernels.hpp"

#if defined(BAJINV_BUILD_AVX2)

#include <immintrin.h>

#include <cstring>

namespace bajinv::kernels {
namespace {

// Signed byte compares need values <= 127; larger n falls back to scalar.
constexpr int kMaxSimdN = 127;

// 128 value bytes + one 32-byte chunk of padding reachable by the +1
// shifted load in baj.
constexpr int kBufSize = 192;

// Padding is INT8_MAX so a lane never compares greater than it.
inline void load_padded(std::int8_t* buf, const std::uint8_t* perm, int n) noexcept {
    std::memset(buf, 0x7f, kBufSize);
    std::memcpy(buf, perm, static_cast<std::size_t>(n));
}

std::uint32_t inv_avx2(const std::uint8_t* perm, int n) noexcept {
    if (n > kMaxSimdN) return inv_scalar(perm, n);
    alignas(32) std::int8_t buf[kBufSize];
    load_padded(buf, perm, n);

    const int chunks = (n + 31) / 32;
    std::uint32_t total = 0;
    for (int i = 0; i + 1 < n; ++i) {
        const __m256i vi = _mm256_set1_epi8(buf[i]);
        const int j0 = i + 1;
        int c = j0 / 32;
        {
            const __m256i blk =
                _mm256_load_si256(reinterpret_cast<const __m256i*>(buf + 32 * c));
            std::uint32_t m = static_cast<std::uint32_t>(
                _mm256_movemask_epi8(_mm256_cmpgt_epi8(vi, blk)));
            m &= ~0u << (j0 % 32);  // keep lanes j >= j0 only
            total += static_cast<std::uint32_t>(__builtin_popcount(m));
        }
        for (++c; c < chunks; ++c) {
            const __m256i blk =
                _mm256_load_si256(reinterpret_cast<const __m256i*>(buf + 32 * c));
            const std::uint32_t m = static_cast<std::uint32_t>(
                _mm256_movemask_epi8(_mm256_cmpgt_epi8(vi, blk)));
            total += static_cast<std::uint32_t>(__builtin_popcount(m));
        }
    }
    return total;
}

std::uint32_t baj_avx2(const std::uint8_t* perm, int n) noexcept {
    if (n > kMaxSimdN) return baj_scalar(perm, n);
    alignas(32) std::int8_t buf[kBufSize];
    load_padded(buf, perm, n);

    std::uint32_t total = 0;
    for (int c = 0; 32 * c < n - 1; ++c) {
        const __m256i a =
            _mm256_load_si256(reinterpret_cast<const __m256i*>(buf + 32 * c));
        const __m256i b =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(buf + 32 * c + 1));
        // bit t set <=> descent at 1-based position 32c + t + 1; padding
        // guarantees bits past n-2 never fire
        std::uint32_t m = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpgt_epi8(a, b)));
        while (m) {
            const int t = __builtin_ctz(m);
            m &= m - 1;
            const std::uint32_t i = static_cast<std::uint32_t>(32 * c + t + 1);
            total += i * (static_cast<std::uint32_t>(n) - i);
        }
    }
    return total;
}

std::uint32_t baj_minus_inv_avx2(const std::uint8_t* perm, int n) noexcept {
    return baj_avx2(perm, n) - inv_avx2(perm, n);
}

}  // namespace

namespace detail {

const KernelSet& avx2() {
    static const KernelSet set{"avx2", &inv_avx2, &baj_avx2, &baj_minus_inv_avx2};
    return set;
}

}  // namespace detail
}  // namespace bajinv::kernels

#endif  // BAJINV_BUILD_AVX2
