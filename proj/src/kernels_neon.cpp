// NEON variants of the statistic kernels for AArch64, where NEON is
// baseline and needs no runtime feature check.

#include "bajinv/kernels.hpp"

#if defined(BAJINV_BUILD_NEON) && defined(__aarch64__)

#include <arm_neon.h>

#include <cstring>

namespace bajinv::kernels {
namespace {

// 256 value bytes + one 16-byte chunk reachable by the +1 shifted load.
constexpr int kBufSize = 288;

inline void load_padded(std::uint8_t* buf, const std::uint8_t* perm, int n) noexcept {
    std::memset(buf, 0xff, kBufSize);  // nothing compares greater than 0xff
    std::memcpy(buf, perm, static_cast<std::size_t>(n));
}

inline std::uint32_t movemask_u8(uint8x16_t v) noexcept {
    const uint8x16_t bits = {1, 2, 4, 8, 16, 32, 64, 128,
                             1, 2, 4, 8, 16, 32, 64, 128};
    const uint8x16_t masked = vandq_u8(v, bits);
    return static_cast<std::uint32_t>(vaddv_u8(vget_low_u8(masked))) |
           (static_cast<std::uint32_t>(vaddv_u8(vget_high_u8(masked))) << 8);
}

std::uint32_t inv_neon(const std::uint8_t* perm, int n) noexcept {
    alignas(16) std::uint8_t buf[kBufSize];
    load_padded(buf, perm, n);

    const int chunks = (n + 15) / 16;
    std::uint32_t total = 0;
    for (int i = 0; i + 1 < n; ++i) {
        const uint8x16_t vi = vdupq_n_u8(buf[i]);
        const int j0 = i + 1;
        int c = j0 / 16;
        {
            const uint8x16_t blk = vld1q_u8(buf + 16 * c);
            std::uint32_t m = movemask_u8(vcgtq_u8(vi, blk));
            m &= ~0u << (j0 % 16);
            total += static_cast<std::uint32_t>(__builtin_popcount(m));
        }
        for (++c; c < chunks; ++c) {
            const uint8x16_t blk = vld1q_u8(buf + 16 * c);
            total += static_cast<std::uint32_t>(
                __builtin_popcount(movemask_u8(vcgtq_u8(vi, blk))));
        }
    }
    return total;
}

std::uint32_t baj_neon(const std::uint8_t* perm, int n) noexcept {
    alignas(16) std::uint8_t buf[kBufSize];
    load_padded(buf, perm, n);

    std::uint32_t total = 0;
    for (int c = 0; 16 * c < n - 1; ++c) {
        const uint8x16_t a = vld1q_u8(buf + 16 * c);
        const uint8x16_t b = vld1q_u8(buf + 16 * c + 1);
        std::uint32_t m = movemask_u8(vcgtq_u8(a, b));
        while (m) {
            const int t = __builtin_ctz(m);
            m &= m - 1;
            const std::uint32_t i = static_cast<std::uint32_t>(16 * c + t + 1);
            total += i * (static_cast<std::uint32_t>(n) - i);
        }
    }
    return total;
}

std::uint32_t baj_minus_inv_neon(const std::uint8_t* perm, int n) noexcept {
    return baj_neon(perm, n) - inv_neon(perm, n);
}

}  // namespace

namespace detail {

const KernelSet& neon() {
    static const KernelSet set{"neon", &inv_neon, &baj_neon, &baj_minus_inv_neon};
    return set;
}

}  // namespace detail
}  // namespace bajinv::kernels

#endif  // BAJINV_BUILD_NEON && __aarch64__
