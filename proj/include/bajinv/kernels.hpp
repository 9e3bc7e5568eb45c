#pragma once

#include <cstdint>
#include <span>

// Per-permutation statistic kernels.
//
// A permutation is passed as one-line notation in bytes: perm[0..n-1] holds
// the values sigma_1..sigma_n (1-based values, so 1 <= perm[i] <= n <= 255).
//
// The scalar kernels are the reference definitions: inv is the O(n^2) pair
// count, baj the weighted adjacent-descent scan. SIMD variants are selected
// at runtime and must agree with the scalar kernels bit for bit; the
// equivalence suite in tests/ enforces this for every compiled-in variant.

namespace bajinv::kernels {

using stat_fn = std::uint32_t (*)(const std::uint8_t* perm, int n);

struct KernelSet {
    const char* name;
    stat_fn inv;
    stat_fn baj;
    stat_fn baj_minus_inv;
};

// |{(i,j) : i < j, sigma_i > sigma_j}|
std::uint32_t inv_scalar(const std::uint8_t* perm, int n) noexcept;

// sum of i*(n-i) over 1-based positions i with sigma_i > sigma_{i+1}
std::uint32_t baj_scalar(const std::uint8_t* perm, int n) noexcept;

std::uint32_t baj_minus_inv_scalar(const std::uint8_t* perm, int n) noexcept;

const KernelSet& scalar();

// All variants usable on this machine, scalar first, fastest last.
std::span<const KernelSet> available();

// The variant the library uses for enumeration; equals available().back().
const KernelSet& active();

namespace detail {
#if defined(BAJINV_BUILD_AVX2)
const KernelSet& avx2();
#endif
#if defined(BAJINV_BUILD_NEON)
const KernelSet& neon();
#endif
}  // namespace detail

}  // namespace bajinv::kernels
