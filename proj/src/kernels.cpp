#include "bajinv/kernels.hpp"

#include <vector>

namespace bajinv::kernels {

std::uint32_t inv_scalar(const std::uint8_t* perm, int n) noexcept {
    std::uint32_t total = 0;
    for (int i = 0; i + 1 < n; ++i)
        for (int j = i + 1; j < n; ++j)
            total += perm[i] > perm[j];
    return total;
}

std::uint32_t baj_scalar(const std::uint8_t* perm, int n) noexcept {
    std::uint32_t total = 0;
    for (int i = 1; i < n; ++i)
        if (perm[i - 1] > perm[i])
            total += static_cast<std::uint32_t>(i) * static_cast<std::uint32_t>(n - i);
    return total;
}

std::uint32_t baj_minus_inv_scalar(const std::uint8_t* perm, int n) noexcept {
    return baj_scalar(perm, n) - inv_scalar(perm, n);
}

const KernelSet& scalar() {
    static const KernelSet set{"scalar", &inv_scalar, &baj_scalar,
                               &baj_minus_inv_scalar};
    return set;
}

namespace {

#if defined(BAJINV_BUILD_AVX2)
bool cpu_has_avx2() noexcept { return __builtin_cpu_supports("avx2"); }
#endif

std::vector<KernelSet> build_registry() {
    std::vector<KernelSet> sets;
    sets.push_back(scalar());
#if defined(BAJINV_BUILD_AVX2)
    if (cpu_has_avx2()) sets.push_back(detail::avx2());
#endif
#if defined(BAJINV_BUILD_NEON)
    sets.push_back(detail::neon());
#endif
    return sets;
}

}  // namespace

std::span<const KernelSet> available() {
    static const std::vector<KernelSet> sets = build_registry();
    return {sets.data(), sets.size()};
}

const KernelSet& active() { return available().back(); }

}  // namespace bajinv::kernels
