#include "bajinv/kernels.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace bajinv;

namespace {

std::vector<std::uint8_t> to_bytes(const std::vector<int>& s) {
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

TEST_CASE("registry: scalar always present and active is the last entry") {
    const auto sets = kernels::available();
    REQUIRE(sets.size() >= 1);
    CHECK(std::string(sets.front().name) == "scalar");
    CHECK(std::string(kernels::active().name) == std::string(sets.back().name));
}

TEST_CASE("scalar kernels match the definitional oracles") {
    std::mt19937_64 rng(7);
    for (int n : {1, 2, 3, 7, 13, 40, 200, 255}) {
        for (int rep = 0; rep < 50; ++rep) {
            const auto s = oracle::random_perm(n, rng);
            const auto b = to_bytes(s);
            CHECK(kernels::inv_scalar(b.data(), n) == oracle::inv_pairs(s));
            CHECK(kernels::baj_scalar(b.data(), n) == oracle::baj_indicator(s));
            CHECK(kernels::baj_minus_inv_scalar(b.data(), n) ==
                  oracle::baj_indicator(s) - oracle::inv_pairs(s));
        }
    }
}

TEST_CASE("every compiled-in variant agrees with scalar") {
    for (const auto& set : kernels::available()) {
        CAPTURE(set.name);

        SUBCASE("exhaustive n <= 8") {
            for (int n = 1; n <= 8; ++n) {
                oracle::for_all_perms(n, [&](const std::vector<int>& s) {
                    const auto b = to_bytes(s);
                    CHECK(set.inv(b.data(), n) == kernels::inv_scalar(b.data(), n));
                    CHECK(set.baj(b.data(), n) == kernels::baj_scalar(b.data(), n));
                    CHECK(set.baj_minus_inv(b.data(), n) ==
                          kernels::baj_minus_inv_scalar(b.data(), n));
                });
            }
        }

        SUBCASE("randomized, chunk boundaries and the scalar-fallback sizes") {
            std::mt19937_64 rng(99);
            for (int n : {9, 12, 15, 16, 17, 31, 32, 33, 63, 64, 96, 126, 127, 128,
                          200, 255}) {
                for (int rep = 0; rep < 200; ++rep) {
                    const auto b = to_bytes(oracle::random_perm(n, rng));
                    CHECK(set.inv(b.data(), n) == kernels::inv_scalar(b.data(), n));
                    CHECK(set.baj(b.data(), n) == kernels::baj_scalar(b.data(), n));
                    CHECK(set.baj_minus_inv(b.data(), n) ==
                          kernels::baj_minus_inv_scalar(b.data(), n));
                }
            }
        }

        SUBCASE("identity and reverse at every size up to 64") {
            for (int n = 1; n <= 64; ++n) {
                std::vector<std::uint8_t> id(static_cast<std::size_t>(n));
                std::iota(id.begin(), id.end(), std::uint8_t{1});
                std::vector<std::uint8_t> rev(id.rbegin(), id.rend());
                CHECK(set.inv(id.data(), n) == 0);
                CHECK(set.baj(id.data(), n) == 0);
                CHECK(set.inv(rev.data(), n) ==
                      static_cast<std::uint32_t>(n) * (n - 1) / 2);
                CHECK(set.baj(rev.data(), n) == kernels::baj_scalar(rev.data(), n));
            }
        }
    }
}
