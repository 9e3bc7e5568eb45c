// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds. Each check is coefficient-exact; there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bajinv/checked.hpp"
#include "bajinv/codes.hpp"
#include "bajinv/permutation.hpp"
#include "bajinv/qpoly.hpp"
#include "bajinv/serialize.hpp"
#include "bajinv/verify.hpp"
#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

// 1. Theorem 2, coefficient-exact for every n in 1..9 and every k, sequential,
//    under 10 seconds.
Outcome criterion1() {
    Outcome o;
    const auto start = Clock::now();
    std::uint64_t perms = 0;
    for (int n = 1; n <= 9; ++n) {
        const auto rhs = bajinv::rhs_product(n);
        for (int k = 1; k <= n; ++k) {
            const auto d = bajinv::distribution(n, k);
            perms += d.total();
            if (d.to_polynomial() != rhs) {
                o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                       " distribution differs from the product");
                return o;
            }
        }
    }
    const std::chrono::duration<double> dt = Clock::now() - start;
    if (dt.count() >= 10.0) o.fail("sweep took " + std::to_string(dt.count()) + " s");
    o.note = std::to_string(perms) + " permutations, " +
             std::to_string(dt.count()).substr(0, 5) + " s";
    return o;
}

// 2. Theorem 1: the all-k sum equals n * rhs_product(n) for n in 1..9.
Outcome criterion2() {
    Outcome o;
    for (int n = 1; n <= 9; ++n) {
        const auto rep = bajinv::verify_theorem1(n);
        if (!rep.passed) {
            o.fail("n=" + std::to_string(n) + ": " + rep.detail);
            return o;
        }
    }
    o.note = "n=1..9, all-k sums";
    return o;
}

// 3. The golden chain v=(1,1,3,1,2,5,1): exact intermediate stages, encode
//    inverts, r-code/weight/baj/inv pinned, oracles recomputed in place.
Outcome criterion3() {
    Outcome o;
    const std::vector<int> v{1, 1, 3, 1, 2, 5, 1};
    const std::vector<std::vector<int>> expected_stages{
        {1},          {2, 1},          {2, 1, 3},          {3, 2, 4, 1},
        {4, 3, 5, 1, 2}, {4, 3, 6, 1, 2, 5}, {5, 4, 7, 2, 3, 6, 1}};

    const auto stages = bajinv::v_decode_stages(bajinv::VCode(v));
    if (stages.size() != expected_stages.size()) {
        o.fail("stage count " + std::to_string(stages.size()));
        return o;
    }
    for (std::size_t i = 0; i < stages.size(); ++i)
        if (stages[i].one_line() != expected_stages[i])
            o.fail("stage " + std::to_string(i + 1) + " differs");

    const bajinv::Permutation sigma(expected_stages.back());
    if (!(bajinv::v_encode(sigma).values() == v)) o.fail("encode does not invert");

    const auto rc = bajinv::r_encode(bajinv::VCode(v));
    if (rc.digits() != std::vector<int>{0, 1, 0, 0, 2, 1}) o.fail("r-code digits");
    if (rc.k() != 1) o.fail("r-code k");
    if (bajinv::weight(rc) != 10) o.fail("weight");

    // definitional oracles, recomputed here
    const auto& s = sigma.one_line();
    if (oracle::inv_pairs(s) != 14) o.fail("oracle inv != 14");
    if (oracle::baj_indicator(s) != 24) o.fail("oracle baj != 24");
    if (bajinv::inv(sigma) != 14) o.fail("inv != 14");
    if (bajinv::baj(sigma) != 24) o.fail("baj != 24");
    if (bajinv::baj_minus_inv(sigma) != 10) o.fail("baj - inv != 10");

    o.note = "v=(1,1,3,1,2,5,1) <-> 5472361, r=(0,1,0,0,2,1), weight 10";
    return o;
}

// 4. Bijection sweep for every n <= 8 and every k, under 30 seconds.
Outcome criterion4() {
    Outcome o;
    const auto start = Clock::now();
    std::uint64_t tuples = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto rep = bajinv::check_bijection(n, k);
            tuples += rep.permutations_checked;
            if (!rep.passed) {
                o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                       rep.detail);
                return o;
            }
            if (rep.permutations_checked != bajinv::factorial(n - 1)) {
                o.fail("tuple count differs at n=" + std::to_string(n));
                return o;
            }
        }
    }
    const std::chrono::duration<double> dt = Clock::now() - start;
    if (dt.count() >= 30.0) o.fail("sweep took " + std::to_string(dt.count()) + " s");
    o.note = std::to_string(tuples) + " digit tuples, " +
             std::to_string(dt.count()).substr(0, 5) + " s";
    return o;
}

// 5. Identity suite: exhaustive n <= 8, randomized 500 samples for each of
//    n = 20, 50, 200.
Outcome criterion5() {
    Outcome o;
    auto check_one = [&](const std::vector<int>& s) {
        const int n = static_cast<int>(s.size());
        const bajinv::Permutation p(s);
        const auto v = bajinv::v_encode(p).values();

        std::int64_t vsum = 0;
        for (int vi : v) vsum += vi;
        if (oracle::inv_pairs(s) != static_cast<std::int64_t>(n) * (n + 1) / 2 - vsum)
            o.fail("inv identity at n=" + std::to_string(n));

        const auto d = oracle::descents(s);
        std::vector<int> from_v;
        for (int i = 1; i <= n - 1; ++i)
            if (v[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(i - 1)])
                from_v.push_back(i);
        if (from_v != d) o.fail("descent lemma at n=" + std::to_string(n));

        std::int64_t baj_v = 0;
        for (std::int64_t i = 1; i <= n - 1; ++i)
            baj_v += i * (n - i) *
                     (v[static_cast<std::size_t>(i)] <= v[static_cast<std::size_t>(i - 1)]);
        if (baj_v != oracle::baj_descent_sum(s))
            o.fail("baj two-form identity at n=" + std::to_string(n));
    };

    std::uint64_t cases = 0;
    for (int n = 1; n <= 8; ++n)
        oracle::for_all_perms(n, [&](const std::vector<int>& s) {
            check_one(s);
            ++cases;
        });

    std::mt19937_64 rng(0xacce97edULL);
    for (int n : {20, 50, 200})
        for (int rep = 0; rep < 500; ++rep) {
            check_one(oracle::random_perm(n, rng));
            ++cases;
        }

    o.note = std::to_string(cases) + " permutations checked";
    return o;
}

// 6. RHS sanity for n <= 12: value at q=1, degree, palindromicity.
Outcome criterion6() {
    Outcome o;
    for (int n = 1; n <= 12; ++n) {
        const auto p = bajinv::rhs_product(n);
        if (bajinv::eval_at_one(p) != bajinv::factorial(n - 1))
            o.fail("coefficient sum at n=" + std::to_string(n));
        std::int64_t deg = 0;
        for (std::int64_t i = 1; i <= n - 1; ++i) deg += (i - 1) * (n - i);
        if (p.degree() != deg) o.fail("degree at n=" + std::to_string(n));
        if (!bajinv::is_palindromic(p)) o.fail("palindromicity at n=" + std::to_string(n));
    }
    o.note = "eval(1) = (n-1)!, degree, palindromic, n=1..12";
    return o;
}

// 7. Parallel determinism at n = 9: bytewise identical serialized output for
//    parts in {1,2,3,7} and every k.
Outcome criterion7() {
    Outcome o;
    for (int k = 1; k <= 9; ++k) {
        const auto sequential = bajinv::to_json(bajinv::distribution(9, k)).dump();
        for (int parts : {1, 2, 3, 7}) {
            const auto parallel =
                bajinv::to_json(bajinv::parallel_distribution(9, k, parts)).dump();
            if (parallel != sequential) {
                o.fail("k=" + std::to_string(k) + " parts=" + std::to_string(parts));
                return o;
            }
        }
    }
    o.note = "n=9, all k, parts in {1,2,3,7}, serialized bytes compared";
    return o;
}

// 8. Scale headroom (slow): theorem 2 at n = 11, k = 1, parallel, under
//    2 minutes.
Outcome criterion8() {
    Outcome o;
    const int workers =
        std::max(1u, std::thread::hardware_concurrency());
    const auto rep = bajinv::verify_theorem2(11, 1, workers);
    if (!rep.passed) o.fail(rep.detail);
    if (rep.permutations_checked != 3628800) o.fail("expected 3628800 permutations");
    if (rep.elapsed.count() >= 120.0)
        o.fail("took " + std::to_string(rep.elapsed.count()) + " s");
    o.note = "3628800 permutations, parts=" + std::to_string(workers) + ", " +
             std::to_string(rep.elapsed.count()).substr(0, 5) + " s";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    bool skip_slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--skip-slow") == 0) skip_slow = true;

    struct Entry {
        int id;
        const char* title;
        Outcome (*fn)();
        bool slow;
    };
    const Entry entries[] = {
        {1, "theorem 2 coefficient-exact, n=1..9, all k", &criterion1, false},
        {2, "theorem 1 coefficient-exact, n=1..9", &criterion2, false},
        {3, "golden decode chain and pinned statistics", &criterion3, false},
        {4, "bijection sweep, n<=8, all k", &criterion4, false},
        {5, "identity suite, exhaustive n<=8 plus randomized large n", &criterion5, false},
        {6, "product sanity, n<=12", &criterion6, false},
        {7, "parallel determinism, n=9", &criterion7, false},
        {8, "scale headroom, theorem 2 at n=11 (slow)", &criterion8, true},
    };

    int failures = 0;
    for (const auto& e : entries) {
        if (e.slow && skip_slow) {
            std::printf("[SKIP] criterion %d: %s\n", e.id, e.title);
            continue;
        }
        const Outcome o = e.fn();
        if (o.ok) {
            std::printf("[PASS] criterion %d: %s (%s)\n", e.id, e.title,
                        o.note.c_str());
        } else {
            ++failures;
            std::printf("[FAIL] criterion %d: %s (%s)\n", e.id, e.title,
                        o.note.c_str());
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
