#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "binpack/classic.hpp"
#include "binpack/workload.hpp"
#include "support/naive_reference.hpp"
#include "support/test_util.hpp"

using namespace binpack;

TEST_CASE("first_fit: hand traces") {
    CHECK(first_fit({6, 6, 6, 4, 4, 4}, 10).cost() == 3);

    std::vector<int> full(7, 10);
    CHECK(first_fit(full, 10).cost() == 7);

    CHECK_THROWS_AS(first_fit({0}, 10), std::invalid_argument);
    CHECK_THROWS_AS(first_fit({11}, 10), std::invalid_argument);
}

TEST_CASE("first_fit: ones then large items regression") {
    // n items of size 1 followed by n items of size k-1
    const int k = 100, n = 1000;
    std::vector<int> seq(n, 1);
    seq.insert(seq.end(), n, k - 1);
    Packing p = first_fit(seq, k);
    CHECK(p.cost() == naive::first_fit_cost(seq, k));
    // 10 bins of a hundred 1s (full), then each 99 opens its own bin
    CHECK(p.cost() == 1010);
    CHECK(testutil::valid_packing(p, seq));
}

TEST_CASE("first_fit matches the naive scan on random streams") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        int k = 5 + static_cast<int>(rng.next_below(60));
        auto seq = testutil::random_items(rng, 1 + rng.next_below(300), k);
        Packing p = first_fit(seq, k);
        CHECK(p.cost() == naive::first_fit_cost(seq, k));
        CHECK(testutil::valid_packing(p, seq));
    }
}

TEST_CASE("first_fit structural bound and pointer instrumentation") {
    SplitMix64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 10 + static_cast<int>(rng.next_below(90));
        auto seq = testutil::random_items(rng, 50 + rng.next_below(400), k);
        FirstFitPacker packer(k);
        long long total = 0;
        for (int x : seq) {
            packer.place(x);
            total += x;
        }
        CHECK(static_cast<double>(packer.cost()) <
              2.0 * static_cast<double>(total) / static_cast<double>(k) + 1.0);
        CHECK(packer.pointer_advances() <=
              static_cast<long long>(k) * static_cast<long long>(packer.cost()));

        // at most one bin is at most half full
        int half_full = 0;
        for (const Bin& b : packer.finish().bins)
            if (2 * b.load() <= k) ++half_full;
        CHECK(half_full <= 1);
    }
}

TEST_CASE("best_fit: hand traces") {
    CHECK(best_fit({5, 4, 5, 4}, 10).cost() == 2);
    CHECK(best_fit({7}, 10).cost() == 1);
}

TEST_CASE("best_fit matches the naive scan and stays in the sanity envelope") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 10 + static_cast<int>(rng.next_below(90));
        auto seq = testutil::random_items(rng, 200, k);
        Packing p = best_fit(seq, k);
        CHECK(p.cost() == naive::best_fit_cost(seq, k));
        CHECK(testutil::valid_packing(p, seq));
        long long lower = l2_bound(seq, k);
        std::size_t ff = first_fit(seq, k).cost();
        CHECK(static_cast<long long>(p.cost()) >= lower);
        CHECK(p.cost() <= ff + 10);
    }
}

TEST_CASE("first_fit_decreasing: hand traces") {
    CHECK(first_fit_decreasing({7, 6, 3, 4}, 10).cost() == 2);
    CHECK(first_fit_decreasing({}, 10).cost() == 0);
}

TEST_CASE("first_fit_decreasing within the classical guarantee of exact") {
    SplitMix64 rng(24);
    int ffd_not_worse_than_ff = 0, trials = 500;
    for (int trial = 0; trial < trials; ++trial) {
        const int k = 12;
        auto seq = testutil::random_items(rng, 2 + rng.next_below(7), k, 1, 12);
        std::size_t opt = exact_opt(seq, k).cost();
        std::size_t ffd = first_fit_decreasing(seq, k).cost();
        CHECK(ffd <= opt + (opt * 2 + 8) / 9 + 1);
        if (ffd <= first_fit(seq, k).cost()) ffd_not_worse_than_ff++;
    }
    // recorded as a statistic, not asserted: FFD can lose to FF on some multisets
    MESSAGE("FFD <= FF on ", ffd_not_worse_than_ff, " of ", trials, " random instances");
}

TEST_CASE("exact_opt: hand traces") {
    CHECK(exact_opt({6, 6, 6, 4, 4, 4}, 10).cost() == 3);
    CHECK(exact_opt({5, 5, 5}, 10).cost() == 2);
    std::vector<int> too_big(30, 1);
    CHECK_THROWS_WITH_AS(exact_opt(too_big, 10), "instance too large for exact solver",
                         std::invalid_argument);
}

TEST_CASE("exact_opt equals exhaustive minimum on tiny instances") {
    SplitMix64 rng(25);
    for (int trial = 0; trial < 150; ++trial) {
        const int k = 10;
        auto seq = testutil::random_items(rng, 1 + rng.next_below(7), k);
        Packing p = exact_opt(seq, k);
        CHECK(p.cost() == naive::exact_min_bins(seq, k));
        CHECK(testutil::valid_packing(p, seq));
    }
}

TEST_CASE("exact_opt is order-invariant") {
    SplitMix64 rng(26);
    for (int trial = 0; trial < 30; ++trial) {
        const int k = 10;
        auto seq = testutil::random_items(rng, 8, k);
        std::size_t cost = exact_opt(seq, k).cost();
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            for (std::size_t i = seq.size(); i > 1; --i)
                std::swap(seq[i - 1], seq[rng.next_below(i)]);
            CHECK(exact_opt(seq, k).cost() == cost);
        }
    }
}

TEST_CASE("l2_bound: hand traces") {
    CHECK(l2_bound({6, 6, 6}, 10) == 3);
    CHECK(l2_bound(std::vector<int>(10, 1), 10) == 1);
    CHECK(l2_bound({}, 10) == 0);
}

TEST_CASE("cross-oracle consistency: l2 <= exact <= FFD on random multisets") {
    SplitMix64 rng(27);
    int l2_tight = 0, trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        const int k = 10;
        auto seq = testutil::random_items(rng, 1 + rng.next_below(8), k);
        long long lower = l2_bound(seq, k);
        long long total = 0;
        for (int s : seq) total += s;
        CHECK(lower >= (total + k - 1) / k);
        auto opt = static_cast<long long>(exact_opt(seq, k).cost());
        auto ffd = static_cast<long long>(first_fit_decreasing(seq, k).cost());
        CHECK(lower <= opt);
        CHECK(opt <= ffd);
        if (lower == opt) l2_tight++;
    }
    MESSAGE("L2 bound tight on ", l2_tight, " of ", trials, " instances");
}
