#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "binpack/classic.hpp"
#include "binpack/profile.hpp"
#include "binpack/workload.hpp"
#include "support/naive_reference.hpp"
#include "support/test_util.hpp"

using namespace binpack;

namespace {

FrequencyVector point_mass(int k, std::initializer_list<std::pair<int, double>> entries) {
    FrequencyVector f = FrequencyVector::zeros(k);
    for (auto [x, p] : entries) f.freq[static_cast<std::size_t>(x)] = p;
    return f;
}

}  // namespace

TEST_CASE("build_profile: ceilings and degenerate cases") {
    ProfileSet p = build_profile(point_mass(10, {{1, 0.5}, {9, 0.5}}), 10, 10);
    CHECK(p.counts[1] == 5);
    CHECK(p.counts[9] == 5);
    CHECK(p.total_items() == 10);

    ProfileSet empty = build_profile(FrequencyVector::zeros(10), 10, 10);
    CHECK(empty.empty());

    ProfileSet thirds = build_profile(
        point_mass(10, {{2, 1.0 / 3.0}, {3, 1.0 / 3.0}, {5, 1.0 / 3.0}}), 100, 10);
    CHECK(thirds.counts[2] == 34);
    CHECK(thirds.counts[3] == 34);
    CHECK(thirds.counts[5] == 34);

    // any positive predicted frequency yields at least one placeholder
    ProfileSet tiny = build_profile(point_mass(10, {{4, 1e-9}}), 10, 10);
    CHECK(tiny.counts[4] == 1);
}

TEST_CASE("plan_profile: exact and FFD plans") {
    ProfileSet pair;
    pair.m = 2;
    pair.counts.assign(11, 0);
    pair.counts[5] = 2;
    ProfilePlan exact = plan_profile(pair, 10, ProfilePlanner::Exact);
    CHECK(exact.p == 1);
    CHECK(exact.bin_types[0] == BinType{{5, 5}, 0});

    ProfileSet mix;
    mix.m = 6;
    mix.counts.assign(11, 0);
    mix.counts[6] = 3;
    mix.counts[4] = 3;
    ProfilePlan ffd = plan_profile(mix, 10, ProfilePlanner::FFD);
    CHECK(ffd.p == 3);
    for (const BinType& t : ffd.bin_types) CHECK(t == BinType{{6, 4}, 0});
    CHECK(ffd.has_placeholder(6));
    CHECK(!ffd.has_placeholder(5));
}

TEST_CASE("plan_profile: oversized exact request falls back to FFD") {
    ProfileSet big;
    big.m = 100;
    big.counts.assign(11, 0);
    big.counts[3] = 100;
    ProfilePlan plan = plan_profile(big, 10, ProfilePlanner::Exact, 24);
    CHECK(plan.exact_fallback);
    CHECK(plan.p == 34);  // three 3s per bin, one leftover
}

TEST_CASE("plan_profile: Weibull profile plan is stable across runs") {
    auto values = sample_weibull({3.0, 1000.0, 5}, 5000);
    auto items = scale_to_capacity(values, 1000.0, 100);
    FrequencyVector f = frequencies(items, 100);
    ProfileSet p1 = build_profile(f, 5000, 100);
    ProfileSet p2 = build_profile(f, 5000, 100);
    CHECK(p1.counts == p2.counts);
    ProfilePlan plan1 = plan_profile(p1, 100);
    ProfilePlan plan2 = plan_profile(p2, 100);
    CHECK(plan1.bin_types == plan2.bin_types);
    CHECK(plan1.p > 0);
}

TEST_CASE("profile_packing: two-group hand trace") {
    ProfilePacker packer(point_mass(10, {{5, 1.0}}), 2, 10);
    CHECK(packer.plan().p == 1);

    std::size_t costs[4];
    int i = 0;
    for (int x : {5, 5, 5, 5}) {
        packer.place(x);
        costs[i++] = packer.cost();
    }
    CHECK(costs[0] == 1);  // opens group 1, occupies
    CHECK(costs[1] == 1);  // fills the same bin
    CHECK(costs[2] == 2);  // opens group 2
    CHECK(costs[3] == 2);
    CHECK(packer.groups_opened() == 2);
    CHECK(packer.open_empty_bins() == 0);  // no virtual remainder

    Packing p = packer.finish();
    CHECK(p.cost() == 2);
    CHECK(testutil::valid_packing(p, {5, 5, 5, 5}));
    for (const Bin& b : p.bins) CHECK(b.origin == Provenance::PPBin);
}

TEST_CASE("profile_packing: sizes outside the profile are special") {
    Packing p = profile_packing({3, 3}, point_mass(10, {{7, 1.0}}), 2, 10);
    CHECK(p.cost() == 1);
    REQUIRE(p.bins.size() == 1);
    CHECK(p.bins[0].origin == Provenance::SpecialBin);
    CHECK(p.bins[0].occupied == std::vector<int>{3, 3});
}

TEST_CASE("profile_packing: all-zero prediction sends everything to FirstFit") {
    SplitMix64 rng(31);
    auto seq = testutil::random_items(rng, 300, 20);
    Packing p = profile_packing(seq, FrequencyVector::zeros(20), 100, 20);
    CHECK(p.cost() == first_fit(seq, 20).cost());
    for (const Bin& b : p.bins) CHECK(b.origin == Provenance::SpecialBin);
}

TEST_CASE("profile_packing: whole profile copies cost copies * p under exact planning") {
    const int k = 10;
    std::vector<int> base = {5, 5, 3, 3, 4};
    FrequencyVector f = frequencies(base, k);
    PPConfig config{ProfilePlanner::Exact, kExactOptDefaultCap};

    ProfilePacker probe(f, static_cast<int>(base.size()), k, config);
    int p = probe.plan().p;
    CHECK(p == 2);

    SplitMix64 rng(33);
    for (int copies : {1, 2, 5}) {
        std::vector<int> stream;
        for (int c = 0; c < copies; ++c) stream.insert(stream.end(), base.begin(), base.end());
        for (std::size_t i = stream.size(); i > 1; --i)
            std::swap(stream[i - 1], stream[rng.next_below(i)]);
        Packing packed = profile_packing(stream, f, static_cast<int>(base.size()), k, config);
        CHECK(packed.cost() == static_cast<std::size_t>(copies * p));
    }
}

TEST_CASE("profile_packing: lazy cost is monotone and steps by at most one") {
    SplitMix64 rng(34);
    auto seq = testutil::random_items(rng, 400, 15);
    FrequencyVector f = testutil::random_prediction(rng, 15, 6);
    ProfilePacker packer(f, 40, 15, {});
    std::size_t prev = 0;
    for (int x : seq) {
        packer.place(x);
        std::size_t now = packer.cost();
        CHECK(now >= prev);
        CHECK(now - prev <= 1);
        prev = now;
    }
    CHECK(packer.groups_opened() <= seq.size());
}

TEST_CASE("profile_packing: special items and placeholder items never share bins") {
    SplitMix64 rng(35);
    const int k = 12;
    FrequencyVector f = point_mass(k, {{4, 0.5}, {7, 0.3}});
    auto seq = testutil::random_items(rng, 500, k);
    Packing p = profile_packing(seq, f, 30, k);
    for (const Bin& b : p.bins) {
        if (b.origin == Provenance::SpecialBin) {
            for (int s : b.occupied) CHECK((s != 4 && s != 7));
        } else {
            CHECK(b.origin == Provenance::PPBin);
            for (int s : b.occupied) CHECK((s == 4 || s == 7));
        }
    }
    CHECK(testutil::valid_packing(p, seq));
}

TEST_CASE("profile_packing agrees with the explicit-bin simulator") {
    SplitMix64 rng(36);
    for (int trial = 0; trial < 80; ++trial) {
        int k = 6 + static_cast<int>(rng.next_below(12));
        int m = 5 + static_cast<int>(rng.next_below(60));
        auto seq = testutil::random_items(rng, 1 + rng.next_below(250), k);
        FrequencyVector f = testutil::random_prediction(rng, k, 1 + static_cast<int>(rng.next_below(5)));

        naive::ProfilePackingSim sim(f, m, k);
        ProfilePacker packer(f, m, k, {});
        for (int x : seq) {
            sim.place(x);
            packer.place(x);
            REQUIRE(sim.cost() == packer.cost());
        }
        CHECK(sim.groups == packer.groups_opened());
    }
}

TEST_CASE("profile_packing is deterministic") {
    SplitMix64 rng(37);
    auto seq = testutil::random_items(rng, 800, 40);
    FrequencyVector f = testutil::random_prediction(rng, 40, 10);
    Packing a = profile_packing(seq, f, 200, 40);
    Packing b = profile_packing(seq, f, 200, 40);
    CHECK(a == b);
}

TEST_CASE("profile_packing_fractional: all-integral equals profile_packing bit for bit") {
    SplitMix64 rng(38);
    auto seq = testutil::random_items(rng, 300, 20);
    std::vector<double> as_doubles(seq.begin(), seq.end());
    FrequencyVector f = testutil::random_prediction(rng, 20, 5);
    FractionalPacking fp = profile_packing_fractional(as_doubles, f, 50, 20);
    CHECK(fp.fractional_bins.empty());
    CHECK(fp.packing == profile_packing(seq, f, 50, 20));
}

TEST_CASE("profile_packing_fractional: all-fractional equals real-valued FirstFit") {
    SplitMix64 rng(39);
    std::vector<double> seq(200);
    for (double& v : seq) v = 0.5 + rng.next_double() * 18.0 + 0.25;
    FrequencyVector f = testutil::random_prediction(rng, 20, 5);
    FractionalPacking fp = profile_packing_fractional(seq, f, 50, 20);
    CHECK(fp.integral_cost() == 0);
    CHECK(fp.fractional_cost() == naive::real_first_fit_cost(seq, 20.0));
}

TEST_CASE("profile_packing_fractional: mixed input composes the two spaces") {
    // deviation 1/3 fixture from the core module
    std::vector<double> seq = {1.0, 2.0, 1.5};
    CHECK(deviation_hat(seq) == doctest::Approx(1.0 / 3.0));

    FrequencyVector f = point_mass(4, {{1, 0.5}, {2, 0.5}});
    FractionalPacking fp = profile_packing_fractional(seq, f, 4, 4);
    Packing integral_only = profile_packing({1, 2}, f, 4, 4);
    CHECK(fp.integral_cost() == integral_only.cost());
    CHECK(fp.fractional_cost() == naive::real_first_fit_cost({1.5}, 4.0));
    CHECK(fp.cost() == fp.integral_cost() + fp.fractional_cost());

    CHECK_THROWS_AS(profile_packing_fractional({0.0}, f, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(profile_packing_fractional({4.5}, f, 4, 4), std::invalid_argument);
}

TEST_CASE("profile_packing rejects out-of-range items") {
    ProfilePacker packer(point_mass(10, {{5, 1.0}}), 2, 10);
    CHECK_THROWS_AS(packer.place(0), std::invalid_argument);
    CHECK_THROWS_AS(packer.place(11), std::invalid_argument);
}
