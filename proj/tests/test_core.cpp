#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "binpack/core.hpp"
#include "binpack/workload.hpp"
#include "support/test_util.hpp"

using namespace binpack;

TEST_CASE("frequencies: direct counts") {
    FrequencyVector f = frequencies({5, 5, 10}, 10);
    CHECK(f.at(5) == doctest::Approx(2.0 / 3.0));
    CHECK(f.at(10) == doctest::Approx(1.0 / 3.0));
    for (int x = 1; x <= 10; ++x)
        if (x != 5 && x != 10) CHECK(f.at(x) == 0.0);
}

TEST_CASE("frequencies: single size") {
    std::vector<int> seq(17, 1);
    FrequencyVector f = frequencies(seq, 2);
    CHECK(f.at(1) == 1.0);
    CHECK(f.at(2) == 0.0);
}

TEST_CASE("frequencies: Weibull sample sums to one") {
    auto values = sample_weibull({3.0, 1000.0, 42}, 1000);
    auto items = scale_to_capacity(values, 1000.0, 100);
    FrequencyVector f = frequencies(items, 100);
    // independent recomputation of the sum
    double total = 0.0;
    for (int x = 1; x <= 100; ++x) total += f.at(x);
    CHECK(std::fabs(total - 1.0) <= 1e-9);
}

TEST_CASE("frequencies: empty sequence refused") {
    CHECK_THROWS_AS(frequencies({}, 10), std::invalid_argument);
}

TEST_CASE("frequencies: out-of-range item refused") {
    CHECK_THROWS_AS(frequencies({0}, 10), std::invalid_argument);
    CHECK_THROWS_AS(frequencies({11}, 10), std::invalid_argument);
}

TEST_CASE("l1_error: identity and displacement") {
    FrequencyVector f = FrequencyVector::zeros(100);
    f.freq[1] = 1.0;
    CHECK(l1_error(f, f) == 0.0);

    // full mass moved from size 1 to size k-1
    FrequencyVector g = FrequencyVector::zeros(100);
    g.freq[99] = 1.0;
    CHECK(l1_error(f, g) == doctest::Approx(2.0));
}

TEST_CASE("l1_error: hand sum") {
    FrequencyVector f = FrequencyVector::zeros(10);
    f.freq[1] = 0.5;
    f.freq[2] = 0.5;
    FrequencyVector g = FrequencyVector::zeros(10);
    g.freq[1] = 0.25;
    g.freq[2] = 0.25;
    g.freq[3] = 0.5;
    CHECK(l1_error(f, g) == doctest::Approx(1.0));
}

TEST_CASE("l1_error: mismatched dimensions refused") {
    CHECK_THROWS_AS(l1_error(FrequencyVector::zeros(5), FrequencyVector::zeros(6)),
                    std::invalid_argument);
}

TEST_CASE("l1_error is a metric on random triples") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        FrequencyVector a = testutil::random_prediction(rng, 20, 6);
        FrequencyVector b = testutil::random_prediction(rng, 20, 6);
        FrequencyVector c = testutil::random_prediction(rng, 20, 6);
        CHECK(l1_error(a, b) == l1_error(b, a));
        CHECK(l1_error(a, a) == 0.0);
        CHECK(l1_error(a, c) <= l1_error(a, b) + l1_error(b, c) + 1e-12);
        if (l1_error(a, b) == 0.0) CHECK(a.freq == b.freq);
    }
}

TEST_CASE("deviation_hat examples") {
    CHECK(deviation_hat({1.0, 2.0, 7.0}) == 0.0);
    CHECK(deviation_hat({2.5}) == 1.0);
    CHECK(deviation_hat({1.0, 2.0, 1.5}) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(deviation_hat({}), std::invalid_argument);
    CHECK_THROWS_AS(deviation_hat({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("split_fractional examples") {
    SplitSequence s = split_fractional({1.0, 2.5, 3.0});
    CHECK(s.integral == std::vector<int>{1, 3});
    CHECK(s.fractional == std::vector<double>{2.5});

    SplitSequence all_int = split_fractional({4.0, 2.0});
    CHECK(all_int.integral == std::vector<int>{4, 2});
    CHECK(all_int.fractional.empty());

    SplitSequence all_frac = split_fractional({4.25, 2.75});
    CHECK(all_frac.integral.empty());
    CHECK(all_frac.fractional == std::vector<double>{4.25, 2.75});
}

TEST_CASE("split then merge reconstructs 1000 random mixed sequences") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + rng.next_below(30);
        std::vector<double> seq(n);
        for (double& v : seq) {
            double base = 1.0 + static_cast<double>(rng.next_below(9));
            v = rng.next_below(2) == 0 ? base : base + 0.25 + 0.5 * rng.next_double();
        }
        SplitSequence s = split_fractional(seq);
        // merge back by walking the original flags
        std::size_t ii = 0, fi = 0;
        std::vector<double> merged;
        for (double v : seq) {
            if (is_integral_size(v))
                merged.push_back(static_cast<double>(s.integral[ii++]));
            else
                merged.push_back(s.fractional[fi++]);
        }
        CHECK(merged == seq);
        CHECK(ii == s.integral.size());
        CHECK(fi == s.fractional.size());
    }
}

TEST_CASE("consolidation_ratio") {
    std::vector<int> schwerin;
    SplitMix64 rng(3);
    for (int i = 0; i < 50; ++i)
        schwerin.push_back(15 + static_cast<int>(rng.next_below(6)));  // sizes in [15,20]
    schwerin.push_back(15);
    CHECK(consolidation_ratio(schwerin, 100) == 6);
    CHECK(consolidation_ratio({1, 50}, 100) == 100);
    CHECK_THROWS_AS(consolidation_ratio({}, 100), std::invalid_argument);
}

TEST_CASE("BinType canonical form and capacity") {
    BinType t = BinType::from_items({4, 6}, 10);
    CHECK(t.placeholders == std::vector<int>{6, 4});
    CHECK(t.empty == 0);
    CHECK(t.capacity() == 10);
    CHECK(t.placeholder_count() == 2);

    BinType u = BinType::from_items({3}, 10);
    CHECK(u.empty == 7);
}

TEST_CASE("Packing cost counts only non-empty bins") {
    Packing p{10, {}};
    p.bins.push_back(Bin{BinType::from_items({5}, 10), {5}, Provenance::PlainBin});
    p.bins.push_back(Bin{BinType{{5, 5}, 0}, {}, Provenance::PPBin});  // virtual, never occupied
    CHECK(p.bins.size() == 2);
    CHECK(p.cost() == 1);
    CHECK(p.total_load() == 5);
}
