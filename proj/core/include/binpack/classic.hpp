#pragma once

#include <set>
#include <utility>
#include <vector>

#include "binpack/core.hpp"

// Prediction-free baselines and bounds: FirstFit, BestFit, FirstFitDecreasing,
// an exact branch-and-bound solver for small multisets, and the L2 lower bound
// in the Martello-Toth formulation.

namespace binpack {

inline constexpr int kExactOptDefaultCap = 24;

// Incremental FirstFit over integer sizes. Keeps one pointer per size x to the
// first bin with residual capacity >= x; pointers only ever move forward, so
// each item is served in O(1) amortized.
class FirstFitPacker {
public:
    explicit FirstFitPacker(int k, Provenance origin = Provenance::PlainBin);

    void place(int x);
    std::size_t cost() const { return contents_.size(); }
    long long total_load() const { return total_load_; }
    long long pointer_advances() const { return pointer_advances_; }
    int capacity() const { return k_; }

    Packing finish();

private:
    int k_;
    Provenance origin_;
    std::vector<int> residual_;               // per open bin
    std::vector<std::vector<int>> contents_;  // per open bin, arrival order
    std::vector<std::size_t> pointer_;        // per size 1..k
    long long pointer_advances_ = 0;
    long long total_load_ = 0;
};

// Incremental BestFit: minimum-residual bin that still fits, ties broken by
// lowest bin index.
class BestFitPacker {
public:
    explicit BestFitPacker(int k, Provenance origin = Provenance::PlainBin);

    void place(int x);
    std::size_t cost() const { return contents_.size(); }
    long long total_load() const { return total_load_; }

    Packing finish();

private:
    int k_;
    Provenance origin_;
    std::vector<std::vector<int>> contents_;
    std::set<std::pair<int, int>> open_;      // (residual, bin index), residual > 0
    long long total_load_ = 0;
};

Packing first_fit(const std::vector<int>& items, int k);
Packing best_fit(const std::vector<int>& items, int k);

// FirstFit applied to the sizes sorted in non-increasing order.
Packing first_fit_decreasing(std::vector<int> items, int k);

// Minimum-cardinality packing via branch-and-bound, seeded with the FFD
// solution and pruned with the L2 bound. Refuses multisets larger than
// max_items to keep the worst case bounded.
Packing exact_opt(std::vector<int> items, int k, int max_items = kExactOptDefaultCap);

// Martello-Toth L2 lower bound on the optimal number of bins, evaluated at
// every integer threshold in [0, k/2].
long long l2_bound(const std::vector<int>& items, int k);

}  // namespace binpack
