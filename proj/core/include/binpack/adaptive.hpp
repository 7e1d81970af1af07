#pragma once

#include <vector>

#include "binpack/classic.hpp"
#include "binpack/core.hpp"
#include "binpack/profile.hpp"

// Adaptive(w): FirstFit warm-up over the first w items, then ProfilePacking
// machinery whose profile is re-planned from the frequencies observed in the
// last w items whenever placeholders run out.

namespace binpack {

enum class ReplanMode {
    OnDemand,  // rebuild the profile at each new profile group
    Epoch,     // rebuild the profile every w items
};

struct AdaptiveConfig {
    ProfilePlanner planner = ProfilePlanner::FFD;
    int exact_cap = kExactOptDefaultCap;
    ReplanMode replan = ReplanMode::OnDemand;
};

class AdaptivePacker {
public:
    AdaptivePacker(int w, int m, int k, AdaptiveConfig config = {});

    void place(int x);
    std::size_t cost() const;

    long long items_served() const { return served_; }
    const std::vector<long long>& window_counts() const { return counts_; }
    std::size_t plans_built() const { return plans_built_; }
    std::size_t groups_opened() const { return space_.groups_opened(); }

    Packing finish();

private:
    int build_window_plan();

    int w_;
    int m_;
    int k_;
    AdaptiveConfig config_;
    std::vector<int> ring_;           // last w item sizes
    std::vector<long long> counts_;   // per-size counts over the window
    long long served_ = 0;
    FirstFitPacker warmup_;
    FirstFitPacker special_;          // only used in Epoch mode
    PlaceholderSpace space_;
    std::vector<bool> in_plan_;       // current plan's sizes (Epoch mode)
    int current_plan_ = -1;
    std::size_t plans_built_ = 0;
};

Packing adaptive(const std::vector<int>& items, int w, int m, int k, AdaptiveConfig config = {});

}  // namespace binpack
