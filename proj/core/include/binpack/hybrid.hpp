#pragma once

#include <variant>
#include <vector>

#include "binpack/classic.hpp"
#include "binpack/core.hpp"
#include "binpack/profile.hpp"

// Hybrid(lambda): ProfilePacking combined with a robust algorithm A over
// disjoint bin spaces, routed by per-size item counters. H-Aware: a one-shot
// choice between ProfilePacking and A from an error upper bound.

namespace binpack {

// lambda = num / den, held exactly; float thresholds flip decisions at scale.
struct LambdaRatio {
    long long num = 0;
    long long den = 1;
};

enum class RobustAlgo { FirstFit, BestFit };

struct HybridConfig {
    PPConfig pp{};
    RobustAlgo robust = RobustAlgo::FirstFit;
};

class HybridPacker {
public:
    HybridPacker(const FrequencyVector& f_pred, LambdaRatio lambda, int m, int k,
                 HybridConfig config = {});

    void place(int x);
    std::size_t cost() const;

    long long count(int x) const { return count_[static_cast<std::size_t>(x)]; }
    long long ppcount(int x) const { return ppcount_[static_cast<std::size_t>(x)]; }

    Packing finish();

private:
    bool pp_item(int x) const;

    int k_;
    LambdaRatio lambda_;
    ProfilePacker pp_;
    std::variant<FirstFitPacker, BestFitPacker> robust_;
    std::vector<long long> count_;
    std::vector<long long> ppcount_;
};

Packing hybrid(const std::vector<int>& items, const FrequencyVector& f_pred,
               LambdaRatio lambda, int m, int k, HybridConfig config = {});

enum class HAwareBranch { ProfilePacking, Robust };

struct HAwareResult {
    Packing packing;
    HAwareBranch branch = HAwareBranch::Robust;
    double threshold = 0.0;
};

// Evaluates H < (cA - 1 - eps) / (k * (2 + 5 eps)) once and delegates the
// whole stream to ProfilePacking or to the robust algorithm.
HAwareResult h_aware(const std::vector<int>& items, const FrequencyVector& f_pred,
                     double H, double eps, double cA, int m, int k, HybridConfig config = {});

}  // namespace binpack
