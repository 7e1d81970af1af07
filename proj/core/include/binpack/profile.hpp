#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "binpack/classic.hpp"
#include "binpack/core.hpp"

// ProfilePacking: profile-set construction from predicted frequencies, the
// profile plan (a packing of the profile set into placeholder bin types),
// lazily opened profile groups, and the special-item FirstFit fallback.

namespace binpack {

// Multiset with ceil(f'_x * m) items of size x for every x in [1, k].
struct ProfileSet {
    int m = 0;
    std::vector<long long> counts;  // indexed by size, entry 0 unused

    long long total_items() const;
    bool empty() const { return total_items() == 0; }
};

enum class ProfilePlanner { Exact, FFD };

// The packing of the profile set: one BinType per bin, p bins per group.
struct ProfilePlan {
    std::vector<BinType> bin_types;
    int p = 0;
    bool exact_fallback = false;  // Exact was requested but the set was too large

    bool has_placeholder(int x) const;
};

ProfileSet build_profile(const FrequencyVector& f_pred, int m, int k);

ProfilePlan plan_profile(const ProfileSet& profile, int k,
                         ProfilePlanner planner = ProfilePlanner::FFD,
                         int exact_cap = kExactOptDefaultCap);

struct PPConfig {
    ProfilePlanner planner = ProfilePlanner::FFD;
    int exact_cap = kExactOptDefaultCap;
};

// Bookkeeping for virtually opened profile-group bins, shared by
// ProfilePacking, Hybrid and Adaptive.
//
// Empty bins are never materialized: they are per-type counters, so opening a
// group costs O(distinct bin types). A bin becomes a real object on first
// occupancy, migrates to the non-empty index, and never goes back.
class PlaceholderSpace {
public:
    explicit PlaceholderSpace(int k);

    // Registers a plan's bin types; returns a plan id for open_group.
    int register_plan(const ProfilePlan& plan);
    void open_group(int plan_id);

    bool has_nonempty_slot(int x) const;
    bool has_empty_slot(int x) const;

    // Occupies a free placeholder of size x in a non-empty bin: fewest free
    // x-placeholders first, then lowest bin index.
    void place_nonempty(int x);

    // Occupies a placeholder of size x in a virtually open empty bin,
    // materializing it. Ties among eligible types favor more placeholders,
    // then lexicographically smaller types.
    void place_empty(int x);

    std::size_t nonempty_bins() const { return bins_.size(); }
    std::size_t groups_opened() const { return groups_opened_; }
    long long empty_bin_total() const { return empty_bin_total_; }

    // Moves the materialized bins into `out` in materialization order.
    void drain_bins(Packing& out, Provenance origin);

private:
    struct TypeEntry {
        BinType type;
        std::vector<std::pair<int, int>> slot_counts;  // (size, placeholders of that size)
    };
    struct OpenBin {
        int type_id;
        std::vector<std::pair<int, int>> free_slots;   // (size, free placeholders)
        std::vector<int> occupied;
    };

    int ensure_type(const BinType& type);
    int find_free_slot(OpenBin& bin, int x) const;

    int k_;
    std::vector<TypeEntry> types_;
    std::map<BinType, int> type_ids_;
    std::vector<std::vector<std::pair<int, long long>>> plans_;  // (type id, bins per group)
    std::vector<long long> empty_count_;                         // per type id
    std::vector<std::vector<int>> empty_types_by_size_;          // tie-break order per size
    std::vector<long long> empty_bins_by_size_;                  // empty bins holding size x
    std::vector<std::set<std::pair<int, int>>> nonempty_by_size_;
    std::vector<OpenBin> bins_;
    std::size_t groups_opened_ = 0;
    long long empty_bin_total_ = 0;
};

// Streaming ProfilePacking with lazy profile groups. Items whose size has no
// placeholder in the plan are special and go to a disjoint FirstFit space.
class ProfilePacker {
public:
    ProfilePacker(const FrequencyVector& f_pred, int m, int k, PPConfig config = {});

    void place(int x);
    bool has_nonempty_slot(int x) const;

    std::size_t cost() const { return space_.nonempty_bins() + special_.cost(); }
    std::size_t groups_opened() const { return space_.groups_opened(); }
    long long open_empty_bins() const { return space_.empty_bin_total(); }
    const ProfilePlan& plan() const { return plan_; }
    int capacity() const { return k_; }

    Packing finish();

private:
    int k_;
    ProfilePlan plan_;
    std::vector<bool> in_plan_;
    PlaceholderSpace space_;
    FirstFitPacker special_;
    int plan_id_;
};

Packing profile_packing(const std::vector<int>& items, const FrequencyVector& f_pred,
                        int m, int k, PPConfig config = {});

// Real-valued FirstFit used for the fractional fallback.
class RealFirstFit {
public:
    explicit RealFirstFit(double capacity);

    void place(double v);
    std::size_t cost() const { return bins_.size(); }
    std::vector<std::vector<double>> take_bins() { return std::move(bins_); }

private:
    double capacity_;
    std::vector<double> residual_;
    std::vector<std::vector<double>> bins_;
};

// ProfilePacking over a mixed integral/fractional stream: integral items run
// through ProfilePacking, fractional items through a disjoint real-valued
// FirstFit space.
struct FractionalPacking {
    Packing packing;  // placeholder and special bins
    std::vector<std::vector<double>> fractional_bins;

    std::size_t integral_cost() const { return packing.cost(); }
    std::size_t fractional_cost() const { return fractional_bins.size(); }
    std::size_t cost() const { return integral_cost() + fractional_cost(); }
};

FractionalPacking profile_packing_fractional(const std::vector<double>& items,
                                             const FrequencyVector& f_pred, int m, int k,
                                             PPConfig config = {});

}  // namespace binpack
