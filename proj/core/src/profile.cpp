#include "binpack/profile.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <iterator>
#include <stdexcept>

namespace binpack {

long long ProfileSet::total_items() const {
    long long total = 0;
    for (long long c : counts) total += c;
    return total;
}

bool ProfilePlan::has_placeholder(int x) const {
    for (const BinType& t : bin_types)
        for (int s : t.placeholders)
            if (s == x) return true;
    return false;
}

ProfileSet build_profile(const FrequencyVector& f_pred, int m, int k) {
    if (m < 1) throw std::invalid_argument("profile size m must be >= 1");
    if (f_pred.k != k) throw std::invalid_argument("prediction dimension does not match k");
    ProfileSet profile;
    profile.m = m;
    profile.counts.assign(static_cast<std::size_t>(k) + 1, 0);
    for (int x = 1; x <= k; ++x) {
        double f = f_pred.at(x);
        if (f <= 0.0) continue;
        // Integer-safe ceiling: a 1e-12 downward nudge keeps exact products
        // like 0.5 * 10 from rounding up one placeholder too many.
        long long c = static_cast<long long>(std::ceil(f * m - 1e-12));
        profile.counts[static_cast<std::size_t>(x)] = std::max<long long>(1, c);
    }
    return profile;
}

ProfilePlan plan_profile(const ProfileSet& profile, int k, ProfilePlanner planner, int exact_cap) {
    std::vector<int> items;
    items.reserve(static_cast<std::size_t>(profile.total_items()));
    for (int x = k; x >= 1; --x)
        for (long long i = 0; i < profile.counts[static_cast<std::size_t>(x)]; ++i)
            items.push_back(x);

    ProfilePlan plan;
    Packing packed;
    if (planner == ProfilePlanner::Exact) {
        if (static_cast<int>(items.size()) <= exact_cap) {
            packed = exact_opt(items, k, exact_cap);
        } else {
            std::cerr << "plan_profile: profile of " << items.size()
                      << " items exceeds exact cap " << exact_cap << ", using FFD\n";
            plan.exact_fallback = true;
            packed = first_fit(items, k);  // items already sorted non-increasing
        }
    } else {
        packed = first_fit(items, k);
    }

    plan.bin_types.reserve(packed.bins.size());
    for (Bin& b : packed.bins) plan.bin_types.push_back(std::move(b.type));
    plan.p = static_cast<int>(plan.bin_types.size());
    return plan;
}

PlaceholderSpace::PlaceholderSpace(int k)
    : k_(k),
      empty_types_by_size_(static_cast<std::size_t>(k) + 1),
      empty_bins_by_size_(static_cast<std::size_t>(k) + 1, 0),
      nonempty_by_size_(static_cast<std::size_t>(k) + 1) {
    if (k < 1) throw std::invalid_argument("capacity must be positive");
}

int PlaceholderSpace::ensure_type(const BinType& type) {
    auto it = type_ids_.find(type);
    if (it != type_ids_.end()) return it->second;

    int id = static_cast<int>(types_.size());
    TypeEntry entry;
    entry.type = type;
    for (int s : type.placeholders) {
        if (!entry.slot_counts.empty() && entry.slot_counts.back().first == s)
            entry.slot_counts.back().second++;
        else
            entry.slot_counts.emplace_back(s, 1);
    }
    types_.push_back(std::move(entry));
    empty_count_.push_back(0);
    type_ids_.emplace(type, id);

    // Keep the per-size candidate lists in tie-break order: more placeholders
    // first, then lexicographically smaller type.
    auto order = [this](int a, int b) {
        int pa = types_[static_cast<std::size_t>(a)].type.placeholder_count();
        int pb = types_[static_cast<std::size_t>(b)].type.placeholder_count();
        if (pa != pb) return pa > pb;
        return types_[static_cast<std::size_t>(a)].type < types_[static_cast<std::size_t>(b)].type;
    };
    for (const auto& [size, count] : types_[static_cast<std::size_t>(id)].slot_counts) {
        auto& list = empty_types_by_size_[static_cast<std::size_t>(size)];
        list.insert(std::lower_bound(list.begin(), list.end(), id, order), id);
    }
    return id;
}

int PlaceholderSpace::register_plan(const ProfilePlan& plan) {
    std::map<int, long long> per_type;
    for (const BinType& t : plan.bin_types) per_type[ensure_type(t)]++;
    plans_.emplace_back(per_type.begin(), per_type.end());
    return static_cast<int>(plans_.size()) - 1;
}

void PlaceholderSpace::open_group(int plan_id) {
    for (const auto& [tid, count] : plans_[static_cast<std::size_t>(plan_id)]) {
        empty_count_[static_cast<std::size_t>(tid)] += count;
        empty_bin_total_ += count;
        for (const auto& [size, slots] : types_[static_cast<std::size_t>(tid)].slot_counts)
            empty_bins_by_size_[static_cast<std::size_t>(size)] += count;
    }
    ++groups_opened_;
}

bool PlaceholderSpace::has_nonempty_slot(int x) const {
    return !nonempty_by_size_[static_cast<std::size_t>(x)].empty();
}

bool PlaceholderSpace::has_empty_slot(int x) const {
    return empty_bins_by_size_[static_cast<std::size_t>(x)] > 0;
}

int PlaceholderSpace::find_free_slot(OpenBin& bin, int x) const {
    for (std::size_t i = 0; i < bin.free_slots.size(); ++i)
        if (bin.free_slots[i].first == x) return static_cast<int>(i);
    return -1;
}

void PlaceholderSpace::place_nonempty(int x) {
    auto& candidates = nonempty_by_size_[static_cast<std::size_t>(x)];
    auto it = candidates.begin();
    auto [free_count, bid] = *it;
    candidates.erase(it);

    OpenBin& bin = bins_[static_cast<std::size_t>(bid)];
    int slot = find_free_slot(bin, x);
    bin.free_slots[static_cast<std::size_t>(slot)].second--;
    if (bin.free_slots[static_cast<std::size_t>(slot)].second == 0) {
        bin.free_slots[static_cast<std::size_t>(slot)] = bin.free_slots.back();
        bin.free_slots.pop_back();
    } else {
        candidates.emplace(free_count - 1, bid);
    }
    bin.occupied.push_back(x);
}

void PlaceholderSpace::place_empty(int x) {
    const auto& candidates = empty_types_by_size_[static_cast<std::size_t>(x)];
    int tid = -1;
    for (int id : candidates) {
        if (empty_count_[static_cast<std::size_t>(id)] > 0) {
            tid = id;
            break;
        }
    }
    if (tid < 0) throw std::logic_error("place_empty: no empty bin with a matching placeholder");

    const TypeEntry& entry = types_[static_cast<std::size_t>(tid)];
    empty_count_[static_cast<std::size_t>(tid)]--;
    empty_bin_total_--;
    for (const auto& [size, slots] : entry.slot_counts)
        empty_bins_by_size_[static_cast<std::size_t>(size)]--;

    OpenBin bin;
    bin.type_id = tid;
    bin.free_slots = entry.slot_counts;
    int slot = find_free_slot(bin, x);
    bin.free_slots[static_cast<std::size_t>(slot)].second--;
    if (bin.free_slots[static_cast<std::size_t>(slot)].second == 0) {
        bin.free_slots[static_cast<std::size_t>(slot)] = bin.free_slots.back();
        bin.free_slots.pop_back();
    }
    bin.occupied.push_back(x);

    int bid = static_cast<int>(bins_.size());
    for (const auto& [size, free] : bin.free_slots)
        nonempty_by_size_[static_cast<std::size_t>(size)].emplace(free, bid);
    bins_.push_back(std::move(bin));
}

void PlaceholderSpace::drain_bins(Packing& out, Provenance origin) {
    out.bins.reserve(out.bins.size() + bins_.size());
    for (OpenBin& b : bins_) {
        Bin bin;
        bin.type = types_[static_cast<std::size_t>(b.type_id)].type;
        bin.occupied = std::move(b.occupied);
        bin.origin = origin;
        out.bins.push_back(std::move(bin));
    }
    bins_.clear();
}

ProfilePacker::ProfilePacker(const FrequencyVector& f_pred, int m, int k, PPConfig config)
    : k_(k), space_(k), special_(k, Provenance::SpecialBin) {
    ProfileSet profile = build_profile(f_pred, m, k);
    plan_ = plan_profile(profile, k, config.planner, config.exact_cap);
    in_plan_.assign(static_cast<std::size_t>(k) + 1, false);
    for (int x = 1; x <= k; ++x)
        in_plan_[static_cast<std::size_t>(x)] = profile.counts[static_cast<std::size_t>(x)] > 0;
    plan_id_ = space_.register_plan(plan_);
}

void ProfilePacker::place(int x) {
    if (x < 1 || x > k_)
        throw std::invalid_argument("item size " + std::to_string(x) + " outside [1," +
                                    std::to_string(k_) + "]");
    if (!in_plan_[static_cast<std::size_t>(x)]) {
        special_.place(x);
        return;
    }
    if (space_.has_nonempty_slot(x)) {
        space_.place_nonempty(x);
        return;
    }
    if (!space_.has_empty_slot(x)) space_.open_group(plan_id_);
    space_.place_empty(x);
}

bool ProfilePacker::has_nonempty_slot(int x) const {
    return in_plan_[static_cast<std::size_t>(x)] && space_.has_nonempty_slot(x);
}

Packing ProfilePacker::finish() {
    Packing out{k_, {}};
    space_.drain_bins(out, Provenance::PPBin);
    Packing special = special_.finish();
    out.bins.insert(out.bins.end(), std::make_move_iterator(special.bins.begin()),
                    std::make_move_iterator(special.bins.end()));
    return out;
}

Packing profile_packing(const std::vector<int>& items, const FrequencyVector& f_pred,
                        int m, int k, PPConfig config) {
    ProfilePacker packer(f_pred, m, k, config);
    for (int x : items) packer.place(x);
    return packer.finish();
}

RealFirstFit::RealFirstFit(double capacity) : capacity_(capacity) {
    if (!(capacity > 0.0)) throw std::invalid_argument("capacity must be positive");
}

void RealFirstFit::place(double v) {
    if (!(v > 0.0) || v > capacity_)
        throw std::invalid_argument("fractional item size outside (0, capacity]");
    for (std::size_t i = 0; i < residual_.size(); ++i) {
        if (residual_[i] >= v) {
            residual_[i] -= v;
            bins_[i].push_back(v);
            return;
        }
    }
    residual_.push_back(capacity_ - v);
    bins_.push_back({v});
}

FractionalPacking profile_packing_fractional(const std::vector<double>& items,
                                             const FrequencyVector& f_pred, int m, int k,
                                             PPConfig config) {
    ProfilePacker packer(f_pred, m, k, config);
    RealFirstFit fractional(static_cast<double>(k));
    for (double v : items) {
        if (!(v > 0.0) || v > static_cast<double>(k))
            throw std::invalid_argument("fractional item size outside (0, k]");
        if (is_integral_size(v))
            packer.place(static_cast<int>(std::llround(v)));
        else
            fractional.place(v);
    }
    return FractionalPacking{packer.finish(), fractional.take_bins()};
}

}  // namespace binpack
