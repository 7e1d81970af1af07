#include "binpack/adaptive.hpp"

#include <iterator>
#include <stdexcept>

namespace binpack {

AdaptivePacker::AdaptivePacker(int w, int m, int k, AdaptiveConfig config)
    : w_(w),
      m_(m),
      k_(k),
      config_(config),
      ring_(static_cast<std::size_t>(w)),
      counts_(static_cast<std::size_t>(k) + 1, 0),
      warmup_(k, Provenance::PlainBin),
      special_(k, Provenance::SpecialBin),
      space_(k),
      in_plan_(static_cast<std::size_t>(k) + 1, false) {
    if (w < 1) throw std::invalid_argument("window length w must be >= 1");
    if (m < 1) throw std::invalid_argument("profile size m must be >= 1");
}

int AdaptivePacker::build_window_plan() {
    // f'_x = c_x / w; the profile count ceil(f'_x * m) is computed in exact
    // integer arithmetic.
    ProfileSet profile;
    profile.m = m_;
    profile.counts.assign(static_cast<std::size_t>(k_) + 1, 0);
    for (int x = 1; x <= k_; ++x) {
        long long c = counts_[static_cast<std::size_t>(x)];
        if (c > 0)
            profile.counts[static_cast<std::size_t>(x)] = (c * m_ + w_ - 1) / w_;
        in_plan_[static_cast<std::size_t>(x)] = c > 0;
    }
    ProfilePlan plan = plan_profile(profile, k_, config_.planner, config_.exact_cap);
    ++plans_built_;
    return space_.register_plan(plan);
}

void AdaptivePacker::place(int x) {
    if (x < 1 || x > k_)
        throw std::invalid_argument("item size " + std::to_string(x) + " outside [1," +
                                    std::to_string(k_) + "]");
    ++served_;
    counts_[static_cast<std::size_t>(x)]++;

    if (served_ <= w_) {
        ring_[static_cast<std::size_t>(served_ - 1)] = x;
        warmup_.place(x);
        if (config_.replan == ReplanMode::Epoch && served_ == w_)
            current_plan_ = build_window_plan();
        return;
    }

    // The item leaving the window is sigma[i - w], stored at the same ring slot.
    std::size_t slot = static_cast<std::size_t>((served_ - 1) % w_);
    counts_[static_cast<std::size_t>(ring_[slot])]--;
    ring_[slot] = x;

    if (config_.replan == ReplanMode::Epoch && served_ % w_ == 0)
        current_plan_ = build_window_plan();

    if (space_.has_nonempty_slot(x)) {
        space_.place_nonempty(x);
        return;
    }
    if (space_.has_empty_slot(x)) {
        space_.place_empty(x);
        return;
    }

    if (config_.replan == ReplanMode::OnDemand) {
        current_plan_ = build_window_plan();
        space_.open_group(current_plan_);
        // The triggering size just entered the window, so c_x >= 1 and the
        // fresh plan is guaranteed to contain an x placeholder.
        if (!space_.has_empty_slot(x))
            throw std::logic_error("adaptive: new plan lacks placeholder for triggering size");
        space_.place_empty(x);
        return;
    }

    // Epoch mode: the current plan can predate the window, so a size may be
    // missing from it; such items fall back to a special FirstFit space.
    if (current_plan_ >= 0 && in_plan_[static_cast<std::size_t>(x)]) {
        space_.open_group(current_plan_);
        space_.place_empty(x);
    } else {
        special_.place(x);
    }
}

std::size_t AdaptivePacker::cost() const {
    return warmup_.cost() + space_.nonempty_bins() + special_.cost();
}

Packing AdaptivePacker::finish() {
    Packing out = warmup_.finish();
    out.capacity = k_;
    space_.drain_bins(out, Provenance::PPBin);
    Packing special = special_.finish();
    out.bins.insert(out.bins.end(), std::make_move_iterator(special.bins.begin()),
                    std::make_move_iterator(special.bins.end()));
    return out;
}

Packing adaptive(const std::vector<int>& items, int w, int m, int k, AdaptiveConfig config) {
    AdaptivePacker packer(w, m, k, config);
    for (int x : items) packer.place(x);
    return packer.finish();
}

}  // namespace binpack
