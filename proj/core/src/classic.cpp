#include "binpack/classic.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace binpack {

namespace {

Packing collect_bins(int k, Provenance origin, std::vector<std::vector<int>>& contents) {
    Packing out{k, {}};
    out.bins.reserve(contents.size());
    for (auto& items : contents) {
        Bin b;
        b.type = BinType::from_items(items, k);
        b.occupied = std::move(items);
        b.origin = origin;
        out.bins.push_back(std::move(b));
    }
    contents.clear();
    return out;
}

void check_item(int x, int k) {
    if (x < 1 || x > k)
        throw std::invalid_argument("item size " + std::to_string(x) + " outside [1," +
                                    std::to_string(k) + "]");
}

}  // namespace

FirstFitPacker::FirstFitPacker(int k, Provenance origin)
    : k_(k), origin_(origin), pointer_(static_cast<std::size_t>(k) + 1, 0) {
    if (k < 1) throw std::invalid_argument("capacity must be positive");
}

void FirstFitPacker::place(int x) {
    check_item(x, k_);
    // The first bin with residual >= x never moves backwards: residuals only
    // shrink, so the pointer resumes from its last position.
    std::size_t i = pointer_[static_cast<std::size_t>(x)];
    while (i < residual_.size() && residual_[i] < x) {
        ++i;
        ++pointer_advances_;
    }
    if (i == residual_.size()) {
        residual_.push_back(k_);
        contents_.emplace_back();
    }
    residual_[i] -= x;
    contents_[i].push_back(x);
    total_load_ += x;
    pointer_[static_cast<std::size_t>(x)] = i;
}

Packing FirstFitPacker::finish() {
    residual_.clear();
    return collect_bins(k_, origin_, contents_);
}

BestFitPacker::BestFitPacker(int k, Provenance origin) : k_(k), origin_(origin) {
    if (k < 1) throw std::invalid_argument("capacity must be positive");
}

void BestFitPacker::place(int x) {
    check_item(x, k_);
    auto it = open_.lower_bound({x, std::numeric_limits<int>::min()});
    if (it == open_.end()) {
        int idx = static_cast<int>(contents_.size());
        contents_.push_back({x});
        if (k_ - x > 0) open_.emplace(k_ - x, idx);
    } else {
        auto [r, idx] = *it;
        open_.erase(it);
        contents_[static_cast<std::size_t>(idx)].push_back(x);
        if (r - x > 0) open_.emplace(r - x, idx);
    }
    total_load_ += x;
}

Packing BestFitPacker::finish() {
    open_.clear();
    return collect_bins(k_, origin_, contents_);
}

Packing first_fit(const std::vector<int>& items, int k) {
    FirstFitPacker packer(k);
    for (int x : items) packer.place(x);
    return packer.finish();
}

Packing best_fit(const std::vector<int>& items, int k) {
    BestFitPacker packer(k);
    for (int x : items) packer.place(x);
    return packer.finish();
}

Packing first_fit_decreasing(std::vector<int> items, int k) {
    std::sort(items.begin(), items.end(), std::greater<>());
    return first_fit(items, k);
}

namespace {

// Depth-first search over bin assignments for the exact solver. Items arrive
// sorted non-increasing; equal residuals are tried only once per item.
struct ExactSearch {
    int k;
    const std::vector<int>& items;
    std::vector<long long> suffix_total;
    std::vector<int> loads;
    std::vector<int> assign;
    std::vector<int> best_assign;
    std::size_t best;

    void run() { dfs(0, 0); }

    void dfs(std::size_t idx, long long free_space) {
        if (idx == items.size()) {
            best = loads.size();
            best_assign = assign;
            return;
        }
        long long overflow = suffix_total[idx] - free_space;
        std::size_t lb = loads.size();
        if (overflow > 0) lb += static_cast<std::size_t>((overflow + k - 1) / k);
        if (lb >= best) return;

        int x = items[idx];
        int tried[64];
        int tried_n = 0;
        for (std::size_t b = 0; b < loads.size(); ++b) {
            int r = k - loads[b];
            if (r < x) continue;
            bool seen = false;
            for (int t = 0; t < tried_n; ++t)
                if (tried[t] == r) { seen = true; break; }
            if (seen) continue;
            tried[tried_n++] = r;
            loads[b] += x;
            assign[idx] = static_cast<int>(b);
            dfs(idx + 1, free_space - x);
            loads[b] -= x;
        }
        if (loads.size() + 1 < best) {
            loads.push_back(x);
            assign[idx] = static_cast<int>(loads.size()) - 1;
            dfs(idx + 1, free_space + k - x);
            loads.pop_back();
        }
    }
};

}  // namespace

Packing exact_opt(std::vector<int> items, int k, int max_items) {
    validate_items(items, k);
    if (static_cast<int>(items.size()) > max_items)
        throw std::invalid_argument("instance too large for exact solver");
    if (items.empty()) return Packing{k, {}};

    std::sort(items.begin(), items.end(), std::greater<>());

    Packing seed = first_fit_decreasing(items, k);
    long long lower = l2_bound(items, k);
    if (static_cast<long long>(seed.cost()) == lower) return seed;

    ExactSearch search{k, items, {}, {}, {}, {}, seed.cost()};
    search.suffix_total.assign(items.size() + 1, 0);
    for (std::size_t i = items.size(); i-- > 0;)
        search.suffix_total[i] = search.suffix_total[i + 1] + items[i];
    search.assign.assign(items.size(), -1);
    search.run();

    if (search.best_assign.empty()) return seed;

    std::vector<std::vector<int>> contents(search.best);
    for (std::size_t i = 0; i < items.size(); ++i)
        contents[static_cast<std::size_t>(search.best_assign[i])].push_back(items[i]);
    return collect_bins(k, Provenance::PlainBin, contents);
}

long long l2_bound(const std::vector<int>& items, int k) {
    validate_items(items, k);
    if (items.empty()) return 0;

    // suffix_cnt[x] / suffix_sum[x]: number and total size of items >= x.
    std::vector<long long> cnt(static_cast<std::size_t>(k) + 2, 0);
    for (int s : items) cnt[static_cast<std::size_t>(s)]++;
    std::vector<long long> suffix_cnt(static_cast<std::size_t>(k) + 2, 0);
    std::vector<long long> suffix_sum(static_cast<std::size_t>(k) + 2, 0);
    for (int x = k; x >= 1; --x) {
        suffix_cnt[x] = suffix_cnt[x + 1] + cnt[x];
        suffix_sum[x] = suffix_sum[x + 1] + cnt[x] * static_cast<long long>(x);
    }

    const int half = k / 2;
    long long best = 0;
    for (int alpha = 0; alpha <= half; ++alpha) {
        long long j1 = suffix_cnt[k - alpha + 1];
        long long j2 = suffix_cnt[half + 1] - j1;
        long long j2_sum = suffix_sum[half + 1] - suffix_sum[k - alpha + 1];
        long long j3_sum = suffix_sum[std::max(alpha, 1)] - suffix_sum[half + 1];
        long long spare = j2 * static_cast<long long>(k) - j2_sum;
        long long extra = j3_sum - spare;
        long long value = j1 + j2;
        if (extra > 0) value += (extra + k - 1) / k;
        best = std::max(best, value);
    }
    return best;
}

}  // namespace binpack
