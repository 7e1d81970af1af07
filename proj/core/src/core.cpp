#include "binpack/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace binpack {

int BinType::capacity() const {
    int total = empty;
    for (int s : placeholders) total += s;
    return total;
}

BinType BinType::from_items(std::vector<int> items, int k) {
    std::sort(items.begin(), items.end(), std::greater<>());
    int load = std::accumulate(items.begin(), items.end(), 0);
    return BinType{std::move(items), k - load};
}

int Bin::load() const {
    return std::accumulate(occupied.begin(), occupied.end(), 0);
}

std::size_t Packing::cost() const {
    std::size_t n = 0;
    for (const Bin& b : bins)
        if (!b.occupied.empty()) ++n;
    return n;
}

long long Packing::total_load() const {
    long long total = 0;
    for (const Bin& b : bins) total += b.load();
    return total;
}

std::vector<long long> Packing::item_counts() const {
    std::vector<long long> counts(static_cast<std::size_t>(capacity) + 1, 0);
    for (const Bin& b : bins)
        for (int s : b.occupied) counts[static_cast<std::size_t>(s)]++;
    return counts;
}

FrequencyVector FrequencyVector::zeros(int k) {
    return FrequencyVector{k, std::vector<double>(static_cast<std::size_t>(k) + 1, 0.0)};
}

double FrequencyVector::sum() const {
    double total = 0.0;
    for (int x = 1; x <= k; ++x) total += freq[static_cast<std::size_t>(x)];
    return total;
}

void validate_items(const std::vector<int>& sequence, int k) {
    for (int s : sequence)
        if (s < 1 || s > k)
            throw std::invalid_argument("item size " + std::to_string(s) +
                                        " outside [1," + std::to_string(k) + "]");
}

FrequencyVector frequencies(const std::vector<int>& sequence, int k) {
    if (sequence.empty()) throw std::invalid_argument("undefined frequencies: empty sequence");
    validate_items(sequence, k);
    FrequencyVector f = FrequencyVector::zeros(k);
    for (int s : sequence) f.freq[static_cast<std::size_t>(s)] += 1.0;
    const double n = static_cast<double>(sequence.size());
    for (int x = 1; x <= k; ++x) f.freq[static_cast<std::size_t>(x)] /= n;
    return f;
}

double l1_error(const FrequencyVector& f, const FrequencyVector& f_pred) {
    if (f.k != f_pred.k)
        throw std::invalid_argument("l1_error: mismatched dimensions");
    double total = 0.0;
    for (int x = 1; x <= f.k; ++x) total += std::fabs(f.at(x) - f_pred.at(x));
    return total;
}

bool is_integral_size(double value) {
    return value == std::round(value);
}

double deviation_hat(const std::vector<double>& sequence) {
    if (sequence.empty()) throw std::invalid_argument("deviation undefined: empty sequence");
    double fractional = 0.0, total = 0.0;
    for (double v : sequence) {
        if (v <= 0.0) throw std::invalid_argument("deviation undefined: non-positive item size");
        total += v;
        if (!is_integral_size(v)) fractional += v;
    }
    return fractional / total;
}

SplitSequence split_fractional(const std::vector<double>& sequence) {
    SplitSequence out;
    for (double v : sequence) {
        if (is_integral_size(v))
            out.integral.push_back(static_cast<int>(std::llround(v)));
        else
            out.fractional.push_back(v);
    }
    return out;
}

int consolidation_ratio(const std::vector<int>& sequence, int k) {
    if (sequence.empty()) throw std::invalid_argument("consolidation ratio undefined: empty sequence");
    int smallest = *std::min_element(sequence.begin(), sequence.end());
    return k / smallest;
}

}  // namespace binpack
