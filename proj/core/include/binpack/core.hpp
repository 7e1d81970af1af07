#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Shared data model for online bin packing with frequency predictions:
// items, bin types, packings, frequency vectors, prediction error and the
// fractional-item helpers.

namespace binpack {

// Item sizes are integers in [1, k], where k is the bin capacity of the
// enclosing instance.
using ItemSize = int;

// Who opened a bin. Hybrid keeps ProfilePacking bins and robust-algorithm
// bins in disjoint spaces; the provenance makes that auditable.
enum class Provenance : std::uint8_t { PPBin, ABin, SpecialBin, PlainBin };

// A partition of the capacity k into placeholder sizes plus empty space.
// Canonical form keeps placeholders sorted in non-increasing order.
struct BinType {
    std::vector<int> placeholders;
    int empty = 0;

    int capacity() const;
    int placeholder_count() const { return static_cast<int>(placeholders.size()); }

    // Type of a bin filled with exactly `items` (placeholders = items).
    static BinType from_items(std::vector<int> items, int k);

    friend bool operator==(const BinType&, const BinType&) = default;
    friend auto operator<=>(const BinType&, const BinType&) = default;
};

struct Bin {
    BinType type;
    std::vector<int> occupied;   // sizes in arrival order, one per filled placeholder
    Provenance origin = Provenance::PlainBin;

    int load() const;
    friend bool operator==(const Bin&, const Bin&) = default;
};

struct Packing {
    int capacity = 0;
    std::vector<Bin> bins;

    // Lazy accounting: only bins that received at least one item count.
    std::size_t cost() const;
    long long total_load() const;
    // Multiset of packed items, indexed by size (entry 0 unused).
    std::vector<long long> item_counts() const;

    friend bool operator==(const Packing&, const Packing&) = default;
};

// k-dimensional vector of size frequencies, indexed by size x in [1, k]
// (freq[0] is unused and kept at zero). Ground-truth vectors sum to 1;
// predictions only need entries in [0, 1].
struct FrequencyVector {
    int k = 0;
    std::vector<double> freq;

    static FrequencyVector zeros(int k);
    double at(int x) const { return freq[static_cast<std::size_t>(x)]; }
    double sum() const;

    friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;
};

// Throws std::invalid_argument if any item lies outside [1, k].
void validate_items(const std::vector<int>& sequence, int k);

// Empirical frequencies of the sequence: result[x] = count(x) / n.
FrequencyVector frequencies(const std::vector<int>& sequence, int k);

// L1 distance between a frequency vector and its prediction.
double l1_error(const FrequencyVector& f, const FrequencyVector& f_pred);

// True iff the value equals its nearest integer exactly.
bool is_integral_size(double value);

// Total size of non-integral items over total size of all items, in [0, 1].
double deviation_hat(const std::vector<double>& sequence);

struct SplitSequence {
    std::vector<int> integral;       // order-preserving
    std::vector<double> fractional;  // order-preserving
};

// Order-preserving partition of a mixed sequence by integrality.
SplitSequence split_fractional(const std::vector<double>& sequence);

// Maximum number of items that fit into one bin: floor(k / min size).
int consolidation_ratio(const std::vector<int>& sequence, int k);

}  // namespace binpack
