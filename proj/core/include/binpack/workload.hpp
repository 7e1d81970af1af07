#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binpack/core.hpp"

// Input generation and prediction synthesis: seeded Weibull sampling, BPPLIB
// instance files, fixed and evolving sequences, prefix predictions and the
// adversarial fixtures.

namespace binpack {

// Portable 64-bit PRNG (splitmix64). Substreams derived per epoch keep
// evolving sequences reproducible independent of the epoch count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform in the open interval (0, 1).
    double next_double();
    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

struct WeibullSpec {
    double shape = 3.0;
    double scale = 1000.0;
    std::uint64_t seed = 1;
};

// Inverse-transform samples: v = scale * (-ln(1 - u))^(1/shape).
std::vector<double> sample_weibull(const WeibullSpec& spec, std::size_t count);

// Each value v maps to clamp(round(v * k / source_cap), 1, k); rounding is
// half away from zero.
std::vector<int> scale_to_capacity(const std::vector<double>& values, double source_cap, int k);
int scale_one(double value, double source_cap, int k);

// Plain-text instance: item count, capacity, then one size per line.
struct BenchmarkFile {
    std::string path;
    long long n_declared = 0;
    int capacity_declared = 0;
    std::vector<int> sizes;
};

BenchmarkFile load_bpplib(const std::string& path);
void save_sequence(const std::string& path, const std::vector<int>& sizes, int capacity);

enum class SequenceMode { FixedWeibull, FixedFile, EvolvingWeibull, EvolvingFiles, Adversarial };

// Theorem fixtures: Sigma1 = n items of size 1 then n of size k-1 (the
// prediction below is error-free); Sigma2 = 2n items of size 1 (error 1).
enum class AdversarialVariant { Sigma1, Sigma2 };

struct SequenceSpec {
    SequenceMode mode = SequenceMode::FixedWeibull;
    long long n = 0;  // sequence length; for Adversarial, the fixture parameter (output is 2n items)
    int k = 100;
    long long epoch = 50000;
    std::uint64_t seed = 1;
    double weibull_shape = 3.0;
    double weibull_scale = 1000.0;
    AdversarialVariant adversarial = AdversarialVariant::Sigma1;
};

struct GeneratedSequence {
    std::vector<int> items;
    // Divisor applied when scaling raw values into [1, k]; recorded for
    // auditability (0 when epochs used different divisors).
    double scaling_divisor = 1.0;
};

GeneratedSequence make_sequence(const SequenceSpec& spec,
                                const std::vector<BenchmarkFile>& sources = {});

// Mass 1/2 at sizes 1 and k-1, zero elsewhere.
FrequencyVector adversarial_prediction(int k);

struct PrefixPrediction {
    FrequencyVector f_pred;
    double eta = 0.0;
};

// Frequencies of the first b items, with the L1 error against the full
// sequence.
PrefixPrediction prefix_prediction(const std::vector<int>& sequence, long long b, int k);

// Prefix size schedule b = floor(100 * 1.05^i).
long long prefix_size(int i);

// Fractional fixture behind the naive deviation measure's lower bound:
// n items of size k/2 - delta followed by n items of size k/2 + delta,
// with delta = eps / (2n).
std::vector<double> adversarial_fractional(long long n, int k, double eps);

}  // namespace binpack
