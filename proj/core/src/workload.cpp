#include "binpack/workload.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace binpack {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += kGolden);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    // 53 random bits, shifted into (0, 1) so the Weibull inverse transform
    // never sees u = 0 or u = 1.
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    return next() % bound;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (kGolden * (index + 1)));
    return mixer.next();
}

namespace {

double weibull_draw(SplitMix64& rng, double shape, double scale) {
    double u = rng.next_double();
    return scale * std::pow(-std::log1p(-u), 1.0 / shape);
}

}  // namespace

std::vector<double> sample_weibull(const WeibullSpec& spec, std::size_t count) {
    if (!(spec.shape > 0.0)) throw std::invalid_argument("weibull shape must be positive");
    if (!(spec.scale > 0.0)) throw std::invalid_argument("weibull scale must be positive");
    SplitMix64 rng(spec.seed);
    std::vector<double> values(count);
    for (double& v : values) v = weibull_draw(rng, spec.shape, spec.scale);
    return values;
}

int scale_one(double value, double source_cap, int k) {
    long long scaled = std::llround(value * static_cast<double>(k) / source_cap);
    return static_cast<int>(std::clamp<long long>(scaled, 1, k));
}

std::vector<int> scale_to_capacity(const std::vector<double>& values, double source_cap, int k) {
    if (!(source_cap > 0.0)) throw std::invalid_argument("source capacity must be positive");
    std::vector<int> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = scale_one(values[i], source_cap, k);
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& path, long long line, const std::string& what) {
    throw std::runtime_error(path + ": parse error at line " + std::to_string(line) + ": " + what);
}

enum class ReadStatus { Ok, Malformed, Eof };

ReadStatus read_value(std::istream& in, long long& line, long long& out) {
    std::string text;
    while (std::getline(in, text)) {
        ++line;
        // tolerate CRLF and surrounding whitespace
        std::size_t begin = text.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = text.find_last_not_of(" \t\r");
        std::string token = text.substr(begin, end - begin + 1);
        std::size_t used = 0;
        try {
            out = std::stoll(token, &used);
        } catch (const std::exception&) {
            return ReadStatus::Malformed;
        }
        return used == token.size() ? ReadStatus::Ok : ReadStatus::Malformed;
    }
    return ReadStatus::Eof;
}

long long expect_value(std::istream& in, const std::string& path, long long& line,
                       const std::string& what) {
    long long value = 0;
    switch (read_value(in, line, value)) {
    case ReadStatus::Ok:
        return value;
    case ReadStatus::Malformed:
        parse_fail(path, line, "malformed " + what);
    case ReadStatus::Eof:
        parse_fail(path, line + 1, "file ends before " + what);
    }
    parse_fail(path, line, "unreachable");
}

}  // namespace

BenchmarkFile load_bpplib(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");

    BenchmarkFile file;
    file.path = path;
    long long line = 0;

    long long n = expect_value(in, path, line, "item count");
    if (n < 1) parse_fail(path, line, "item count must be positive");

    long long cap = expect_value(in, path, line, "capacity");
    if (cap < 1) parse_fail(path, line, "capacity must be positive");

    file.n_declared = n;
    file.capacity_declared = static_cast<int>(cap);
    file.sizes.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        long long s = expect_value(in, path, line, "item size");
        if (s < 1 || s > cap)
            parse_fail(path, line, "item size " + std::to_string(s) + " exceeds capacity " +
                                       std::to_string(cap));
        file.sizes.push_back(static_cast<int>(s));
    }
    return file;
}

void save_sequence(const std::string& path, const std::vector<int>& sizes, int capacity) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    out << sizes.size() << "\n" << capacity << "\n";
    for (int s : sizes) out << s << "\n";
    if (!out) throw std::runtime_error(path + ": write failed");
}

namespace {

// Draws one block of Weibull values and scales it so the largest value lands
// on k, matching how the Weibull bin packing benchmarks tie the capacity to
// the item range. Returns the divisor used.
double append_weibull_scaled(std::vector<int>& items, SplitMix64& rng, double shape, double scale,
                             int k, long long count) {
    std::vector<double> values(static_cast<std::size_t>(count));
    double max_value = 0.0;
    for (double& v : values) {
        v = weibull_draw(rng, shape, scale);
        max_value = std::max(max_value, v);
    }
    for (double v : values) items.push_back(scale_one(v, max_value, k));
    return max_value;
}

}  // namespace

GeneratedSequence make_sequence(const SequenceSpec& spec, const std::vector<BenchmarkFile>& sources) {
    if (spec.n < 1) throw std::invalid_argument("sequence length must be >= 1");
    if (spec.k < 1) throw std::invalid_argument("capacity must be positive");

    GeneratedSequence out;
    switch (spec.mode) {
    case SequenceMode::FixedWeibull: {
        SplitMix64 rng(substream_seed(spec.seed, 0));
        out.items.reserve(static_cast<std::size_t>(spec.n));
        out.scaling_divisor = append_weibull_scaled(out.items, rng, spec.weibull_shape,
                                                    spec.weibull_scale, spec.k, spec.n);
        break;
    }
    case SequenceMode::FixedFile: {
        if (sources.empty()) throw std::invalid_argument("file mode requires at least one source");
        SplitMix64 rng(substream_seed(spec.seed, 0));
        const BenchmarkFile& file = sources[rng.next_below(sources.size())];
        out.items.reserve(static_cast<std::size_t>(spec.n));
        double cap = static_cast<double>(file.capacity_declared);
        for (long long i = 0; i < spec.n; ++i) {
            int s = file.sizes[rng.next_below(file.sizes.size())];
            out.items.push_back(scale_one(s, cap, spec.k));
        }
        out.scaling_divisor = cap;
        break;
    }
    case SequenceMode::EvolvingWeibull: {
        if (spec.epoch < 1) throw std::invalid_argument("epoch length must be >= 1");
        out.items.reserve(static_cast<std::size_t>(spec.n));
        long long produced = 0;
        for (std::uint64_t e = 0; produced < spec.n; ++e) {
            SplitMix64 rng(substream_seed(spec.seed, e));
            double shape = 1.0 + 3.0 * rng.next_double();  // uniform in [1, 4]
            long long len = std::min<long long>(spec.epoch, spec.n - produced);
            append_weibull_scaled(out.items, rng, shape, spec.weibull_scale, spec.k, len);
            produced += len;
        }
        out.scaling_divisor = 0.0;  // per-epoch divisors differ
        break;
    }
    case SequenceMode::EvolvingFiles: {
        if (sources.empty()) throw std::invalid_argument("file mode requires at least one source");
        if (spec.epoch < 1) throw std::invalid_argument("epoch length must be >= 1");
        out.items.reserve(static_cast<std::size_t>(spec.n));
        long long produced = 0;
        for (std::uint64_t e = 0; produced < spec.n; ++e) {
            SplitMix64 rng(substream_seed(spec.seed, e));
            const BenchmarkFile& file = sources[rng.next_below(sources.size())];
            double cap = static_cast<double>(file.capacity_declared);
            long long len = std::min<long long>(spec.epoch, spec.n - produced);
            for (long long i = 0; i < len; ++i) {
                int s = file.sizes[rng.next_below(file.sizes.size())];
                out.items.push_back(scale_one(s, cap, spec.k));
            }
            produced += len;
        }
        out.scaling_divisor = 0.0;  // per-epoch divisors differ
        break;
    }
    case SequenceMode::Adversarial: {
        if (spec.k < 3) throw std::invalid_argument("adversarial fixtures need k >= 3");
        out.items.reserve(static_cast<std::size_t>(2 * spec.n));
        if (spec.adversarial == AdversarialVariant::Sigma1) {
            out.items.assign(static_cast<std::size_t>(spec.n), 1);
            out.items.insert(out.items.end(), static_cast<std::size_t>(spec.n), spec.k - 1);
        } else {
            out.items.assign(static_cast<std::size_t>(2 * spec.n), 1);
        }
        out.scaling_divisor = 1.0;
        break;
    }
    }
    return out;
}

FrequencyVector adversarial_prediction(int k) {
    if (k < 3) throw std::invalid_argument("adversarial prediction needs k >= 3");
    FrequencyVector f = FrequencyVector::zeros(k);
    f.freq[1] = 0.5;
    f.freq[static_cast<std::size_t>(k - 1)] = 0.5;
    return f;
}

PrefixPrediction prefix_prediction(const std::vector<int>& sequence, long long b, int k) {
    if (b < 1 || b > static_cast<long long>(sequence.size()))
        throw std::invalid_argument("prefix size out of range");
    std::vector<int> prefix(sequence.begin(), sequence.begin() + b);
    PrefixPrediction out;
    out.f_pred = frequencies(prefix, k);
    out.eta = l1_error(frequencies(sequence, k), out.f_pred);
    return out;
}

long long prefix_size(int i) {
    double b = std::floor(100.0 * std::pow(1.05, i));
    if (b >= 9.0e18) return std::numeric_limits<long long>::max();
    return static_cast<long long>(b);
}

std::vector<double> adversarial_fractional(long long n, int k, double eps) {
    if (n < 1) throw std::invalid_argument("fixture parameter n must be >= 1");
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("fixture needs even k >= 2");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    double half = static_cast<double>(k) / 2.0;
    double delta = eps / (2.0 * static_cast<double>(n));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(2 * n));
    out.assign(static_cast<std::size_t>(n), half - delta);
    out.insert(out.end(), static_cast<std::size_t>(n), half + delta);
    return out;
}

}  // namespace binpack
