#include "binpack/harness.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "binpack/classic.hpp"
#include "binpack/profile.hpp"

namespace binpack {

namespace {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, const std::string& what) {
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw std::invalid_argument("invalid number for " + what + ": " + std::string(text));
    return v;
}

long long parse_ll(std::string_view text, const std::string& what) {
    long long v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw std::invalid_argument("invalid integer for " + what + ": " + std::string(text));
    return v;
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

LambdaRatio parse_lambda(const std::string& text) {
    LambdaRatio lambda;
    if (auto slash = text.find('/'); slash != std::string::npos) {
        lambda.num = parse_ll(text.substr(0, slash), "lambda numerator");
        lambda.den = parse_ll(text.substr(slash + 1), "lambda denominator");
    } else if (auto dot = text.find('.'); dot != std::string::npos) {
        // decimal literal -> exact rational over a power of ten
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t places = text.size() - dot - 1;
        if (places == 0 || places > 9)
            throw std::invalid_argument("unsupported lambda literal: " + text);
        long long den = 1;
        for (std::size_t i = 0; i < places; ++i) den *= 10;
        lambda.num = parse_ll(digits, "lambda");
        lambda.den = den;
    } else {
        lambda.num = parse_ll(text, "lambda");
        lambda.den = 1;
    }
    if (lambda.den < 1 || lambda.num < 0 || lambda.num > lambda.den)
        throw std::invalid_argument("lambda must be a rational in [0,1]: " + text);
    return lambda;
}

std::string lambda_text(LambdaRatio lambda) {
    return std::to_string(lambda.num) + "/" + std::to_string(lambda.den);
}

struct ResolvedAlgorithm {
    std::string name;
    std::string flat_params;
    bool needs_prediction = false;
    int m = 0;
    LambdaRatio lambda{};
    RobustAlgo robust = RobustAlgo::FirstFit;
    ProfilePlanner planner = ProfilePlanner::FFD;
    double H = 0.0;
    double eps = 0.1;
    double cA = 1.7;
    int w = 0;
    ReplanMode replan = ReplanMode::OnDemand;
};

class ParamReader {
public:
    explicit ParamReader(const AlgorithmSpec& spec) : spec_(spec), params_(spec.params) {}

    std::string take(const std::string& key, const std::string& fallback) {
        auto it = params_.find(key);
        if (it == params_.end()) return fallback;
        std::string value = it->second;
        params_.erase(it);
        return value;
    }

    std::string require(const std::string& key) {
        auto it = params_.find(key);
        if (it == params_.end())
            throw std::invalid_argument("algorithm " + spec_.name + " requires parameter " + key);
        std::string value = it->second;
        params_.erase(it);
        return value;
    }

    void done() const {
        if (!params_.empty())
            throw std::invalid_argument("unknown parameter '" + params_.begin()->first +
                                        "' for algorithm " + spec_.name);
    }

private:
    const AlgorithmSpec& spec_;
    std::map<std::string, std::string> params_;
};

RobustAlgo parse_robust(const std::string& text) {
    if (text == "firstfit") return RobustAlgo::FirstFit;
    if (text == "bestfit") return RobustAlgo::BestFit;
    throw std::invalid_argument("unknown robust algorithm: " + text);
}

ProfilePlanner parse_planner(const std::string& text) {
    if (text == "ffd") return ProfilePlanner::FFD;
    if (text == "exact") return ProfilePlanner::Exact;
    throw std::invalid_argument("unknown planner: " + text);
}

ResolvedAlgorithm resolve_algorithm(const AlgorithmSpec& spec) {
    ResolvedAlgorithm algo;
    algo.name = spec.name;
    ParamReader reader(spec);

    if (spec.name == "firstfit" || spec.name == "bestfit") {
        reader.done();
        return algo;
    }
    if (spec.name == "profilepacking") {
        algo.needs_prediction = true;
        algo.m = static_cast<int>(parse_ll(reader.take("m", "5000"), "m"));
        algo.planner = parse_planner(reader.take("planner", "ffd"));
        reader.done();
        algo.flat_params = "m=" + std::to_string(algo.m);
        return algo;
    }
    if (spec.name == "hybrid") {
        algo.needs_prediction = true;
        algo.lambda = parse_lambda(reader.require("lambda"));
        algo.m = static_cast<int>(parse_ll(reader.take("m", "5000"), "m"));
        algo.robust = parse_robust(reader.take("robust", "firstfit"));
        algo.planner = parse_planner(reader.take("planner", "ffd"));
        reader.done();
        algo.flat_params = "lambda=" + lambda_text(algo.lambda) + ";m=" + std::to_string(algo.m) +
                           ";robust=" + (algo.robust == RobustAlgo::FirstFit ? "firstfit" : "bestfit");
        return algo;
    }
    if (spec.name == "haware") {
        algo.needs_prediction = true;
        algo.H = parse_double(reader.require("H"), "H");
        algo.eps = parse_double(reader.take("eps", "0.1"), "eps");
        algo.cA = parse_double(reader.take("cA", "1.7"), "cA");
        algo.m = static_cast<int>(parse_ll(reader.take("m", "5000"), "m"));
        algo.robust = parse_robust(reader.take("robust", "firstfit"));
        algo.planner = parse_planner(reader.take("planner", "ffd"));
        reader.done();
        algo.flat_params = "H=" + format_double(algo.H) + ";eps=" + format_double(algo.eps) +
                           ";cA=" + format_double(algo.cA) + ";m=" + std::to_string(algo.m) +
                           ";robust=" + (algo.robust == RobustAlgo::FirstFit ? "firstfit" : "bestfit");
        return algo;
    }
    if (spec.name == "adaptive") {
        algo.w = static_cast<int>(parse_ll(reader.require("w"), "w"));
        algo.m = static_cast<int>(parse_ll(reader.take("m", "5000"), "m"));
        std::string replan = reader.take("replan", "on-demand");
        if (replan == "on-demand")
            algo.replan = ReplanMode::OnDemand;
        else if (replan == "epoch")
            algo.replan = ReplanMode::Epoch;
        else
            throw std::invalid_argument("unknown replan mode: " + replan);
        algo.planner = parse_planner(reader.take("planner", "ffd"));
        reader.done();
        algo.flat_params = "w=" + std::to_string(algo.w) + ";m=" + std::to_string(algo.m) +
                           ";replan=" + replan;
        return algo;
    }
    throw std::invalid_argument("unknown algorithm: " + spec.name);
}

std::vector<ResolvedAlgorithm> resolve_algorithms(const ExperimentConfig& config) {
    if (config.algorithms.empty())
        throw std::invalid_argument("config lists no algorithms");
    std::vector<ResolvedAlgorithm> out;
    out.reserve(config.algorithms.size());
    for (const AlgorithmSpec& spec : config.algorithms) out.push_back(resolve_algorithm(spec));
    return out;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig config;
    std::istringstream in(text);
    std::string raw;
    long long line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "sequence.mode") {
            if (value == "fixed_weibull") config.sequence.mode = SequenceMode::FixedWeibull;
            else if (value == "fixed_file") config.sequence.mode = SequenceMode::FixedFile;
            else if (value == "evolving_weibull") config.sequence.mode = SequenceMode::EvolvingWeibull;
            else if (value == "evolving_files") config.sequence.mode = SequenceMode::EvolvingFiles;
            else if (value == "adversarial") config.sequence.mode = SequenceMode::Adversarial;
            else throw std::invalid_argument("unknown sequence.mode: " + value);
        } else if (key == "sequence.n") {
            config.sequence.n = parse_ll(value, key);
        } else if (key == "sequence.k") {
            config.sequence.k = static_cast<int>(parse_ll(value, key));
        } else if (key == "sequence.epoch") {
            config.sequence.epoch = parse_ll(value, key);
        } else if (key == "sequence.weibull_shape") {
            config.sequence.weibull_shape = parse_double(value, key);
        } else if (key == "sequence.weibull_scale") {
            config.sequence.weibull_scale = parse_double(value, key);
        } else if (key == "sequence.adversarial") {
            if (value == "sigma1") config.sequence.adversarial = AdversarialVariant::Sigma1;
            else if (value == "sigma2") config.sequence.adversarial = AdversarialVariant::Sigma2;
            else throw std::invalid_argument("unknown sequence.adversarial: " + value);
        } else if (key == "sequence.files") {
            for (const std::string& p : split(value, ',')) {
                std::string path = trim(p);
                if (!path.empty()) config.sequence_files.push_back(path);
            }
        } else if (key == "prediction") {
            std::vector<std::string> tokens;
            for (const std::string& t : split(value, ' '))
                if (!trim(t).empty()) tokens.push_back(trim(t));
            if (tokens.empty()) throw std::invalid_argument("empty prediction setting");
            const std::string& mode = tokens[0];
            if (mode == "oracle") config.prediction.mode = PredictionMode::Oracle;
            else if (mode == "prefix") config.prediction.mode = PredictionMode::Prefix;
            else if (mode == "prefix_sweep") config.prediction.mode = PredictionMode::PrefixSweep;
            else if (mode == "adversarial") config.prediction.mode = PredictionMode::Adversarial;
            else if (mode == "none") config.prediction.mode = PredictionMode::None;
            else throw std::invalid_argument("unknown prediction mode: " + mode);
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                std::size_t peq = tokens[i].find('=');
                if (peq == std::string::npos)
                    throw std::invalid_argument("prediction parameter must be key=value: " + tokens[i]);
                std::string pkey = tokens[i].substr(0, peq);
                std::string pval = tokens[i].substr(peq + 1);
                if (pkey == "b") config.prediction.b = parse_ll(pval, "prediction.b");
                else if (pkey == "i_lo") config.prediction.i_lo = static_cast<int>(parse_ll(pval, pkey));
                else if (pkey == "i_hi") config.prediction.i_hi = static_cast<int>(parse_ll(pval, pkey));
                else throw std::invalid_argument("unknown prediction parameter: " + pkey);
            }
        } else if (key == "algorithm") {
            std::vector<std::string> tokens;
            for (const std::string& t : split(value, ' '))
                if (!trim(t).empty()) tokens.push_back(trim(t));
            if (tokens.empty()) throw std::invalid_argument("empty algorithm setting");
            AlgorithmSpec spec;
            spec.name = tokens[0];
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                std::size_t peq = tokens[i].find('=');
                if (peq == std::string::npos)
                    throw std::invalid_argument("algorithm parameter must be key=value: " + tokens[i]);
                spec.params[tokens[i].substr(0, peq)] = tokens[i].substr(peq + 1);
            }
            config.algorithms.push_back(std::move(spec));
        } else if (key == "output") {
            config.output_path = value;
        } else if (key == "repetitions") {
            config.repetitions = static_cast<int>(parse_ll(value, key));
        } else if (key == "base_seed") {
            config.base_seed = static_cast<std::uint64_t>(parse_ll(value, key));
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open config file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

void validate_config(const ExperimentConfig& config) {
    std::vector<ResolvedAlgorithm> algos = resolve_algorithms(config);
    if (config.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    if (config.sequence.n < 1) throw std::invalid_argument("sequence.n must be >= 1");

    bool file_mode = config.sequence.mode == SequenceMode::FixedFile ||
                     config.sequence.mode == SequenceMode::EvolvingFiles;
    if (file_mode && config.sequence_files.empty())
        throw std::invalid_argument("file sequence modes require sequence.files");

    if (config.prediction.mode == PredictionMode::Prefix && config.prediction.b < 1)
        throw std::invalid_argument("prefix prediction requires b >= 1");
    if (config.prediction.mode == PredictionMode::PrefixSweep &&
        config.prediction.i_lo > config.prediction.i_hi)
        throw std::invalid_argument("prefix sweep requires i_lo <= i_hi");

    if (config.prediction.mode == PredictionMode::None) {
        for (const ResolvedAlgorithm& algo : algos)
            if (algo.needs_prediction)
                throw std::invalid_argument("algorithm " + algo.name +
                                            " requires a prediction mode other than none");
    }
}

namespace {

struct PredictionCell {
    FrequencyVector f;
    long long b = -1;
    double eta = 0.0;
};

std::vector<PredictionCell> build_cells(const ExperimentConfig& config,
                                        const std::vector<int>& sequence,
                                        const FrequencyVector& truth) {
    std::vector<PredictionCell> cells;
    int k = config.sequence.k;
    switch (config.prediction.mode) {
    case PredictionMode::Oracle:
        cells.push_back({truth, -1, 0.0});
        break;
    case PredictionMode::Prefix: {
        PrefixPrediction p = prefix_prediction(sequence, config.prediction.b, k);
        cells.push_back({std::move(p.f_pred), config.prediction.b, p.eta});
        break;
    }
    case PredictionMode::PrefixSweep: {
        for (int i = config.prediction.i_lo; i <= config.prediction.i_hi; ++i) {
            long long b = prefix_size(i);
            if (b < 1 || b > static_cast<long long>(sequence.size())) continue;
            PrefixPrediction p = prefix_prediction(sequence, b, k);
            cells.push_back({std::move(p.f_pred), b, p.eta});
        }
        break;
    }
    case PredictionMode::Adversarial: {
        FrequencyVector f = adversarial_prediction(k);
        double eta = l1_error(truth, f);
        cells.push_back({std::move(f), -1, eta});
        break;
    }
    case PredictionMode::None:
        break;
    }
    return cells;
}

long long run_algorithm(const ResolvedAlgorithm& algo, const std::vector<int>& sequence,
                        const FrequencyVector* f_pred, int k) {
    if (algo.name == "firstfit") return static_cast<long long>(first_fit(sequence, k).cost());
    if (algo.name == "bestfit") return static_cast<long long>(best_fit(sequence, k).cost());
    if (algo.name == "profilepacking")
        return static_cast<long long>(
            profile_packing(sequence, *f_pred, algo.m, k, {algo.planner}).cost());
    if (algo.name == "hybrid")
        return static_cast<long long>(
            hybrid(sequence, *f_pred, algo.lambda, algo.m, k,
                   {{algo.planner, kExactOptDefaultCap}, algo.robust})
                .cost());
    if (algo.name == "haware")
        return static_cast<long long>(
            h_aware(sequence, *f_pred, algo.H, algo.eps, algo.cA, algo.m, k,
                    {{algo.planner, kExactOptDefaultCap}, algo.robust})
                .packing.cost());
    if (algo.name == "adaptive")
        return static_cast<long long>(
            adaptive(sequence, algo.w, algo.m, k,
                     {algo.planner, kExactOptDefaultCap, algo.replan})
                .cost());
    throw std::logic_error("unresolved algorithm: " + algo.name);
}

std::vector<ExperimentRecord> run_repetition(const ExperimentConfig& config,
                                             const std::vector<ResolvedAlgorithm>& algos,
                                             const std::vector<BenchmarkFile>& sources, int rep) {
    SequenceSpec sspec = config.sequence;
    sspec.seed = config.base_seed + static_cast<std::uint64_t>(rep);
    GeneratedSequence gen = make_sequence(sspec, sources);
    const std::vector<int>& sequence = gen.items;
    const std::uint64_t checksum = sequence_checksum(sequence);

    const long long l2 = l2_bound(sequence, sspec.k);
    const FrequencyVector truth = frequencies(sequence, sspec.k);
    const std::vector<PredictionCell> cells = build_cells(config, sequence, truth);

    std::vector<ExperimentRecord> records;
    for (const ResolvedAlgorithm& algo : algos) {
        // Prediction-free algorithms run one cell per repetition.
        std::size_t cell_count = algo.needs_prediction ? cells.size() : 1;
        for (std::size_t c = 0; c < cell_count; ++c) {
            const PredictionCell* cell = algo.needs_prediction ? &cells[c] : nullptr;

            auto t0 = std::chrono::steady_clock::now();
            long long cost =
                run_algorithm(algo, sequence, cell ? &cell->f : nullptr, sspec.k);
            auto t1 = std::chrono::steady_clock::now();

            if (cost < l2)
                throw std::logic_error("algorithm cost below the L2 lower bound");

            ExperimentRecord rec;
            rec.algorithm = algo.name;
            rec.params = algo.flat_params;
            rec.n = static_cast<long long>(sequence.size());
            rec.k = sspec.k;
            rec.m = algo.m;
            rec.seed = sspec.seed;
            rec.b = cell ? cell->b : -1;
            rec.eta = cell ? cell->eta : 0.0;
            rec.cost = cost;
            rec.l2 = l2;
            rec.runtime_ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
            rec.scaling_divisor = gen.scaling_divisor;
            records.push_back(std::move(rec));
        }
    }

    if (sequence_checksum(sequence) != checksum)
        throw std::logic_error("shared-instance contract violated: sequence mutated");
    return records;
}

int worker_count(int repetitions) {
    unsigned hw = std::thread::hardware_concurrency();
    int threads = hw > 0 ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("BINPACK_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) threads = std::min<long>(threads, cap);
    }
    return std::min(threads, repetitions);
}

void append_csv(const std::string& path, const std::vector<ExperimentRecord>& records) {
    namespace fs = std::filesystem;
    std::error_code ec;
    bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    if (fresh) out << kCsvVersionLine << "\n" << kCsvHeader << "\n";
    for (const ExperimentRecord& rec : records) {
        out << format_record(rec) << "\n";
        if (!out) {
            out.clear();
            out << "#aborted\n";
            out.flush();
            throw std::runtime_error(path + ": write failed, partial file marked");
        }
    }
    out.flush();
    if (!out) throw std::runtime_error(path + ": flush failed");
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    const std::vector<ResolvedAlgorithm> algos = resolve_algorithms(config);

    std::vector<BenchmarkFile> sources;
    sources.reserve(config.sequence_files.size());
    for (const std::string& path : config.sequence_files) sources.push_back(load_bpplib(path));

    const int reps = config.repetitions;
    std::vector<std::vector<ExperimentRecord>> per_rep(static_cast<std::size_t>(reps));

    int threads = worker_count(reps);
    if (threads <= 1) {
        for (int r = 0; r < reps; ++r)
            per_rep[static_cast<std::size_t>(r)] = run_repetition(config, algos, sources, r);
    } else {
        std::atomic<int> next{0};
        std::mutex error_mu;
        std::exception_ptr error;
        auto work = [&] {
            while (true) {
                int r = next.fetch_add(1);
                if (r >= reps) return;
                try {
                    per_rep[static_cast<std::size_t>(r)] =
                        run_repetition(config, algos, sources, r);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<ExperimentRecord> records;
    for (auto& chunk : per_rep)
        records.insert(records.end(), std::make_move_iterator(chunk.begin()),
                       std::make_move_iterator(chunk.end()));

    if (!config.output_path.empty()) append_csv(config.output_path, records);
    return records;
}

std::string format_record(const ExperimentRecord& rec) {
    std::string out;
    out += rec.algorithm;
    out += ',';
    out += rec.params;
    out += ',';
    out += std::to_string(rec.n);
    out += ',';
    out += std::to_string(rec.k);
    out += ',';
    out += std::to_string(rec.m);
    out += ',';
    out += std::to_string(rec.seed);
    out += ',';
    out += std::to_string(rec.b);
    out += ',';
    out += format_double(rec.eta);
    out += ',';
    out += std::to_string(rec.cost);
    out += ',';
    out += std::to_string(rec.l2);
    out += ',';
    out += format_double(rec.runtime_ms);
    out += ',';
    out += format_double(rec.scaling_divisor);
    return out;
}

std::vector<ExperimentRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::vector<ExperimentRecord> records;
    std::string line;
    bool header_seen = false;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        if (!header_seen) {
            if (text != kCsvHeader)
                throw std::runtime_error(path + ": unexpected CSV header at line " +
                                         std::to_string(line_no));
            header_seen = true;
            continue;
        }
        std::vector<std::string> fields = split(text, ',');
        if (fields.size() != 12)
            throw std::runtime_error(path + ": malformed CSV row at line " +
                                     std::to_string(line_no));
        ExperimentRecord rec;
        rec.algorithm = fields[0];
        rec.params = fields[1];
        rec.n = parse_ll(fields[2], "n");
        rec.k = static_cast<int>(parse_ll(fields[3], "k"));
        rec.m = static_cast<int>(parse_ll(fields[4], "m"));
        rec.seed = static_cast<std::uint64_t>(parse_ll(fields[5], "seed"));
        rec.b = parse_ll(fields[6], "b");
        rec.eta = parse_double(fields[7], "eta");
        rec.cost = parse_ll(fields[8], "cost");
        rec.l2 = parse_ll(fields[9], "l2");
        rec.runtime_ms = parse_double(fields[10], "runtime_ms");
        rec.scaling_divisor = parse_double(fields[11], "scaling_divisor");
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<ErrorBucket> average_by_rounded_error(const std::vector<ExperimentRecord>& records) {
    std::map<long long, std::pair<double, long long>> buckets;  // cents -> (cost sum, count)
    for (const ExperimentRecord& rec : records) {
        long long cents = std::llround(rec.eta * 100.0);
        auto& [sum, count] = buckets[cents];
        sum += static_cast<double>(rec.cost);
        count += 1;
    }
    std::vector<ErrorBucket> out;
    out.reserve(buckets.size());
    for (const auto& [cents, agg] : buckets)
        out.push_back({static_cast<double>(cents) / 100.0, agg.first / static_cast<double>(agg.second)});
    return out;
}

namespace {

std::string sanitize_filename(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '=' || c == '-')
            out += c;
        else
            out += '_';
    }
    return out.empty() ? "all" : out;
}

// Pulls "w=<int>" out of a flattened parameter string.
long long param_window(const std::string& params) {
    std::size_t pos = params.rfind("w=", 0) == 0 ? 0 : params.find(";w=");
    if (pos == std::string::npos) return 0;
    std::size_t start = params[pos] == ';' ? pos + 3 : pos + 2;
    std::size_t end = params.find(';', start);
    std::string digits = params.substr(start, end == std::string::npos ? end : end - start);
    try {
        return std::stoll(digits);
    } catch (const std::exception&) {
        return 0;
    }
}

std::string strip_window(const std::string& params) {
    std::size_t pos = params.rfind("w=", 0) == 0 ? 0 : params.find(";w=");
    if (pos == std::string::npos) return params;
    std::size_t start = pos == 0 ? 0 : pos;
    std::size_t value_start = params[pos] == ';' ? pos + 3 : pos + 2;
    std::size_t end = params.find(';', value_start);
    if (pos == 0)
        return end == std::string::npos ? "" : params.substr(end + 1);
    return params.substr(0, start) + (end == std::string::npos ? "" : params.substr(end));
}

}  // namespace

std::vector<std::string> emit_plot_data(const std::vector<ExperimentRecord>& records,
                                        PlotAxis axis, const std::string& out_dir) {
    if (records.empty()) {
        std::cerr << "emit_plot_data: no records, nothing written\n";
        return {};
    }
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    std::map<std::string, std::vector<std::pair<double, double>>> groups;
    for (const ExperimentRecord& rec : records) {
        std::string key = rec.algorithm;
        std::string params = axis == PlotAxis::Window ? strip_window(rec.params) : rec.params;
        if (!params.empty()) key += "_" + params;
        double x = 0.0;
        switch (axis) {
        case PlotAxis::Eta: x = rec.eta; break;
        case PlotAxis::Window: x = static_cast<double>(param_window(rec.params)); break;
        case PlotAxis::Prefix: x = static_cast<double>(rec.b); break;
        }
        groups[key].emplace_back(x, static_cast<double>(rec.cost));
        groups["l2"].emplace_back(x, static_cast<double>(rec.l2));  // reference line
    }

    std::vector<std::string> written;
    for (auto& [key, points] : groups) {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        std::string path = out_dir + "/" + sanitize_filename(key) + ".tsv";
        std::ofstream out(path);
        if (!out) throw std::runtime_error(path + ": cannot open for writing");
        for (const auto& [x, y] : points)
            out << format_double(x) << '\t' << format_double(y) << '\n';
        if (!out) throw std::runtime_error(path + ": write failed");
        written.push_back(std::move(path));
    }
    return written;
}

std::uint64_t sequence_checksum(const std::vector<int>& items) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (int value : items) {
        auto v = static_cast<std::uint32_t>(value);
        for (int shift = 0; shift < 32; shift += 8) {
            hash ^= (v >> shift) & 0xffU;
            hash *= 1099511628211ULL;
        }
    }
    return hash;
}

}  // namespace binpack
