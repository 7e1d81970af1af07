#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "binpack/adaptive.hpp"
#include "binpack/core.hpp"
#include "binpack/hybrid.hpp"
#include "binpack/workload.hpp"

// The experiment harness: key-value configuration, algorithm dispatch, serving
// loop timing and append-only CSV persistence.

namespace binpack {

enum class PredictionMode { Oracle, Prefix, PrefixSweep, Adversarial, None };

struct PredictionSpec {
    PredictionMode mode = PredictionMode::Oracle;
    long long b = 0;   // Prefix
    int i_lo = 25;     // PrefixSweep: b = floor(100 * 1.05^i), i in [i_lo, i_hi]
    int i_hi = 125;
};

struct AlgorithmSpec {
    std::string name;  // firstfit | bestfit | profilepacking | hybrid | haware | adaptive
    std::map<std::string, std::string> params;
};

struct ExperimentConfig {
    SequenceSpec sequence;
    std::vector<std::string> sequence_files;  // sources for the file modes
    std::vector<AlgorithmSpec> algorithms;
    PredictionSpec prediction;
    std::string output_path;  // empty: records are returned but not persisted
    int repetitions = 1;
    std::uint64_t base_seed = 1;
};

struct ExperimentRecord {
    std::string algorithm;
    std::string params;  // flattened "key=value;..." in a fixed order
    long long n = 0;
    int k = 0;
    int m = 0;
    std::uint64_t seed = 0;
    long long b = -1;
    double eta = 0.0;
    long long cost = 0;
    long long l2 = 0;
    double runtime_ms = 0.0;
    double scaling_divisor = 1.0;

    friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

inline constexpr const char* kCsvVersionLine = "#binpack-ml v1";
inline constexpr const char* kCsvHeader =
    "algorithm,params,n,k,m,seed,b,eta,cost,l2,runtime_ms,scaling_divisor";

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Throws std::invalid_argument on unknown algorithm names, missing parameters
// or inconsistent prediction settings, before anything runs.
void validate_config(const ExperimentConfig& config);

// For each repetition r, generates one sequence with seed base_seed + r,
// computes its L2 bound once, and runs every (algorithm, prediction) cell on
// the identical sequence. Appends one CSV row per cell when output_path is
// set. Repetitions may run in parallel; BINPACK_THREADS caps the worker count.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config);

std::vector<ExperimentRecord> load_records(const std::string& path);
std::string format_record(const ExperimentRecord& record);

struct ErrorBucket {
    double error = 0.0;      // eta rounded to two decimals
    double mean_cost = 0.0;
};

std::vector<ErrorBucket> average_by_rounded_error(const std::vector<ExperimentRecord>& records);

enum class PlotAxis { Eta, Window, Prefix };

// Writes one tab-separated (x, cost) series per algorithm group into out_dir;
// returns the written paths.
std::vector<std::string> emit_plot_data(const std::vector<ExperimentRecord>& records,
                                        PlotAxis axis, const std::string& out_dir);

// FNV-1a over the item sizes; used to assert the shared-instance contract.
std::uint64_t sequence_checksum(const std::vector<int>& items);

}  // namespace binpack
