// Benchmark CLI for the binpack library: config-driven experiment runs,
// sequence generation, the lambda/window sweep protocols and the adversarial
// fixtures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "binpack/adaptive.hpp"
#include "binpack/classic.hpp"
#include "binpack/harness.hpp"
#include "binpack/hybrid.hpp"
#include "binpack/profile.hpp"
#include "binpack/workload.hpp"

using namespace binpack;

namespace {

void print_records_summary(const std::vector<ExperimentRecord>& records,
                           const std::string& output) {
    std::printf("%zu record(s)", records.size());
    if (!output.empty()) std::printf(" -> %s", output.c_str());
    std::printf("\n");
    for (const ExperimentRecord& rec : records) {
        if (records.size() > 24) break;  // keep long sweeps quiet
        std::printf("  %-14s %-40s cost=%-8lld l2=%-8lld eta=%.4f runtime=%.2fms\n",
                    rec.algorithm.c_str(), rec.params.c_str(), rec.cost, rec.l2, rec.eta,
                    rec.runtime_ms);
    }
}

int cmd_run(const std::string& config_path, const std::string& plot_dir,
            const std::string& plot_axis) {
    ExperimentConfig config = parse_config_file(config_path);
    auto records = run_experiment(config);
    print_records_summary(records, config.output_path);
    if (!plot_dir.empty()) {
        PlotAxis axis = PlotAxis::Eta;
        if (plot_axis == "w") axis = PlotAxis::Window;
        else if (plot_axis == "b") axis = PlotAxis::Prefix;
        for (const std::string& path : emit_plot_data(records, axis, plot_dir))
            std::printf("plot series: %s\n", path.c_str());
    }
    return 0;
}

int cmd_generate(const std::string& spec_path, const std::string& out_path,
                 std::uint64_t seed_override, bool has_seed) {
    ExperimentConfig config = parse_config_file(spec_path);
    SequenceSpec spec = config.sequence;
    spec.seed = has_seed ? seed_override : config.base_seed;

    std::vector<BenchmarkFile> sources;
    for (const std::string& path : config.sequence_files) sources.push_back(load_bpplib(path));

    GeneratedSequence gen = make_sequence(spec, sources);
    save_sequence(out_path, gen.items, spec.k);
    std::printf("wrote %zu items (k=%d, seed=%llu, scaling divisor=%g) -> %s\n",
                gen.items.size(), spec.k, static_cast<unsigned long long>(spec.seed),
                gen.scaling_divisor, out_path.c_str());
    std::printf("consolidation ratio: %d\n", consolidation_ratio(gen.items, spec.k));
    return 0;
}

int cmd_sweep_lambda(long long n, int k, int m, int seeds, std::uint64_t base_seed, int i_lo,
                     int i_hi, double shape, double scale, const std::string& out,
                     const std::string& plot_dir) {
    ExperimentConfig config;
    config.sequence.mode = SequenceMode::FixedWeibull;
    config.sequence.n = n;
    config.sequence.k = k;
    config.sequence.weibull_shape = shape;
    config.sequence.weibull_scale = scale;
    config.prediction.mode = PredictionMode::PrefixSweep;
    config.prediction.i_lo = i_lo;
    config.prediction.i_hi = i_hi;
    config.repetitions = seeds;
    config.base_seed = base_seed;
    config.output_path = out;

    config.algorithms.push_back({"firstfit", {}});
    config.algorithms.push_back({"bestfit", {}});
    for (const char* lambda : {"0", "1/4", "1/2", "3/4", "1"})
        config.algorithms.push_back(
            {"hybrid", {{"lambda", lambda}, {"m", std::to_string(m)}}});

    auto records = run_experiment(config);
    print_records_summary(records, out);
    if (!plot_dir.empty())
        for (const std::string& path : emit_plot_data(records, PlotAxis::Eta, plot_dir))
            std::printf("plot series: %s\n", path.c_str());
    return 0;
}

int cmd_sweep_window(long long n, int k, int m, int seeds, std::uint64_t base_seed, int w_lo,
                     int w_hi, int w_count, long long epoch, double scale, const std::string& out,
                     const std::string& plot_dir) {
    ExperimentConfig config;
    config.sequence.mode = SequenceMode::EvolvingWeibull;
    config.sequence.n = n;
    config.sequence.k = k;
    config.sequence.epoch = epoch;
    config.sequence.weibull_scale = scale;
    config.prediction.mode = PredictionMode::None;
    config.repetitions = seeds;
    config.base_seed = base_seed;
    config.output_path = out;

    config.algorithms.push_back({"firstfit", {}});
    config.algorithms.push_back({"bestfit", {}});
    for (int j = 0; j < w_count; ++j) {
        long long w = w_lo;
        if (w_count > 1)
            w += static_cast<long long>(j) * (w_hi - w_lo) / (w_count - 1);
        config.algorithms.push_back(
            {"adaptive", {{"w", std::to_string(w)}, {"m", std::to_string(m)}}});
    }

    auto records = run_experiment(config);
    print_records_summary(records, out);
    if (!plot_dir.empty())
        for (const std::string& path : emit_plot_data(records, PlotAxis::Window, plot_dir))
            std::printf("plot series: %s\n", path.c_str());
    return 0;
}

int cmd_adversarial_theorem3(long long n, int k, int m, const std::string& export_dir) {
    SequenceSpec spec;
    spec.mode = SequenceMode::Adversarial;
    spec.n = n;
    spec.k = k;
    FrequencyVector f = adversarial_prediction(k);

    spec.adversarial = AdversarialVariant::Sigma1;
    auto sigma1 = make_sequence(spec).items;
    spec.adversarial = AdversarialVariant::Sigma2;
    auto sigma2 = make_sequence(spec).items;

    auto pp1 = static_cast<long long>(profile_packing(sigma1, f, m, k).cost());
    auto ff1 = static_cast<long long>(first_fit(sigma1, k).cost());
    auto pp2 = static_cast<long long>(profile_packing(sigma2, f, m, k).cost());
    auto ff2 = static_cast<long long>(first_fit(sigma2, k).cost());
    double eta1 = l1_error(frequencies(sigma1, k), f);
    double eta2 = l1_error(frequencies(sigma2, k), f);

    std::printf("theorem 3 fixture (n=%lld, k=%d, m=%d, prediction mass 1/2 at sizes 1 and %d)\n",
                n, k, m, k - 1);
    std::printf("  sigma1 (n ones, n of size k-1): eta=%.3f OPT=%lld PP=%lld FF=%lld\n", eta1, n,
                pp1, ff1);
    std::printf("  sigma2 (2n ones):               eta=%.3f OPT=%lld PP=%lld FF=%lld\n", eta2,
                2 * n / k, pp2, ff2);
    std::printf("  robustness blow-up PP/FF on sigma2: %.1fx\n",
                static_cast<double>(pp2) / static_cast<double>(ff2));

    if (!export_dir.empty()) {
        save_sequence(export_dir + "/sigma1.txt", sigma1, k);
        save_sequence(export_dir + "/sigma2.txt", sigma2, k);
        std::printf("  fixtures written to %s/sigma{1,2}.txt\n", export_dir.c_str());
    }
    return 0;
}

int cmd_adversarial_theorem5(long long n, int k, int m, double eps,
                             const std::string& export_dir) {
    auto sigma = adversarial_fractional(n, k, eps);
    FrequencyVector f = FrequencyVector::zeros(k);
    f.freq[static_cast<std::size_t>(k / 2)] = 1.0;  // only k/2 predicted

    FractionalPacking packed = profile_packing_fractional(sigma, f, m, k);
    std::printf("theorem 5 fixture (n=%lld, k=%d, eps=%g): items k/2 -/+ eps/(2n)\n", n, k, eps);
    std::printf("  deviation d-hat=%.6f, OPT=%lld\n", deviation_hat(sigma), n);
    std::printf("  cost=%zu (integral %zu + fractional FirstFit %zu)\n", packed.cost(),
                packed.integral_cost(), packed.fractional_cost());

    if (!export_dir.empty()) {
        std::string path = export_dir + "/sigma_frac.txt";
        std::ofstream out(path);
        out << sigma.size() << "\n" << k << "\n";
        for (double v : sigma) out << v << "\n";
        std::printf("  fixture written to %s (fractional sizes, one per line)\n", path.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"learning-augmented online bin packing benchmark runner"};
    app.require_subcommand(1);

    std::string config_path, plot_dir, plot_axis = "eta";
    auto* run = app.add_subcommand("run", "run experiments from a config file");
    run->add_option("--config", config_path, "key-value experiment config")->required();
    run->add_option("--plot-dir", plot_dir, "emit plot series into this directory");
    run->add_option("--plot-x", plot_axis, "plot x axis: eta | w | b")
        ->check(CLI::IsMember({"eta", "w", "b"}));

    std::string gen_spec, gen_out;
    std::uint64_t gen_seed = 1;
    auto* generate = app.add_subcommand("generate", "generate a sequence file from a spec");
    generate->add_option("--spec", gen_spec, "config file with sequence.* keys")->required();
    generate->add_option("--out", gen_out, "output path (item-per-line with n,k header)")
        ->required();
    auto* seed_opt = generate->add_option("--seed", gen_seed, "override the sequence seed");

    long long sl_n = 100000;
    int sl_k = 100, sl_m = 5000, sl_seeds = 1, sl_ilo = 25, sl_ihi = 125;
    std::uint64_t sl_base = 1;
    double sl_shape = 3.0, sl_scale = 1000.0;
    std::string sl_out = "sweep_lambda.csv", sl_plot;
    auto* sweep_lambda =
        app.add_subcommand("sweep-lambda", "hybrid lambda sweep over prefix predictions");
    sweep_lambda->add_option("--n", sl_n, "sequence length");
    sweep_lambda->add_option("--k", sl_k, "bin capacity");
    sweep_lambda->add_option("--m", sl_m, "profile size");
    sweep_lambda->add_option("--seeds", sl_seeds, "number of repetitions");
    sweep_lambda->add_option("--base-seed", sl_base, "first repetition seed");
    sweep_lambda->add_option("--i-lo", sl_ilo, "prefix schedule lower index");
    sweep_lambda->add_option("--i-hi", sl_ihi, "prefix schedule upper index");
    sweep_lambda->add_option("--shape", sl_shape, "Weibull shape");
    sweep_lambda->add_option("--scale", sl_scale, "Weibull scale");
    sweep_lambda->add_option("--out", sl_out, "CSV output path");
    sweep_lambda->add_option("--plot-dir", sl_plot, "emit eta/cost plot series");

    long long sw_n = 200000, sw_epoch = 50000;
    int sw_k = 100, sw_m = 5000, sw_seeds = 1, sw_wlo = 100, sw_whi = 100000, sw_wcount = 100;
    std::uint64_t sw_base = 1;
    double sw_scale = 1000.0;
    std::string sw_out = "sweep_window.csv", sw_plot;
    auto* sweep_window =
        app.add_subcommand("sweep-window", "adaptive window sweep on evolving input");
    sweep_window->add_option("--n", sw_n, "sequence length");
    sweep_window->add_option("--k", sw_k, "bin capacity");
    sweep_window->add_option("--m", sw_m, "profile size");
    sweep_window->add_option("--seeds", sw_seeds, "number of repetitions");
    sweep_window->add_option("--base-seed", sw_base, "first repetition seed");
    sweep_window->add_option("--w-lo", sw_wlo, "smallest window");
    sweep_window->add_option("--w-hi", sw_whi, "largest window");
    sweep_window->add_option("--w-count", sw_wcount, "number of window values (equidistant)");
    sweep_window->add_option("--epoch", sw_epoch, "evolving epoch length");
    sweep_window->add_option("--scale", sw_scale, "Weibull scale");
    sweep_window->add_option("--out", sw_out, "CSV output path");
    sweep_window->add_option("--plot-dir", sw_plot, "emit w/cost plot series");

    int adv_theorem = 3;
    long long adv_n = 10000;
    int adv_k = 100, adv_m = 5000;
    double adv_eps = 1.0;
    std::string adv_export;
    auto* adversarial = app.add_subcommand("adversarial", "run the theorem fixtures");
    adversarial->add_option("--theorem", adv_theorem, "3 (integral) or 5 (fractional)")
        ->check(CLI::IsMember({3, 5}));
    adversarial->add_option("--n", adv_n, "fixture parameter n");
    adversarial->add_option("--k", adv_k, "bin capacity");
    adversarial->add_option("--m", adv_m, "profile size");
    adversarial->add_option("--eps", adv_eps, "deviation parameter (theorem 5)");
    adversarial->add_option("--export-dir", adv_export, "write fixture sequence files here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, plot_dir, plot_axis);
        if (generate->parsed())
            return cmd_generate(gen_spec, gen_out, gen_seed, seed_opt->count() > 0);
        if (sweep_lambda->parsed())
            return cmd_sweep_lambda(sl_n, sl_k, sl_m, sl_seeds, sl_base, sl_ilo, sl_ihi, sl_shape,
                                    sl_scale, sl_out, sl_plot);
        if (sweep_window->parsed())
            return cmd_sweep_window(sw_n, sw_k, sw_m, sw_seeds, sw_base, sw_wlo, sw_whi,
                                    sw_wcount, sw_epoch, sw_scale, sw_out, sw_plot);
        if (adversarial->parsed()) {
            if (adv_theorem == 3)
                return cmd_adversarial_theorem3(adv_n, adv_k, adv_m, adv_export);
            return cmd_adversarial_theorem5(adv_n, adv_k, adv_m, adv_eps, adv_export);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
