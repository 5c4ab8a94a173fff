// kerrcoupler -- simulate, sweep and analyze the damped Kerr coupler.

#include "kerrcoupler/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

using namespace kerrcoupler;

namespace {

// Flags that map one-to-one onto RunConfig keys.
const std::vector<std::pair<std::string, std::string>> kRunFlags{
    {"--chi", "chi"},           {"--chi-a", "chi_a"},         {"--chi-b", "chi_b"},
    {"--epsilon-re", "epsilon_re"}, {"--epsilon-im", "epsilon_im"}, {"--alpha-re", "alpha_re"},
    {"--alpha-im", "alpha_im"}, {"--gamma", "gamma"},         {"--gamma-a", "gamma_a"},
    {"--gamma-b", "gamma_b"},   {"--nbar", "nbar"},           {"--nbar-a", "nbar_a"},
    {"--nbar-b", "nbar_b"},     {"--dims", "dims"},           {"--dt", "dt"},
    {"--tmax", "t_max"},        {"--record-every", "record_every"}, {"--trace-tol", "trace_drift_tol"},
    {"--init", "init"},         {"--out", "out"},             {"--time-scale", "time_scale"},
    {"--eps", "eps"},           {"--min-duration", "min_duration"},
};

struct RunOptions {
    std::string config_file;
    std::map<std::string, std::string> values;
};

void add_run_options(CLI::App* app, RunOptions& opts) {
    app->add_option("--config", opts.config_file, "key=value configuration file")->check(CLI::ExistingFile);
    for (const auto& [flag, key] : kRunFlags) {
        app->add_option(flag, opts.values[key], "override " + key);
    }
}

RunConfig resolve(const RunOptions& opts, CLI::App* app) {
    RunConfig cfg;
    if (!opts.config_file.empty()) {
        cfg.load_file(opts.config_file);
    }
    // Command-line overrides are applied after the file, in a fixed order.
    for (const auto& [flag, key] : kRunFlags) {
        if (app->count(flag) > 0) {
            cfg.set(key, opts.values.at(key));
        }
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Damped Kerr-coupler entanglement simulator"};
    app.require_subcommand(1);

    RunOptions sim_opts;
    auto* simulate = app.add_subcommand("simulate", "integrate one trajectory and write its CSV");
    add_run_options(simulate, sim_opts);

    RunOptions sweep_opts;
    std::string sweep_param;
    double sweep_from = 0.0;
    double sweep_to = 0.0;
    int sweep_steps = 2;
    int workers = 0;
    auto* sweep = app.add_subcommand("sweep", "run a 1-D parameter sweep and write a long-format map CSV");
    add_run_options(sweep, sweep_opts);
    sweep->add_option("--param", sweep_param, "nbar_a|nbar_b|alpha|gamma_a|gamma_b|epsilon")->required();
    sweep->add_option("--from", sweep_from)->required();
    sweep->add_option("--to", sweep_to)->required();
    sweep->add_option("--steps", sweep_steps)->required();
    sweep->add_option("--workers", workers, "worker threads (default: KERRCOUPLER_WORKERS or hardware)");

    std::string detect_in;
    std::string detect_out;
    DetectorConfig det;
    auto* detect = app.add_subcommand("detect", "find sudden-death intervals and birth events in a trajectory CSV");
    detect->add_option("input", detect_in, "trajectory CSV")->required();
    detect->add_option("--out", detect_out, "event report CSV (default: stdout)");
    detect->add_option("--eps", det.eps, "zero threshold on concurrence");
    detect->add_option("--min-duration", det.min_duration, "minimum death duration in raw time units");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kSuccess : kConfigError;
    }

    try {
        if (*simulate) {
            return cmd_simulate(resolve(sim_opts, simulate), std::cout, std::cerr);
        }
        if (*sweep) {
            SweepConfig sc;
            sc.base = resolve(sweep_opts, sweep);
            sc.param = sweep_param;
            sc.from = sweep_from;
            sc.to = sweep_to;
            sc.steps = sweep_steps;
            const int n = workers > 0 ? workers : default_worker_count();
            return cmd_sweep(sc, sc.base.out, n, std::cout, std::cerr);
        }
        return cmd_detect(detect_in, detect_out, det, std::cout, std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    }
}
