#include "kerrcoupler/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace kerrcoupler {

SimulationOutcome run_simulation(const RunConfig& cfg, int max_retries) {
    cfg.validate();
    const DensityMatrix rho0 = make_initial_state(cfg);
    const ModelOperators model = build_model(cfg.params, cfg.spec);
    IntegratorConfig ic = cfg.integrator;
    for (int attempt = 0;; ++attempt) {
        try {
            return {evolve(rho0, model, ic), ic};
        } catch (const NumericalAbort&) {
            if (attempt >= max_retries) {
                throw;
            }
            ic.dt /= 2.0;
            ic.record_every *= 2;
        }
    }
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    SimulationOutcome outcome;
    try {
        outcome = run_simulation(cfg);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const NumericalAbort& e) {
        err << "numerical abort: " << e.what() << '\n';
        return kNumericalAbort;
    } catch (const std::domain_error& e) {
        err << "numerical abort: " << e.what() << '\n';
        return kNumericalAbort;
    }

    RunConfig used = cfg;
    used.integrator = outcome.used;
    const Trajectory& traj = outcome.trajectory;
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out);
        if (!f) {
            err << "i/o error: cannot open '" << cfg.out << "' for writing\n";
            return kIoError;
        }
        write_trajectory_csv(f, traj, used.echo(), used.time_factor());
        if (!f) {
            err << "i/o error: failed writing '" << cfg.out << "'\n";
            return kIoError;
        }
    }

    const auto c = traj.concurrence();
    std::vector<double> shown(traj.times);
    for (auto& t : shown) {
        t *= used.time_factor();
    }
    DetectorConfig det = cfg.detector;
    det.min_duration *= used.time_factor();
    const auto intervals = detect_death_intervals(shown, c, det);
    if (outcome.used.dt != cfg.integrator.dt) {
        out << "dt tightened to " << outcome.used.dt << " after trace drift\n";
    }
    out << "samples: " << traj.size() << '\n';
    out << "final trace: " << format_double(traj.records.back().trace) << '\n';
    out << "max concurrence: " << format_double(*std::max_element(c.begin(), c.end())) << '\n';
    out << "death intervals: " << intervals.size() << '\n';
    return kSuccess;
}

int cmd_sweep(const SweepConfig& cfg, const std::string& out_path, int workers, std::ostream& out, std::ostream& err) {
    SweepResult result;
    try {
        result = run_sweep(cfg, workers);
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    std::size_t failed = 0;
    for (const auto& p : result.points) {
        if (!p.trajectory) {
            ++failed;
            err << "point " << cfg.param << "=" << format_double(p.value) << " failed: " << p.error << '\n';
        }
    }
    if (out_path.empty()) {
        write_sweep_csv(out, result, cfg);
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "i/o error: cannot open '" << out_path << "' for writing\n";
            return kIoError;
        }
        write_sweep_csv(f, result, cfg);
        if (!f) {
            err << "i/o error: failed writing '" << out_path << "'\n";
            return kIoError;
        }
        out << "points: " << result.points.size() << ", failed: " << failed << '\n';
    }
    return kSuccess;
}

int cmd_detect(const std::string& in_path, const std::string& out_path, const DetectorConfig& det, std::ostream& out,
               std::ostream& err) {
    std::ifstream in(in_path);
    if (!in) {
        err << "i/o error: cannot open '" << in_path << "'\n";
        return kIoError;
    }
    TrajectoryTable table;
    try {
        table = read_trajectory_csv(in);
    } catch (const CsvError& e) {
        err << in_path << ":" << e.line() << ": " << e.what() << '\n';
        return kConfigError;
    }
    DetectorConfig scaled = det;
    try {
        if (auto it = table.echo.find("time_factor"); it != table.echo.end()) {
            scaled.min_duration *= parse_number(it->second);
        }
        scaled.validate();
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    const auto intervals = detect_death_intervals(table.trajectory, scaled);
    const auto births = detect_birth_events(intervals, table.trajectory, scaled.eps);

    ConfigEcho echo;
    echo.emplace_back("source", in_path);
    echo.emplace_back("eps", format_double(scaled.eps));
    echo.emplace_back("min_duration", format_double(scaled.min_duration));
    if (out_path.empty()) {
        write_event_csv(out, intervals, births, echo);
        return kSuccess;
    }
    std::ofstream f(out_path);
    if (!f) {
        err << "i/o error: cannot open '" << out_path << "' for writing\n";
        return kIoError;
    }
    write_event_csv(f, intervals, births, echo);
    out << intervals.size() << " death interval(s)\n";
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        out << "  [" << intervals[k].t_start << ", " << intervals[k].t_end << "] duration "
            << intervals[k].duration();
        for (const auto& b : births) {
            if (b.interval_index == k) {
                out << ", birth at " << b.time;
            }
        }
        out << '\n';
    }
    return kSuccess;
}

}  // namespace kerrcoupler
