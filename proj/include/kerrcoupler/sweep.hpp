// sweep.hpp -- 1-D parameter sweeps over independent trajectories.

#pragma once

#include "kerrcoupler/run_config.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kerrcoupler {

struct SweepConfig {
    RunConfig base;
    std::string param;  // nbar_a, nbar_b, alpha, gamma_a, gamma_b or epsilon
    double from{0.0};
    double to{0.0};
    int steps{2};

    void validate() const;
    std::vector<double> values() const;
    RunConfig point(double value) const;
    ConfigEcho echo() const;
};

struct SweepPoint {
    double value{0.0};
    std::optional<Trajectory> trajectory;  // empty when the point failed
    std::string error;
};

struct SweepResult {
    std::vector<SweepPoint> points;  // ordered by grid index
    std::vector<double> sample_times;  // raw time grid shared by every point
};

// Sample times evolve() produces for cfg.
std::vector<double> sample_times(const IntegratorConfig& cfg);

// Runs every grid point; points are distributed over `workers` threads and collected by
// grid index, so the result does not depend on the worker count.
SweepResult run_sweep(const SweepConfig& cfg, int workers);

// Long format, one row per (param_value, t); failed points carry NaN concurrence.
void write_sweep_csv(std::ostream& os, const SweepResult& result, const SweepConfig& cfg);

// Worker count from KERRCOUPLER_WORKERS, defaulting to the hardware concurrency.
int default_worker_count();

}  // namespace kerrcoupler
