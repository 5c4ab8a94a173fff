// commands.hpp -- entry points behind the kerrcoupler command-line tool.

#pragma once

#include "kerrcoupler/sweep.hpp"

#include <iosfwd>
#include <string>

namespace kerrcoupler {

enum ExitCode : int { kSuccess = 0, kConfigError = 1, kNumericalAbort = 2, kIoError = 3 };

struct SimulationOutcome {
    Trajectory trajectory;
    IntegratorConfig used;  // dt may have been tightened after a trace-drift abort
};

// Runs one trajectory. On NumericalAbort dt is halved (and record_every doubled, keeping
// the sample grid) up to max_retries times before giving up.
SimulationOutcome run_simulation(const RunConfig& cfg, int max_retries = 2);

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepConfig& cfg, const std::string& out_path, int workers, std::ostream& out, std::ostream& err);
// min_duration is taken in raw time; it is rescaled by the file's time_factor echo if present.
int cmd_detect(const std::string& in_path, const std::string& out_path, const DetectorConfig& det, std::ostream& out,
               std::ostream& err);

}  // namespace kerrcoupler
