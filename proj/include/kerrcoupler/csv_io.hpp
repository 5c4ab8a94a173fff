// csv_io.hpp -- trajectory, event-report and sweep-map CSV formats.
//
// Every file may start with comment lines "# key=value" echoing the run configuration.
// Numbers are written with 17 significant digits so that doubles round-trip exactly.

#pragma once

#include "kerrcoupler/dynamics_analysis.hpp"
#include "kerrcoupler/master_eq.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kerrcoupler {

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

class CsvError : public std::runtime_error {
public:
    CsvError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline constexpr const char* kTrajectoryHeader = "t,concurrence,fid_B1,fid_B2,fid_B3,trace,purity,mean_na,mean_nb";
inline constexpr const char* kEventHeader = "t_start,t_end,duration,birth_time";
inline constexpr const char* kSweepHeader = "param_value,t,concurrence";

std::string format_double(double v);

void write_echo(std::ostream& os, const ConfigEcho& echo);

// Times are multiplied by time_factor on output (1 for raw time, chi for chi-scaled time).
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, const ConfigEcho& echo = {},
                          double time_factor = 1.0);

struct TrajectoryTable {
    std::map<std::string, std::string> echo;
    Trajectory trajectory;  // lean: diagnostics fields stay at their defaults
};

TrajectoryTable read_trajectory_csv(std::istream& is);

void write_event_csv(std::ostream& os, const std::vector<DeathInterval>& intervals,
                     const std::vector<BirthEvent>& births, const ConfigEcho& echo = {});

}  // namespace kerrcoupler
