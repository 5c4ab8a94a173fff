// dynamics_analysis.hpp -- sudden death / sudden birth detection on concurrence series.

#pragma once

#include "kerrcoupler/master_eq.hpp"

#include <span>
#include <vector>

namespace kerrcoupler {

struct DeathInterval {
    double t_start{0.0};
    double t_end{0.0};
    double duration() const noexcept { return t_end - t_start; }
    bool operator==(const DeathInterval&) const = default;
};

struct DetectorConfig {
    double eps{1e-4};          // C <= eps counts as zero
    double min_duration{0.2};  // shorter zero runs are isolated oscillation nodes

    void validate() const;
};

// Maximal runs of consecutive samples with C <= eps, bounded by the first and last sample
// time of the run, keeping runs with duration >= min_duration.
std::vector<DeathInterval> detect_death_intervals(std::span<const double> times, std::span<const double> conc,
                                                  const DetectorConfig& cfg = {});
std::vector<DeathInterval> detect_death_intervals(const Trajectory& traj, const DetectorConfig& cfg = {});

// One entry per interval that does not reach the end of the series: the first later
// sample time with C > eps.
struct BirthEvent {
    std::size_t interval_index{0};
    double time{0.0};
};

std::vector<BirthEvent> detect_birth_events(const std::vector<DeathInterval>& intervals,
                                            std::span<const double> times, std::span<const double> conc,
                                            double eps = DetectorConfig{}.eps);
std::vector<BirthEvent> detect_birth_events(const std::vector<DeathInterval>& intervals, const Trajectory& traj,
                                            double eps = DetectorConfig{}.eps);

double total_death_duration(const std::vector<DeathInterval>& intervals);

struct EnvelopePoint {
    double t{0.0};      // time at which the window maximum is attained
    double value{0.0};  // maximum of C in the window
};

// Tumbling-window maximum: the time axis is cut into consecutive windows of the given width
// starting at the first sample, and each non-empty window yields its maximum.
std::vector<EnvelopePoint> envelope(std::span<const double> times, std::span<const double> conc, double window);
std::vector<EnvelopePoint> envelope(const Trajectory& traj, double window);

}  // namespace kerrcoupler
