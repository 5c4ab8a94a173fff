#include "kerrcoupler/dynamics_analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace kerrcoupler {

namespace {

void check_series(std::span<const double> times, std::span<const double> conc) {
    if (times.empty()) {
        throw std::invalid_argument("dynamics_analysis: empty trajectory");
    }
    if (times.size() != conc.size()) {
        throw std::invalid_argument("dynamics_analysis: times and concurrence lengths differ");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::invalid_argument("dynamics_analysis: times must be strictly increasing");
        }
    }
}

}  // namespace

void DetectorConfig::validate() const {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("DetectorConfig: eps must be positive");
    }
    if (!(min_duration > 0.0)) {
        throw std::invalid_argument("DetectorConfig: min_duration must be positive");
    }
}

std::vector<DeathInterval> detect_death_intervals(std::span<const double> times, std::span<const double> conc,
                                                  const DetectorConfig& cfg) {
    cfg.validate();
    check_series(times, conc);
    std::vector<DeathInterval> out;
    std::size_t i = 0;
    const std::size_t n = times.size();
    while (i < n) {
        // NaN samples (failed sweep points) never count as zero.
        if (!(conc[i] <= cfg.eps)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < n && conc[j + 1] <= cfg.eps) {
            ++j;
        }
        const DeathInterval iv{times[i], times[j]};
        if (iv.duration() >= cfg.min_duration) {
            out.push_back(iv);
        }
        i = j + 1;
    }
    return out;
}

std::vector<DeathInterval> detect_death_intervals(const Trajectory& traj, const DetectorConfig& cfg) {
    const auto c = traj.concurrence();
    return detect_death_intervals(traj.times, c, cfg);
}

std::vector<BirthEvent> detect_birth_events(const std::vector<DeathInterval>& intervals,
                                            std::span<const double> times, std::span<const double> conc,
                                            double eps) {
    if (intervals.empty()) {
        return {};
    }
    check_series(times, conc);
    std::vector<BirthEvent> out;
    for (std::size_t k = 0; k < intervals.size(); ++k) {
        for (std::size_t i = 0; i < times.size(); ++i) {
            if (times[i] > intervals[k].t_end && conc[i] > eps) {
                out.push_back({k, times[i]});
                break;
            }
        }
    }
    return out;
}

std::vector<BirthEvent> detect_birth_events(const std::vector<DeathInterval>& intervals, const Trajectory& traj,
                                            double eps) {
    const auto c = traj.concurrence();
    return detect_birth_events(intervals, traj.times, c, eps);
}

double total_death_duration(const std::vector<DeathInterval>& intervals) {
    double total = 0.0;
    for (const auto& iv : intervals) {
        total += iv.duration();
    }
    return total;
}

std::vector<EnvelopePoint> envelope(std::span<const double> times, std::span<const double> conc, double window) {
    check_series(times, conc);
    double max_gap = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i) {
        max_gap = std::max(max_gap, times[i] - times[i - 1]);
    }
    if (!(window > max_gap)) {
        throw std::invalid_argument("envelope: window must exceed the sampling interval");
    }
    std::vector<EnvelopePoint> out;
    const double t0 = times.front();
    long long current = -1;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const auto bin = static_cast<long long>(std::floor((times[i] - t0) / window));
        if (bin != current) {
            out.push_back({times[i], conc[i]});
            current = bin;
        } else if (conc[i] > out.back().value) {
            out.back() = {times[i], conc[i]};
        }
    }
    return out;
}

std::vector<EnvelopePoint> envelope(const Trajectory& traj, double window) {
    const auto c = traj.concurrence();
    return envelope(traj.times, c, window);
}

}  // namespace kerrcoupler
