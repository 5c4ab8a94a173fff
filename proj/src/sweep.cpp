#include "kerrcoupler/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <thread>

namespace kerrcoupler {

void SweepConfig::validate() const {
    static const std::vector<std::string> names{"nbar_a", "nbar_b", "alpha", "gamma_a", "gamma_b", "epsilon"};
    if (std::find(names.begin(), names.end(), param) == names.end()) {
        throw ConfigError("sweep: unknown parameter '" + param + "'");
    }
    if (steps < 2) {
        throw ConfigError("sweep: steps must be >= 2");
    }
    if (!(from <= to)) {
        throw ConfigError("sweep: from must not exceed to");
    }
    for (double v : values()) {
        point(v).validate();
    }
}

std::vector<double> SweepConfig::values() const {
    std::vector<double> v(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        v[static_cast<std::size_t>(i)] = from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    return v;
}

RunConfig SweepConfig::point(double value) const {
    RunConfig cfg = base;
    if (param == "alpha") {
        cfg.params.alpha.real(value);
    } else if (param == "epsilon") {
        cfg.params.epsilon.real(value);
    } else {
        cfg.set(param, format_double(value));
    }
    return cfg;
}

ConfigEcho SweepConfig::echo() const {
    ConfigEcho e = base.echo();
    e.emplace_back("sweep_param", param);
    e.emplace_back("sweep_from", format_double(from));
    e.emplace_back("sweep_to", format_double(to));
    e.emplace_back("sweep_steps", std::to_string(steps));
    return e;
}

std::vector<double> sample_times(const IntegratorConfig& cfg) {
    std::vector<double> t{0.0};
    const long long steps = cfg.total_steps();
    for (long long k = 1; k <= steps; ++k) {
        if (k % cfg.record_every == 0 || k == steps) {
            t.push_back(static_cast<double>(k) * cfg.dt);
        }
    }
    return t;
}

SweepResult run_sweep(const SweepConfig& cfg, int workers) {
    cfg.validate();
    SweepResult result;
    result.sample_times = sample_times(cfg.base.integrator);
    const auto values = cfg.values();
    result.points.resize(values.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < values.size(); i = next++) {
            SweepPoint& p = result.points[i];
            p.value = values[i];
            try {
                const RunConfig rc = cfg.point(values[i]);
                p.trajectory = evolve(make_initial_state(rc), build_model(rc.params, rc.spec), rc.integrator);
            } catch (const std::exception& e) {
                p.trajectory.reset();
                p.error = e.what();
            }
        }
    };
    const int n = std::max(1, std::min<int>(workers, static_cast<int>(values.size())));
    if (n == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int k = 0; k < n; ++k) {
            pool.emplace_back(work);
        }
    }
    return result;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result, const SweepConfig& cfg) {
    write_echo(os, cfg.echo());
    os << kSweepHeader << '\n';
    const double factor = cfg.base.time_factor();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto& p : result.points) {
        for (std::size_t i = 0; i < result.sample_times.size(); ++i) {
            const double c = p.trajectory ? p.trajectory->records[i].concurrence : nan;
            os << format_double(p.value) << ',' << format_double(result.sample_times[i] * factor) << ','
               << format_double(c) << '\n';
        }
    }
}

int default_worker_count() {
    if (const char* env = std::getenv("KERRCOUPLER_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return static_cast<int>(v);
        }
        throw ConfigError("KERRCOUPLER_WORKERS must be an integer >= 1");
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace kerrcoupler
