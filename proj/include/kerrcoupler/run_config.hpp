// run_config.hpp -- resolved configuration of a simulation run.
//
// Configuration is a flat set of key=value pairs. Keys mirror the CouplerParams field
// names (chi_a, nbar_b, alpha_re, ...). Values are plain numbers, or "pi/X" for pi divided
// by the number X.

#pragma once

#include "kerrcoupler/coupler_model.hpp"
#include "kerrcoupler/csv_io.hpp"
#include "kerrcoupler/dynamics_analysis.hpp"
#include "kerrcoupler/master_eq.hpp"

#include <stdexcept>
#include <string>

namespace kerrcoupler {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct InitialState {
    enum class Kind { B1, B2, Fock, File };
    Kind kind{Kind::B1};
    std::size_t n_a{0};
    std::size_t n_b{0};
    std::string path;

    // "B1", "B2", "fock(n_a,n_b)" or "file:PATH"
    static InitialState parse(const std::string& text);
    std::string to_string() const;
};

enum class TimeScale { Raw, Chi };

struct RunConfig {
    CouplerParams params = baseline_params();
    HilbertSpec spec{10, 10};
    IntegratorConfig integrator{};
    InitialState init{};
    DetectorConfig detector{};
    std::string out;
    TimeScale time_scale{TimeScale::Raw};

    // chi = 25, gamma = 0.001, epsilon = pi/chi, alpha = 0, nbar = 0.
    static CouplerParams baseline_params();

    void set(const std::string& key, const std::string& value);
    void load_file(const std::string& path);
    void validate() const;
    ConfigEcho echo() const;

    // Multiplier from raw integration time to displayed time.
    double time_factor() const;
};

double parse_number(const std::string& text);

// Density matrix file: '#' comments, then lines "row,col,re,im" listing entries in the
// composite basis. Unlisted entries are zero. Normalized to unit trace on load.
DensityMatrix load_density_matrix(const std::string& path, const HilbertSpec& spec);
DensityMatrix make_initial_state(const RunConfig& cfg);

}  // namespace kerrcoupler
