#include "kerrcoupler/run_config.hpp"

#include "kerrcoupler/entanglement.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

namespace kerrcoupler {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& key, const std::string& text) {
    const double v = parse_number(text);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e6) {
        throw ConfigError(key + ": expected a nonnegative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

double parse_number(const std::string& raw) {
    const std::string text = trim(raw);
    if (text.rfind("pi/", 0) == 0) {
        const double denom = parse_number(text.substr(3));
        if (denom == 0.0) {
            throw ConfigError("division by zero in '" + text + "'");
        }
        return std::numbers::pi / denom;
    }
    if (text.empty()) {
        throw ConfigError("empty numeric value");
    }
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v)) {
        throw ConfigError("malformed number '" + text + "'");
    }
    return v;
}

InitialState InitialState::parse(const std::string& raw) {
    const std::string text = trim(raw);
    InitialState s;
    if (text == "B1") {
        s.kind = Kind::B1;
        return s;
    }
    if (text == "B2") {
        s.kind = Kind::B2;
        return s;
    }
    if (text.rfind("file:", 0) == 0) {
        s.kind = Kind::File;
        s.path = text.substr(5);
        if (s.path.empty()) {
            throw ConfigError("init: empty file path");
        }
        return s;
    }
    static const std::regex fock(R"(fock\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    std::smatch m;
    if (std::regex_match(text, m, fock)) {
        s.kind = Kind::Fock;
        s.n_a = std::stoul(m[1]);
        s.n_b = std::stoul(m[2]);
        return s;
    }
    throw ConfigError("init: expected B1, B2, fock(n_a,n_b) or file:PATH, got '" + text + "'");
}

std::string InitialState::to_string() const {
    switch (kind) {
        case Kind::B1: return "B1";
        case Kind::B2: return "B2";
        case Kind::Fock: return "fock(" + std::to_string(n_a) + "," + std::to_string(n_b) + ")";
        case Kind::File: return "file:" + path;
    }
    return {};
}

CouplerParams RunConfig::baseline_params() {
    CouplerParams p;
    p.chi_a = 25.0;
    p.chi_b = 25.0;
    p.epsilon = std::numbers::pi / 25.0;
    p.alpha = 0.0;
    p.gamma_a = 0.001;
    p.gamma_b = 0.001;
    return p;
}

void RunConfig::set(const std::string& raw_key, const std::string& value) {
    std::string key = trim(raw_key);
    for (auto& ch : key) {
        if (ch == '-') {
            ch = '_';
        }
    }
    auto num = [&] { return parse_number(value); };
    if (key == "chi_a") {
        params.chi_a = num();
    } else if (key == "chi_b") {
        params.chi_b = num();
    } else if (key == "chi") {
        params.chi_a = params.chi_b = num();
    } else if (key == "epsilon_re" || key == "epsilon") {
        params.epsilon.real(num());
    } else if (key == "epsilon_im") {
        params.epsilon.imag(num());
    } else if (key == "alpha_re" || key == "alpha") {
        params.alpha.real(num());
    } else if (key == "alpha_im") {
        params.alpha.imag(num());
    } else if (key == "gamma_a") {
        params.gamma_a = num();
    } else if (key == "gamma_b") {
        params.gamma_b = num();
    } else if (key == "gamma") {
        params.gamma_a = params.gamma_b = num();
    } else if (key == "nbar_a") {
        params.nbar_a = num();
    } else if (key == "nbar_b") {
        params.nbar_b = num();
    } else if (key == "nbar") {
        params.nbar_a = params.nbar_b = num();
    } else if (key == "dims") {
        const auto comma = value.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("dims: expected A,B");
        }
        const auto a = parse_count("dims", value.substr(0, comma));
        const auto b = parse_count("dims", value.substr(comma + 1));
        if (a < 3 || b < 3) {
            throw ConfigError("dims: both dimensions must be >= 3");
        }
        spec = HilbertSpec(a, b);
    } else if (key == "dim_a") {
        const auto a = parse_count(key, value);
        if (a < 3) {
            throw ConfigError("dim_a must be >= 3");
        }
        spec = HilbertSpec(a, spec.dim_b);
    } else if (key == "dim_b") {
        const auto b = parse_count(key, value);
        if (b < 3) {
            throw ConfigError("dim_b must be >= 3");
        }
        spec = HilbertSpec(spec.dim_a, b);
    } else if (key == "dt") {
        integrator.dt = num();
    } else if (key == "t_max" || key == "tmax") {
        integrator.t_max = num();
    } else if (key == "record_every") {
        integrator.record_every = static_cast<int>(parse_count(key, value));
    } else if (key == "trace_drift_tol") {
        integrator.trace_drift_tol = num();
    } else if (key == "init") {
        init = InitialState::parse(value);
    } else if (key == "out") {
        out = trim(value);
    } else if (key == "time_scale") {
        const auto v = trim(value);
        if (v == "raw") {
            time_scale = TimeScale::Raw;
        } else if (v == "chi") {
            time_scale = TimeScale::Chi;
        } else {
            throw ConfigError("time_scale: expected raw or chi");
        }
    } else if (key == "eps") {
        detector.eps = num();
    } else if (key == "min_duration") {
        detector.min_duration = num();
    } else {
        throw ConfigError("unknown configuration key '" + key + "'");
    }
}

void RunConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open configuration file '" + path + "'");
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        try {
            set(line.substr(0, eq), line.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void RunConfig::validate() const {
    try {
        params.validate();
        integrator.validate();
        detector.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (init.kind == InitialState::Kind::Fock && (init.n_a >= spec.dim_a || init.n_b >= spec.dim_b)) {
        throw ConfigError("init: Fock state outside the truncated space");
    }
    if (init.kind == InitialState::Kind::File && !std::ifstream(init.path)) {
        throw ConfigError("init: cannot open '" + init.path + "'");
    }
}

double RunConfig::time_factor() const {
    return time_scale == TimeScale::Chi ? params.chi_a : 1.0;
}

ConfigEcho RunConfig::echo() const {
    ConfigEcho e;
    auto add = [&](const std::string& k, double v) { e.emplace_back(k, format_double(v)); };
    add("chi_a", params.chi_a);
    add("chi_b", params.chi_b);
    add("epsilon_re", params.epsilon.real());
    add("epsilon_im", params.epsilon.imag());
    add("alpha_re", params.alpha.real());
    add("alpha_im", params.alpha.imag());
    add("gamma_a", params.gamma_a);
    add("gamma_b", params.gamma_b);
    add("nbar_a", params.nbar_a);
    add("nbar_b", params.nbar_b);
    e.emplace_back("dims", std::to_string(spec.dim_a) + "," + std::to_string(spec.dim_b));
    add("dt", integrator.dt);
    add("t_max", integrator.t_max);
    e.emplace_back("record_every", std::to_string(integrator.record_every));
    add("trace_drift_tol", integrator.trace_drift_tol);
    e.emplace_back("init", init.to_string());
    e.emplace_back("time_scale", time_scale == TimeScale::Chi ? "chi" : "raw");
    add("time_factor", time_factor());
    add("eps", detector.eps);
    add("min_duration", detector.min_duration);
    return e;
}

DensityMatrix load_density_matrix(const std::string& path, const HilbertSpec& spec) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open density matrix file '" + path + "'");
    }
    const auto n = static_cast<Eigen::Index>(spec.total());
    Matrix rho = Matrix::Zero(n, n);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        long long row = -1, col = -1;
        double re = 0.0, im = 0.0;
        std::string extra;
        if (!(ss >> row >> col >> re >> im) || (ss >> extra)) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected row,col,re,im");
        }
        if (row < 0 || col < 0 || row >= n || col >= n) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": index outside the truncated space");
        }
        rho(row, col) = cplx(re, im);
    }
    const double tr = rho.trace().real();
    if (!(tr > 0.0)) {
        throw ConfigError(path + ": density matrix has nonpositive trace");
    }
    DensityMatrix out{rho / tr, spec};
    try {
        out.check();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path + ": " + e.what());
    }
    return out;
}

DensityMatrix make_initial_state(const RunConfig& cfg) {
    switch (cfg.init.kind) {
        case InitialState::Kind::B1: return DensityMatrix::from_pure(bell_state(BellState::B1, cfg.spec), cfg.spec);
        case InitialState::Kind::B2: return DensityMatrix::from_pure(bell_state(BellState::B2, cfg.spec), cfg.spec);
        case InitialState::Kind::Fock: return DensityMatrix::basis_state(cfg.init.n_a, cfg.init.n_b, cfg.spec);
        case InitialState::Kind::File: return load_density_matrix(cfg.init.path, cfg.spec);
    }
    throw ConfigError("unknown initial state");
}

}  // namespace kerrcoupler
