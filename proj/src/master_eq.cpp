#include "kerrcoupler/master_eq.hpp"

#include "kerrcoupler/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace kerrcoupler {

void IntegratorConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("IntegratorConfig: dt must be positive");
    }
    if (!(t_max > dt) || !std::isfinite(t_max)) {
        throw std::invalid_argument("IntegratorConfig: t_max must exceed dt");
    }
    if (record_every < 1) {
        throw std::invalid_argument("IntegratorConfig: record_every must be >= 1");
    }
    if (!(trace_drift_tol > 0.0)) {
        throw std::invalid_argument("IntegratorConfig: trace_drift_tol must be positive");
    }
}

long long IntegratorConfig::total_steps() const {
    return std::llround(t_max / dt);
}

ObservableRecord observe(const DensityMatrix& rho, bool with_min_eigenvalue) {
    ObservableRecord r;
    r.concurrence = concurrence(rho);
    r.qubit_weight = project_to_qubits(rho).weight;
    r.fid_b1 = bell_fidelity(rho, BellState::B1);
    r.fid_b2 = bell_fidelity(rho, BellState::B2);
    r.fid_b3 = bell_fidelity(rho, BellState::B3);
    r.trace = rho.trace().real();
    r.purity = rho.purity();
    r.mean_na = rho.mean_photons_a();
    r.mean_nb = rho.mean_photons_b();
    r.top_population = std::max(rho.top_level_population_a(), rho.top_level_population_b());
    r.hermiticity_error = rho.hermiticity_error();
    r.min_eigenvalue = with_min_eigenvalue ? rho.min_eigenvalue() : std::numeric_limits<double>::quiet_NaN();
    return r;
}

std::vector<double> Trajectory::concurrence() const {
    std::vector<double> c;
    c.reserve(records.size());
    for (const auto& r : records) {
        c.push_back(r.concurrence);
    }
    return c;
}

LindbladGenerator::Csr LindbladGenerator::compress(const Matrix& op) {
    Csr out;
    out.row_start.reserve(static_cast<std::size_t>(op.rows()) + 1);
    out.row_start.push_back(0);
    for (Eigen::Index i = 0; i < op.rows(); ++i) {
        for (Eigen::Index j = 0; j < op.cols(); ++j) {
            if (op(i, j) != cplx(0.0, 0.0)) {
                out.col.push_back(static_cast<int>(j));
                out.value.push_back(op(i, j));
            }
        }
        out.row_start.push_back(static_cast<int>(out.col.size()));
    }
    return out;
}

void LindbladGenerator::multiply(const Csr& op, const RowMatrix& in, RowMatrix& out) {
    const Eigen::Index n = in.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        auto row = out.row(i);
        row.setZero();
        for (int p = op.row_start[static_cast<std::size_t>(i)]; p < op.row_start[static_cast<std::size_t>(i) + 1];
             ++p) {
            row += op.value[static_cast<std::size_t>(p)] * in.row(op.col[static_cast<std::size_t>(p)]);
        }
    }
}

bool LindbladGenerator::to_monomial(const Csr& op, Monomial& out) {
    const std::size_t n = op.row_start.size() - 1;
    out.source.assign(n, -1);
    out.weight = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(n));
    out.uniform_shift = true;
    bool shift_set = false;
    for (std::size_t i = 0; i < n; ++i) {
        const int count = op.row_start[i + 1] - op.row_start[i];
        if (count > 1) {
            return false;
        }
        if (count == 1) {
            const auto p = static_cast<std::size_t>(op.row_start[i]);
            if (op.value[p].imag() != 0.0) {
                return false;
            }
            out.source[i] = op.col[p];
            out.weight(static_cast<Eigen::Index>(i)) = op.value[p].real();
            const int shift = op.col[p] - static_cast<int>(i);
            if (!shift_set) {
                out.shift = shift;
                shift_set = true;
            } else if (shift != out.shift) {
                out.uniform_shift = false;
            }
        }
    }
    out.weight_interleaved = out.weight.replicate(1, 2).transpose().reshaped();
    return true;
}

void LindbladGenerator::add_sandwich(const Monomial& c, const RowMatrix& rho, RowMatrix& out) {
    const auto n = static_cast<Eigen::Index>(c.source.size());
    if (c.uniform_shift) {
        // Columns j with 0 <= j + shift < n; rows without a source carry zero weight.
        const Eigen::Index lo = std::max<Eigen::Index>(0, -c.shift);
        const Eigen::Index hi = std::min<Eigen::Index>(n, n - c.shift);
        const Eigen::Index len = hi - lo;
        if (len <= 0) {
            return;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            const int si = c.source[static_cast<std::size_t>(i)];
            if (si < 0) {
                continue;
            }
            // Complex rows viewed as interleaved doubles so the update vectorizes.
            Eigen::Map<Eigen::ArrayXd> dst(reinterpret_cast<double*>(out.row(i).data() + lo), 2 * len);
            const Eigen::Map<const Eigen::ArrayXd> src(reinterpret_cast<const double*>(rho.row(si).data() + lo + c.shift),
                                                       2 * len);
            dst += c.weight(i) * (c.weight_interleaved.segment(2 * lo, 2 * len) * src);
        }
        return;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        const int si = c.source[static_cast<std::size_t>(i)];
        if (si < 0) {
            continue;
        }
        const double wi = c.weight(i);
        for (Eigen::Index j = 0; j < n; ++j) {
            const int sj = c.source[static_cast<std::size_t>(j)];
            if (sj >= 0) {
                out(i, j) += (wi * c.weight(j)) * rho(si, sj);
            }
        }
    }
}

LindbladGenerator::LindbladGenerator(const ModelOperators& model)
    : dim_(static_cast<Eigen::Index>(model.spec.total())) {
    const Matrix& h = model.hamiltonian.entries;
    if (h.rows() != dim_ || h.cols() != dim_) {
        throw std::invalid_argument("LindbladGenerator: Hamiltonian shape does not match spec");
    }
    Matrix h_eff = h;
    for (const auto& ch : model.collapse_ops) {
        const Matrix& c = ch.op.entries;
        if (c.rows() != dim_ || c.cols() != dim_) {
            throw std::invalid_argument("LindbladGenerator: collapse operator shape does not match spec");
        }
        h_eff -= cplx(0.0, 0.5) * (c.adjoint() * c);
        jumps_.push_back(compress(c));
    }
    h_eff_ = compress(h_eff);
    for (const auto& j : jumps_) {
        Monomial m;
        if (!to_monomial(j, m)) {
            monomial_jumps_.clear();
            break;
        }
        monomial_jumps_.push_back(std::move(m));
    }
    scratch_.resize(dim_, dim_);
    scratch2_.resize(dim_, dim_);
}

void LindbladGenerator::apply(const RowMatrix& rho, RowMatrix& out) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw std::invalid_argument("lindblad_rhs: density matrix shape does not match model");
    }
    out.resize(dim_, dim_);
    // rho H_eff^dag = (H_eff rho^dag)^dag and C rho C^dag = (C (C rho)^dag)^dag hold for any rho.
    const RowMatrix rho_dag = rho.adjoint();
    multiply(h_eff_, rho, scratch_);
    multiply(h_eff_, rho_dag, scratch2_);
    out = cplx(0.0, -1.0) * scratch_ + cplx(0.0, 1.0) * scratch2_.adjoint();
    for (const auto& c : jumps_) {
        multiply(c, rho, scratch_);
        RowMatrix tmp = scratch_.adjoint();
        multiply(c, tmp, scratch2_);
        out += scratch2_.adjoint();
    }
}

void LindbladGenerator::apply_hermitian(const RowMatrix& rho, RowMatrix& out) const {
    out.resize(dim_, dim_);
    multiply(h_eff_, rho, scratch_);
    scratch_ *= cplx(0.0, -1.0);
    out = scratch_ + scratch_.adjoint();
    if (monomial_jumps_.size() == jumps_.size()) {
        for (const auto& c : monomial_jumps_) {
            add_sandwich(c, rho, out);
        }
        return;
    }
    for (const auto& c : jumps_) {
        multiply(c, rho, scratch_);
        scratch2_ = scratch_.adjoint();  // rho C^dag
        multiply(c, scratch2_, scratch_);
        out += scratch_;
    }
}

Matrix LindbladGenerator::apply(const Matrix& rho) const {
    RowMatrix out;
    apply(RowMatrix(rho), out);
    return out;
}

Matrix lindblad_rhs(const DensityMatrix& rho, const ModelOperators& model) {
    if (!(rho.spec == model.spec)) {
        throw std::invalid_argument("lindblad_rhs: state and model use different Hilbert specs");
    }
    return LindbladGenerator(model).apply(rho.entries);
}

Trajectory evolve(const DensityMatrix& rho0, const ModelOperators& model, const IntegratorConfig& cfg,
                  const std::vector<Observer>& observers) {
    cfg.validate();
    if (!(rho0.spec == model.spec)) {
        throw std::invalid_argument("evolve: state and model use different Hilbert specs");
    }
    rho0.check();

    const LindbladGenerator gen(model);
    const long long steps = cfg.total_steps();
    const Eigen::Index n = gen.dim();

    Trajectory traj;
    const auto expected = static_cast<std::size_t>(steps / cfg.record_every + 2);
    traj.times.reserve(expected);
    traj.records.reserve(expected);

    using RowMatrix = LindbladGenerator::RowMatrix;
    DensityMatrix rho = rho0;
    RowMatrix r = 0.5 * (rho0.entries + rho0.entries.adjoint());
    RowMatrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), tmp(n, n);
    const double dt = cfg.dt;

    auto record = [&](double t) {
        rho.entries = r;
        traj.times.push_back(t);
        traj.records.push_back(observe(rho, cfg.check_positivity));
        if (cfg.keep_states) {
            traj.states.push_back(rho);
        }
        for (const auto& obs : observers) {
            obs(t, rho);
        }
    };

    record(0.0);
    for (long long step = 1; step <= steps; ++step) {
        gen.apply_hermitian(r, k1);
        tmp = r + (0.5 * dt) * k1;
        gen.apply_hermitian(tmp, k2);
        tmp = r + (0.5 * dt) * k2;
        gen.apply_hermitian(tmp, k3);
        tmp = r + dt * k3;
        gen.apply_hermitian(tmp, k4);
        r += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        tmp = 0.5 * (r + r.adjoint());
        r = tmp;

        const double t = static_cast<double>(step) * dt;
        const double drift = std::abs(r.trace() - cplx(1.0, 0.0));
        if (!std::isfinite(drift) || !r.allFinite()) {
            std::ostringstream msg;
            msg << "evolve: non-finite density matrix at t=" << t;
            throw NumericalAbort(msg.str(), t);
        }
        if (drift > cfg.trace_drift_tol) {
            std::ostringstream msg;
            msg << "evolve: trace drift " << drift << " exceeds tolerance " << cfg.trace_drift_tol << " at t=" << t;
            throw NumericalAbort(msg.str(), t);
        }
        if (step % cfg.record_every == 0 || step == steps) {
            record(t);
        }
    }
    return traj;
}

ConvergenceReport check_convergence(const DensityMatrix& rho0, const ModelOperators& model,
                                    const IntegratorConfig& cfg, double tolerance) {
    IntegratorConfig coarse = cfg;
    coarse.keep_states = false;
    IntegratorConfig fine = coarse;
    fine.dt = cfg.dt / 2.0;
    fine.record_every = cfg.record_every * 2;

    const Trajectory a = evolve(rho0, model, coarse);
    const Trajectory b = evolve(rho0, model, fine);
    if (a.size() != b.size()) {
        throw std::logic_error("check_convergence: sample grids of the two runs differ");
    }
    ConvergenceReport report;
    report.dt = cfg.dt;
    for (std::size_t i = 0; i < a.size(); ++i) {
        report.max_deviation =
            std::max(report.max_deviation, std::abs(a.records[i].concurrence - b.records[i].concurrence));
    }
    report.converged = report.max_deviation < tolerance;
    return report;
}

}  // namespace kerrcoupler
