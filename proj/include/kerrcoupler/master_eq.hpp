// master_eq.hpp -- Lindblad master-equation integration for the coupler.

#pragma once

#include "kerrcoupler/coupler_model.hpp"
#include "kerrcoupler/density_matrix.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kerrcoupler {

// Raised when integration leaves the physical manifold (trace drift, NaN/Inf).
class NumericalAbort : public std::runtime_error {
public:
    NumericalAbort(const std::string& what, double t) : std::runtime_error(what), time_(t) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

struct IntegratorConfig {
    double dt{1e-3};
    double t_max{25.0};
    int record_every{20};
    double trace_drift_tol{1e-8};
    bool keep_states{false};       // store full density matrices in the trajectory
    bool check_positivity{false};  // compute the minimum eigenvalue at every record

    void validate() const;
    long long total_steps() const;
};

// One lean sample of a trajectory.
struct ObservableRecord {
    double concurrence{0.0};
    double fid_b1{0.0};
    double fid_b2{0.0};
    double fid_b3{0.0};
    double trace{1.0};
    double purity{1.0};
    double mean_na{0.0};
    double mean_nb{0.0};
    // Diagnostics, not part of the CSV.
    double top_population{0.0};  // max over modes of the highest Fock-level population
    double hermiticity_error{0.0};
    double min_eigenvalue{0.0};  // NaN unless positivity checking is enabled
    double qubit_weight{0.0};
};

ObservableRecord observe(const DensityMatrix& rho, bool with_min_eigenvalue = false);

struct Trajectory {
    std::vector<double> times;
    std::vector<ObservableRecord> records;
    std::vector<DensityMatrix> states;  // empty in lean mode

    std::size_t size() const noexcept { return times.size(); }
    bool empty() const noexcept { return times.empty(); }
    std::vector<double> concurrence() const;
};

using Observer = std::function<void(double t, const DensityMatrix& rho)>;

// Precomputed sparse form of a model: rhs = -i(H_eff rho - rho H_eff^dag) + sum_k C_k rho C_k^dag
// with H_eff = H - (i/2) sum_k C_k^dag C_k. Works on row-major storage so that every
// sparse-times-dense product reduces to contiguous row updates.
class LindbladGenerator {
public:
    using RowMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    explicit LindbladGenerator(const ModelOperators& model);

    // General input.
    void apply(const RowMatrix& rho, RowMatrix& out) const;
    // Requires rho to be exactly Hermitian; about half the work of apply().
    void apply_hermitian(const RowMatrix& rho, RowMatrix& out) const;
    Matrix apply(const Matrix& rho) const;
    Eigen::Index dim() const noexcept { return dim_; }

private:
    struct Csr {
        std::vector<int> row_start;
        std::vector<int> col;
        std::vector<cplx> value;
    };
    // Operator with at most one real nonzero per row: row i maps to column source[i] (or -1).
    // When every source[i] equals i + shift, the row update is one contiguous segment.
    struct Monomial {
        std::vector<int> source;
        Eigen::ArrayXd weight;
        Eigen::ArrayXd weight_interleaved;  // each weight twice, matching (re, im) storage
        bool uniform_shift{true};
        int shift{0};
    };
    static Csr compress(const Matrix& op);
    static bool to_monomial(const Csr& op, Monomial& out);
    // out += C rho C^dag for a monomial C
    static void add_sandwich(const Monomial& c, const RowMatrix& rho, RowMatrix& out);
    // out = op * in
    static void multiply(const Csr& op, const RowMatrix& in, RowMatrix& out);

    Eigen::Index dim_;
    Csr h_eff_;
    std::vector<Csr> jumps_;
    std::vector<Monomial> monomial_jumps_;  // parallel to jumps_ when every jump qualifies
    mutable RowMatrix scratch_;
    mutable RowMatrix scratch2_;
};

// -i[H, rho] + sum_k (C_k rho C_k^dag - 1/2 {C_k^dag C_k, rho})
Matrix lindblad_rhs(const DensityMatrix& rho, const ModelOperators& model);

// Fixed-step classical RK4. After each step rho is re-Hermitized; the run aborts with
// NumericalAbort if |tr rho - 1| exceeds cfg.trace_drift_tol or an entry is non-finite.
Trajectory evolve(const DensityMatrix& rho0, const ModelOperators& model, const IntegratorConfig& cfg,
                  const std::vector<Observer>& observers = {});

struct ConvergenceReport {
    double max_deviation{0.0};  // sup-norm of C(t) difference between dt and dt/2
    double dt{0.0};
    bool converged{false};
};

ConvergenceReport check_convergence(const DensityMatrix& rho0, const ModelOperators& model,
                                    const IntegratorConfig& cfg, double tolerance = 1e-6);

}  // namespace kerrcoupler
