#include "kerrcoupler/density_matrix.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

namespace kerrcoupler {

DensityMatrix DensityMatrix::from_pure(const Vector& psi, const HilbertSpec& spec) {
    if (psi.size() != static_cast<Eigen::Index>(spec.total())) {
        throw std::invalid_argument("DensityMatrix::from_pure: vector length does not match spec");
    }
    const double norm = psi.norm();
    if (!(norm > 0.0)) {
        throw std::invalid_argument("DensityMatrix::from_pure: zero state vector");
    }
    const Vector v = psi / norm;
    return {v * v.adjoint(), spec};
}

DensityMatrix DensityMatrix::basis_state(std::size_t n_a, std::size_t n_b, const HilbertSpec& spec) {
    return {basis_projector(n_a, n_b, spec), spec};
}

DensityMatrix DensityMatrix::maximally_mixed(const HilbertSpec& spec) {
    const auto n = static_cast<Eigen::Index>(spec.total());
    return {Matrix::Identity(n, n) / static_cast<double>(n), spec};
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum_ij rho_ij rho_ji
    return (entries.cwiseProduct(entries.transpose())).sum().real();
}

double DensityMatrix::hermiticity_error() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    const Matrix herm = 0.5 * (entries + entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double DensityMatrix::top_level_population_a() const {
    double p = 0.0;
    const std::size_t na = spec.dim_a - 1;
    for (std::size_t nb = 0; nb < spec.dim_b; ++nb) {
        const auto k = static_cast<Eigen::Index>(spec.flatten(na, nb));
        p += entries(k, k).real();
    }
    return p;
}

double DensityMatrix::top_level_population_b() const {
    double p = 0.0;
    const std::size_t nb = spec.dim_b - 1;
    for (std::size_t na = 0; na < spec.dim_a; ++na) {
        const auto k = static_cast<Eigen::Index>(spec.flatten(na, nb));
        p += entries(k, k).real();
    }
    return p;
}

double DensityMatrix::mean_photons_a() const {
    double n = 0.0;
    for (Eigen::Index k = 0; k < entries.rows(); ++k) {
        n += static_cast<double>(spec.unflatten(static_cast<std::size_t>(k)).first) * entries(k, k).real();
    }
    return n;
}

double DensityMatrix::mean_photons_b() const {
    double n = 0.0;
    for (Eigen::Index k = 0; k < entries.rows(); ++k) {
        n += static_cast<double>(spec.unflatten(static_cast<std::size_t>(k)).second) * entries(k, k).real();
    }
    return n;
}

void DensityMatrix::check(double herm_tol, double trace_tol, double eig_tol) const {
    const auto n = static_cast<Eigen::Index>(spec.total());
    if (entries.rows() != n || entries.cols() != n) {
        throw std::invalid_argument("DensityMatrix: shape does not match spec");
    }
    if (!entries.allFinite()) {
        throw std::invalid_argument("DensityMatrix: non-finite entries");
    }
    if (hermiticity_error() > herm_tol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    if (std::abs(trace() - cplx(1.0, 0.0)) > trace_tol) {
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    }
    if (min_eigenvalue() < -eig_tol) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " + std::to_string(min_eigenvalue()));
    }
}

}  // namespace kerrcoupler
