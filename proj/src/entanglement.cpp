#include "kerrcoupler/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace kerrcoupler {

namespace {

// Full-space indices of the qubit basis (|0,0>, |0,2>, |2,0>, |2,2>).
std::array<Eigen::Index, 4> qubit_indices(const HilbertSpec& spec) {
    return {static_cast<Eigen::Index>(spec.flatten(0, 0)), static_cast<Eigen::Index>(spec.flatten(0, 2)),
            static_cast<Eigen::Index>(spec.flatten(2, 0)), static_cast<Eigen::Index>(spec.flatten(2, 2))};
}

Matrix4 sigma_yy() {
    Eigen::Matrix2cd sy;
    sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
    Matrix4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = sy(i, j) * sy;
        }
    }
    return out;
}

}  // namespace

Vector bell_state(BellState which, const HilbertSpec& spec) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (which) {
        case BellState::B1: return s * (basis_vector(2, 0, spec) + cplx(0.0, 1.0) * basis_vector(0, 2, spec));
        case BellState::B2: return s * (basis_vector(2, 0, spec) - cplx(0.0, 1.0) * basis_vector(0, 2, spec));
        case BellState::B3: return s * (basis_vector(2, 0, spec) + basis_vector(1, 2, spec));
    }
    throw std::invalid_argument("bell_state: unknown state");
}

Vector4 bell_qubit_vector(BellState which) {
    const double s = 1.0 / std::sqrt(2.0);
    Vector4 v = Vector4::Zero();
    switch (which) {
        case BellState::B1:
            v(2) = s;
            v(1) = cplx(0.0, s);
            return v;
        case BellState::B2:
            v(2) = s;
            v(1) = cplx(0.0, -s);
            return v;
        case BellState::B3: break;
    }
    throw std::invalid_argument("bell_qubit_vector: B3 is not contained in the qubit subspace");
}

QubitPairMatrix project_to_qubits(const DensityMatrix& rho, bool normalize) {
    const auto idx = qubit_indices(rho.spec);
    QubitPairMatrix out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out.entries(i, j) = rho.entries(idx[i], idx[j]);
        }
    }
    out.weight = out.entries.trace().real();
    if (normalize && out.weight > 0.0) {
        out.entries /= out.weight;
    }
    return out;
}

QubitPairMatrix make_qubit_pair(const Matrix4& entries) {
    return {entries, entries.trace().real()};
}

Matrix4 spin_flip(const Matrix4& rho) {
    static const Matrix4 yy = sigma_yy();
    return yy * rho.conjugate() * yy;
}

namespace {

// Square root of the Hermitian part of rho; eigenvalues below the roundoff floor count as zero.
Matrix4 psd_sqrt(const Matrix4& rho) {
    const Matrix4 herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(herm);
    Eigen::Vector4d w = solver.eigenvalues();
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::max(w.cwiseAbs().maxCoeff(), 0.0);
    for (int k = 0; k < 4; ++k) {
        w(k) = w(k) > floor ? std::sqrt(w(k)) : 0.0;
    }
    const Matrix4& u = solver.eigenvectors();
    return u * w.cast<cplx>().asDiagonal() * u.adjoint();
}

// sqrt(lambda_i) of R = rho rho~, as singular values of sqrt(rho) sqrt(rho~). Since
// sqrt(rho) rho~ sqrt(rho) = M M^dag with M = sqrt(rho) sqrt(rho~), this is the same spectrum
// without squaring and re-rooting small values. Descending order.
Eigen::Vector4d root_spectrum(const Matrix4& rho) {
    const Matrix4 root = psd_sqrt(rho);
    const Matrix4 m = root * spin_flip(root);
    Eigen::JacobiSVD<Matrix4> svd(m);
    return svd.singularValues();
}

}  // namespace

Eigen::Vector4d concurrence_spectrum(const QubitPairMatrix& rho_c) {
    return root_spectrum(rho_c.entries).cwiseAbs2();
}

double concurrence(const QubitPairMatrix& rho_c, double psd_tol) {
    const Matrix4 herm = 0.5 * (rho_c.entries + rho_c.entries.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix4> check(herm, Eigen::EigenvaluesOnly);
    if (check.eigenvalues().minCoeff() < -psd_tol) {
        throw std::domain_error("concurrence: projected block is not positive semidefinite (min eigenvalue " +
                                std::to_string(check.eigenvalues().minCoeff()) + ")");
    }
    const Eigen::Vector4d s = root_spectrum(herm);
    return std::max(s(0) - s(1) - s(2) - s(3), 0.0);
}

double concurrence(const DensityMatrix& rho, bool normalize) {
    return concurrence(project_to_qubits(rho, normalize));
}

double bell_fidelity(const DensityMatrix& rho, BellState which) {
    const Vector b = bell_state(which, rho.spec);
    return (b.adjoint() * rho.entries * b)(0, 0).real();
}

}  // namespace kerrcoupler
