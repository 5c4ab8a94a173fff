// entanglement.hpp -- two-qubit projection of the coupler state, Wootters concurrence,
// and fidelities with the Bell-like reference states.
//
// The qubit pair lives on the {|0>, |2>} levels of each mode. Its ordered basis is
// (|0,0>, |0,2>, |2,0>, |2,2>), i.e. qubit value 1 stands for two photons and mode a is
// the left tensor factor.

#pragma once

#include "kerrcoupler/density_matrix.hpp"

#include <Eigen/Dense>

namespace kerrcoupler {

using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

struct QubitPairMatrix {
    Matrix4 entries{Matrix4::Zero()};
    double weight{0.0};  // trace of the block before any normalization
};

enum class BellState { B1, B2, B3 };

// (|2,0> + i|0,2>)/sqrt2, (|2,0> - i|0,2>)/sqrt2, (|2,0> + |1,2>)/sqrt2 in the full space.
Vector bell_state(BellState which, const HilbertSpec& spec);

// B1 and B2 expressed in the qubit-pair basis. B3 leaves the subspace and is rejected.
Vector4 bell_qubit_vector(BellState which);

QubitPairMatrix project_to_qubits(const DensityMatrix& rho, bool normalize = false);

// Embeds a 4x4 matrix or pure vector in the ordered qubit basis.
QubitPairMatrix make_qubit_pair(const Matrix4& entries);

// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)
Matrix4 spin_flip(const Matrix4& rho);

// Eigenvalues of R = rho rho~ (equal to those of the Hermitian sqrt(rho) rho~ sqrt(rho)),
// descending. Obtained as squared singular values of sqrt(rho) sqrt(rho~); eigenvalues of rho
// below the roundoff floor are treated as zero before the matrix square root.
Eigen::Vector4d concurrence_spectrum(const QubitPairMatrix& rho_c);

// Throws std::domain_error when rho_c has an eigenvalue below -psd_tol.
double concurrence(const QubitPairMatrix& rho_c, double psd_tol = 1e-9);
double concurrence(const DensityMatrix& rho, bool normalize = false);

double bell_fidelity(const DensityMatrix& rho, BellState which);

}  // namespace kerrcoupler
