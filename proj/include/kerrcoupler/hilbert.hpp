// hilbert.hpp -- truncated Fock-space operators for a two-mode system.
//
// Basis ordering is fixed for the whole library: the composite index of
// |n_a>|n_b> is k = n_a * dim_b + n_b (mode a outermost).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>
#include <utility>

namespace kerrcoupler {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

enum class Mode { A, B };

struct HilbertSpec {
    std::size_t dim_a{10};
    std::size_t dim_b{10};

    HilbertSpec() = default;
    HilbertSpec(std::size_t a, std::size_t b);

    std::size_t total() const noexcept { return dim_a * dim_b; }
    std::size_t flatten(std::size_t n_a, std::size_t n_b) const;
    std::pair<std::size_t, std::size_t> unflatten(std::size_t k) const;

    bool operator==(const HilbertSpec&) const = default;
};

struct OperatorMatrix {
    Matrix entries;
    std::string label;
};

// Single-mode ladder operator; entry (n-1, n) = sqrt(n).
Matrix annihilation(std::size_t dim);
Matrix creation(std::size_t dim);
Matrix number_operator(std::size_t dim);

// op (x) I_b for mode A, I_a (x) op for mode B.
OperatorMatrix lift(const Matrix& op, Mode mode, const HilbertSpec& spec, std::string label = {});

Matrix kron(const Matrix& left, const Matrix& right);

Vector basis_vector(std::size_t n_a, std::size_t n_b, const HilbertSpec& spec);
Matrix basis_projector(std::size_t n_a, std::size_t n_b, const HilbertSpec& spec);

}  // namespace kerrcoupler
