#include "kerrcoupler/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace kerrcoupler {

HilbertSpec::HilbertSpec(std::size_t a, std::size_t b) : dim_a(a), dim_b(b) {
    // |2> must exist in both modes for the qubit projection.
    if (a < 3 || b < 3) {
        throw std::invalid_argument("HilbertSpec: both truncation dimensions must be >= 3");
    }
}

std::size_t HilbertSpec::flatten(std::size_t n_a, std::size_t n_b) const {
    if (n_a >= dim_a || n_b >= dim_b) {
        throw std::out_of_range("HilbertSpec::flatten: Fock index outside truncation");
    }
    return n_a * dim_b + n_b;
}

std::pair<std::size_t, std::size_t> HilbertSpec::unflatten(std::size_t k) const {
    if (k >= total()) {
        throw std::out_of_range("HilbertSpec::unflatten: composite index outside truncation");
    }
    return {k / dim_b, k % dim_b};
}

Matrix annihilation(std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("annihilation: dimension must be positive");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    Matrix a = Matrix::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    return a;
}

Matrix creation(std::size_t dim) { return annihilation(dim).adjoint(); }

Matrix number_operator(std::size_t dim) {
    const Matrix a = annihilation(dim);
    return a.adjoint() * a;
}

Matrix kron(const Matrix& left, const Matrix& right) {
    Matrix out(left.rows() * right.rows(), left.cols() * right.cols());
    for (Eigen::Index i = 0; i < left.rows(); ++i) {
        for (Eigen::Index j = 0; j < left.cols(); ++j) {
            out.block(i * right.rows(), j * right.cols(), right.rows(), right.cols()) = left(i, j) * right;
        }
    }
    return out;
}

OperatorMatrix lift(const Matrix& op, Mode mode, const HilbertSpec& spec, std::string label) {
    const auto da = static_cast<Eigen::Index>(spec.dim_a);
    const auto db = static_cast<Eigen::Index>(spec.dim_b);
    if (mode == Mode::A) {
        if (op.rows() != da || op.cols() != da) {
            throw std::invalid_argument("lift: operator shape does not match dim_a");
        }
        return {kron(op, Matrix::Identity(db, db)), std::move(label)};
    }
    if (op.rows() != db || op.cols() != db) {
        throw std::invalid_argument("lift: operator shape does not match dim_b");
    }
    return {kron(Matrix::Identity(da, da), op), std::move(label)};
}

Vector basis_vector(std::size_t n_a, std::size_t n_b, const HilbertSpec& spec) {
    Vector v = Vector::Zero(static_cast<Eigen::Index>(spec.total()));
    v(static_cast<Eigen::Index>(spec.flatten(n_a, n_b))) = 1.0;
    return v;
}

Matrix basis_projector(std::size_t n_a, std::size_t n_b, const HilbertSpec& spec) {
    const Vector v = basis_vector(n_a, n_b, spec);
    return v * v.adjoint();
}

}  // namespace kerrcoupler
