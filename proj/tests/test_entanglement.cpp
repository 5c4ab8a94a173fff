#include "kerrcoupler/entanglement.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

using namespace kerrcoupler;
using namespace kerrcoupler::testing;

namespace {

Matrix4 projector(const Vector4& v) { return v * v.adjoint(); }

// Oracle: eigenvalues of the non-Hermitian R = rho * rho~ from a general eigensolver.
double concurrence_by_general_eigensolver(const Matrix4& rho) {
    Eigen::Matrix2cd sy;
    sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
    Matrix4 yy;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            yy.block<2, 2>(2 * i, 2 * j) = sy(i, j) * sy;
        }
    }
    const Matrix4 r = rho * (yy * rho.conjugate() * yy);
    Eigen::ComplexEigenSolver<Matrix4> es(r);
    std::array<double, 4> s{};
    for (int k = 0; k < 4; ++k) {
        s[static_cast<std::size_t>(k)] = std::sqrt(std::max(es.eigenvalues()(k).real(), 0.0));
    }
    std::sort(s.begin(), s.end(), std::greater<>());
    return std::max(s[0] - s[1] - s[2] - s[3], 0.0);
}

Matrix4 werner(double p) {
    return p * projector(bell_qubit_vector(BellState::B1)) + (1.0 - p) * Matrix4::Identity() / 4.0;
}

Eigen::Matrix2cd random_unitary2(std::mt19937_64& rng) {
    const Matrix u = random_unitary(2, rng);
    return u;
}

}  // namespace

TEST_CASE("Bell states") {
    const HilbertSpec spec(10, 10);
    for (auto which : {BellState::B1, BellState::B2, BellState::B3}) {
        CHECK(bell_state(which, spec).norm() == doctest::Approx(1.0));
    }
    CHECK(std::abs(bell_state(BellState::B1, spec).dot(bell_state(BellState::B2, spec))) < 1e-15);
    CHECK(std::abs(bell_qubit_vector(BellState::B1).dot(bell_qubit_vector(BellState::B2))) < 1e-15);
    CHECK_THROWS_AS(bell_qubit_vector(BellState::B3), std::invalid_argument);
}

TEST_CASE("projection onto the {0,2} x {0,2} qubit pair") {
    const HilbertSpec spec(10, 10);
    const auto b1 = DensityMatrix::from_pure(bell_state(BellState::B1, spec), spec);
    const auto block = project_to_qubits(b1);
    CHECK(block.weight == doctest::Approx(1.0));
    CHECK((block.entries - projector(bell_qubit_vector(BellState::B1))).cwiseAbs().maxCoeff() < 1e-15);

    const auto outside = DensityMatrix::basis_state(1, 2, spec);
    const auto zero = project_to_qubits(outside);
    CHECK(zero.weight == 0.0);
    CHECK(zero.entries.cwiseAbs().maxCoeff() == 0.0);

    DensityMatrix half{0.5 * b1.entries + 0.5 * outside.entries, spec};
    const auto hb = project_to_qubits(half);
    CHECK(hb.weight == doctest::Approx(0.5));
    CHECK((hb.entries - 0.5 * block.entries).cwiseAbs().maxCoeff() < 1e-15);

    const auto normalized = project_to_qubits(half, true);
    CHECK(normalized.entries.trace().real() == doctest::Approx(1.0));
    CHECK(normalized.weight == doctest::Approx(0.5));
}

TEST_CASE("spin flip") {
    const Matrix4 mixed = Matrix4::Identity() / 4.0;
    CHECK((spin_flip(mixed) - mixed).cwiseAbs().maxCoeff() < 1e-15);

    Matrix4 p00 = Matrix4::Zero();
    p00(0, 0) = 1.0;
    Matrix4 p11 = Matrix4::Zero();
    p11(3, 3) = 1.0;
    CHECK((spin_flip(p00) - p11).cwiseAbs().maxCoeff() < 1e-15);

    const Matrix4 pb1 = projector(bell_qubit_vector(BellState::B1));
    CHECK((spin_flip(pb1) - pb1).cwiseAbs().maxCoeff() < 1e-15);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) {
        const Matrix4 rho = random_density(4, rng);
        const Matrix4 back = spin_flip(Matrix4(spin_flip(rho).conjugate())).conjugate();
        CHECK((back - rho).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("concurrence reference values") {
    CHECK(concurrence(make_qubit_pair(projector(bell_qubit_vector(BellState::B1)))) == doctest::Approx(1.0));
    CHECK(concurrence(make_qubit_pair(projector(bell_qubit_vector(BellState::B2)))) == doctest::Approx(1.0));
    Matrix4 p00 = Matrix4::Zero();
    p00(0, 0) = 1.0;
    CHECK(concurrence(make_qubit_pair(p00)) == 0.0);

    const HilbertSpec spec(10, 10);
    CHECK(concurrence(DensityMatrix::basis_state(0, 0, spec)) == 0.0);
    CHECK(concurrence(DensityMatrix::from_pure(bell_state(BellState::B1, spec), spec)) == doctest::Approx(1.0));
}

TEST_CASE("Werner states: closed form agrees with general eigensolver oracle") {
    for (double p : {0.0, 1.0 / 3.0, 0.6, 1.0}) {
        const double closed = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        const Matrix4 w = werner(p);
        CHECK(std::abs(concurrence_by_general_eigensolver(w) - closed) < 1e-8);
        CHECK(std::abs(concurrence(make_qubit_pair(w)) - closed) < 1e-8);
    }
}

TEST_CASE("pure-state concurrence matches |<psi| yy |psi*>| on random states") {
    std::mt19937_64 rng(20240611);
    Eigen::Matrix2cd sy;
    sy << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
    Matrix4 yy;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            yy.block<2, 2>(2 * i, 2 * j) = sy(i, j) * sy;
        }
    }
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Vector4 psi = random_vector(4, rng);
        const double oracle = std::abs(psi.dot(yy * psi.conjugate()));
        worst = std::max(worst, std::abs(concurrence(make_qubit_pair(projector(psi))) - oracle));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("concurrence properties on random mixed states") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 200; ++k) {
        // Mix a random pure state with noise so a fair share of samples is entangled.
        const Vector4 psi = random_vector(4, rng);
        const double lam = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const Matrix4 rho = lam * projector(psi) + (1.0 - lam) * Matrix4(random_density(4, rng));
        const double c = concurrence(make_qubit_pair(rho));
        CHECK(c >= 0.0);
        CHECK(c <= 1.0 + 1e-12);
        CHECK(std::abs(c - concurrence_by_general_eigensolver(rho)) < 1e-8);

        const double s = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
        const auto scaled = make_qubit_pair(s * rho);
        const double cs = concurrence(scaled);
        CHECK(std::abs(cs - s * c) < 1e-10);
        CHECK(cs <= scaled.weight + 1e-12);

        const Eigen::Matrix2cd ua = random_unitary2(rng);
        const Eigen::Matrix2cd ub = random_unitary2(rng);
        Matrix4 u;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                u.block<2, 2>(2 * i, 2 * j) = ua(i, j) * ub;
            }
        }
        CHECK(std::abs(concurrence(make_qubit_pair(u * rho * u.adjoint())) - c) < 1e-8);
    }
}

TEST_CASE("concurrence rejects non-PSD input") {
    Matrix4 bad = Matrix4::Identity() / 4.0;
    bad(0, 0) = -0.1;
    CHECK_THROWS_AS(concurrence(make_qubit_pair(bad)), std::domain_error);
    Matrix4 tiny = Matrix4::Zero();
    tiny(0, 0) = -1e-12;
    CHECK(concurrence(make_qubit_pair(tiny)) == 0.0);
}

TEST_CASE("Bell fidelities") {
    const HilbertSpec spec(10, 10);
    const auto b1 = DensityMatrix::from_pure(bell_state(BellState::B1, spec), spec);
    CHECK(bell_fidelity(b1, BellState::B1) == doctest::Approx(1.0));
    CHECK(bell_fidelity(b1, BellState::B2) == doctest::Approx(0.0));

    const auto mixed = DensityMatrix::maximally_mixed(spec);
    for (auto which : {BellState::B1, BellState::B2, BellState::B3}) {
        CHECK(bell_fidelity(mixed, which) == doctest::Approx(1.0 / 100.0));
    }

    const auto b3 = DensityMatrix::from_pure(bell_state(BellState::B3, spec), spec);
    CHECK(bell_fidelity(b3, BellState::B1) == doctest::Approx(0.25));
    CHECK(bell_fidelity(b3, BellState::B3) == doctest::Approx(1.0));
}
