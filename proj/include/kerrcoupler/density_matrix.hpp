// density_matrix.hpp -- two-mode density matrix value type.

#pragma once

#include "kerrcoupler/hilbert.hpp"

namespace kerrcoupler {

struct DensityMatrix {
    Matrix entries;
    HilbertSpec spec;

    static DensityMatrix from_pure(const Vector& psi, const HilbertSpec& spec);
    static DensityMatrix basis_state(std::size_t n_a, std::size_t n_b, const HilbertSpec& spec);
    static DensityMatrix maximally_mixed(const HilbertSpec& spec);

    cplx trace() const { return entries.trace(); }
    double purity() const;
    double hermiticity_error() const;  // max |rho - rho^dag|
    double min_eigenvalue() const;

    // Populations of the highest retained Fock level, per mode.
    double top_level_population_a() const;
    double top_level_population_b() const;
    double mean_photons_a() const;
    double mean_photons_b() const;

    // Throws std::invalid_argument if any invariant is violated beyond the given tolerances.
    void check(double herm_tol = 1e-9, double trace_tol = 1e-8, double eig_tol = 1e-9) const;
};

}  // namespace kerrcoupler
