// coupler_model.hpp -- Hamiltonian and collapse channels of the damped Kerr coupler.

#pragma once

#include "kerrcoupler/hilbert.hpp"

#include <string>
#include <vector>

namespace kerrcoupler {

// All quantities in units with hbar = 1.
struct CouplerParams {
    double chi_a{25.0};
    double chi_b{25.0};
    cplx epsilon{0.0};   // a^dag^2 b^2 exchange amplitude
    cplx alpha{0.0};     // coherent drive on mode a
    double gamma_a{0.0};
    double gamma_b{0.0};
    double nbar_a{0.0};  // reservoir thermal occupations
    double nbar_b{0.0};

    void validate() const;
};

enum class ChannelRole { DecayA, ExciteA, DecayB, ExciteB };

std::string to_string(ChannelRole role);

struct CollapseChannel {
    OperatorMatrix op;  // rate already folded into the prefactor
    ChannelRole role;
};

struct ModelOperators {
    OperatorMatrix hamiltonian;
    std::vector<CollapseChannel> collapse_ops;
    HilbertSpec spec;
};

// H = chi_a/2 a^dag^2 a^2 + chi_b/2 b^dag^2 b^2 + eps a^dag^2 b^2 + eps* b^dag^2 a^2
//     + alpha a^dag + alpha* a
OperatorMatrix build_hamiltonian(const CouplerParams& params, const HilbertSpec& spec);

// Thermal Lindblad channels: sqrt(2 gamma (nbar + 1)) a and sqrt(2 gamma nbar) a^dag per mode.
// Channels with a zero prefactor are dropped.
std::vector<CollapseChannel> build_collapse_ops(const CouplerParams& params, const HilbertSpec& spec);

ModelOperators build_model(const CouplerParams& params, const HilbertSpec& spec);

}  // namespace kerrcoupler
