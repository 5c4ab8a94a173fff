#include "kerrcoupler/coupler_model.hpp"

#include <cmath>
#include <stdexcept>

namespace kerrcoupler {

void CouplerParams::validate() const {
    if (!(gamma_a >= 0.0) || !(gamma_b >= 0.0)) {
        throw std::invalid_argument("CouplerParams: damping rates must be nonnegative");
    }
    if (!(nbar_a >= 0.0) || !(nbar_b >= 0.0)) {
        throw std::invalid_argument("CouplerParams: thermal occupations must be nonnegative");
    }
    if (!std::isfinite(chi_a) || !std::isfinite(chi_b) || !std::isfinite(std::abs(epsilon)) ||
        !std::isfinite(std::abs(alpha)) || !std::isfinite(gamma_a) || !std::isfinite(gamma_b) ||
        !std::isfinite(nbar_a) || !std::isfinite(nbar_b)) {
        throw std::invalid_argument("CouplerParams: parameters must be finite");
    }
}

std::string to_string(ChannelRole role) {
    switch (role) {
        case ChannelRole::DecayA: return "decay_a";
        case ChannelRole::ExciteA: return "excite_a";
        case ChannelRole::DecayB: return "decay_b";
        case ChannelRole::ExciteB: return "excite_b";
    }
    return "unknown";
}

OperatorMatrix build_hamiltonian(const CouplerParams& params, const HilbertSpec& spec) {
    params.validate();
    const Matrix a = lift(annihilation(spec.dim_a), Mode::A, spec).entries;
    const Matrix b = lift(annihilation(spec.dim_b), Mode::B, spec).entries;
    const Matrix a2 = a * a;
    const Matrix b2 = b * b;
    const Matrix a2d = a2.adjoint();
    const Matrix b2d = b2.adjoint();

    Matrix h = 0.5 * params.chi_a * (a2d * a2) + 0.5 * params.chi_b * (b2d * b2);
    const Matrix exchange = params.epsilon * (a2d * b2);
    h += exchange + exchange.adjoint();
    const Matrix drive = params.alpha * a.adjoint();
    h += drive + drive.adjoint();
    return {std::move(h), "H"};
}

std::vector<CollapseChannel> build_collapse_ops(const CouplerParams& params, const HilbertSpec& spec) {
    params.validate();
    std::vector<CollapseChannel> out;
    auto add = [&](double rate, const Matrix& op, ChannelRole role) {
        if (rate > 0.0) {
            out.push_back({{std::sqrt(rate) * op, to_string(role)}, role});
        }
    };
    const Matrix a = lift(annihilation(spec.dim_a), Mode::A, spec).entries;
    const Matrix b = lift(annihilation(spec.dim_b), Mode::B, spec).entries;
    add(2.0 * params.gamma_a * (params.nbar_a + 1.0), a, ChannelRole::DecayA);
    add(2.0 * params.gamma_a * params.nbar_a, a.adjoint(), ChannelRole::ExciteA);
    add(2.0 * params.gamma_b * (params.nbar_b + 1.0), b, ChannelRole::DecayB);
    add(2.0 * params.gamma_b * params.nbar_b, b.adjoint(), ChannelRole::ExciteB);
    return out;
}

ModelOperators build_model(const CouplerParams& params, const HilbertSpec& spec) {
    return {build_hamiltonian(params, spec), build_collapse_ops(params, spec), spec};
}

}  // namespace kerrcoupler
