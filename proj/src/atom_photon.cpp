#include "rydnet/atom_photon.hpp"

#include <cmath>
#include <stdexcept>

namespace rydnet {

namespace {

constexpr double kNormTol = 1e-9;

void check_physical(const Eigen::VectorXcd& amps) {
    if (amps.size() != AtomPhotonState::kDim) {
        throw std::invalid_argument("AtomPhotonState: wrong dimension");
    }
    if (std::abs(amps.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("AtomPhotonState: norm violates unit-norm invariant");
    }
    for (int c = 0; c < 3; ++c) {
        for (int p = 1; p < 3; ++p) {
            const int idx = (c * 2 + 1) * 3 + p;  // W with a photon
            if (std::abs(amps[idx]) > 1e-12) {
                throw std::invalid_argument(
                    "AtomPhotonState: W component paired with a photon is unphysical");
            }
        }
    }
}

} // namespace

AtomPhotonState::AtomPhotonState(const Eigen::VectorXcd& amplitudes, StageTag stage)
    : amps_(amplitudes), stage_(stage) {
    check_physical(amps_);
}

int AtomPhotonState::index(ControlState c, EnsembleState e, PhotonState p) {
    return (static_cast<int>(c) * 2 + static_cast<int>(e)) * 3 + static_cast<int>(p);
}

AtomPhotonState AtomPhotonState::basis_state(ControlState c, EnsembleState e, PhotonState p,
                                             StageTag stage) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(kDim);
    amps[index(c, e, p)] = 1.0;
    return AtomPhotonState(amps, stage);
}

AtomPhotonState AtomPhotonState::bell_with_vacuum(ControlSublevel s) {
    const ControlState c =
        (s == ControlSublevel::plus_half) ? ControlState::r_plus : ControlState::r_minus;
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(kDim);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    amps[index(c, EnsembleState::ground_G, PhotonState::vacuum)] = inv_sqrt2;
    amps[index(ControlState::ground, EnsembleState::excited_W, PhotonState::vacuum)] =
        Complex(0.0, -inv_sqrt2);
    return AtomPhotonState(amps, StageTag::pre_raman);
}

Complex AtomPhotonState::amplitude(ControlState c, EnsembleState e, PhotonState p) const {
    return amps_[index(c, e, p)];
}

double AtomPhotonState::w_population() const {
    double pop = 0.0;
    for (int c = 0; c < 3; ++c) {
        pop += std::norm(amps_[(c * 2 + 1) * 3]);
    }
    return pop;
}

AtomPhotonState raman_map(const AtomPhotonState& state) {
    if (state.stage() != StageTag::pre_raman) {
        throw std::logic_error("raman_map: state is not pre_raman");
    }
    AtomPhotonState out = state;
    out.stage_ = StageTag::post_raman;
    return out;
}

AtomPhotonState emission_map(const AtomPhotonState& state, ControlSublevel sublevel) {
    if (state.stage() != StageTag::post_raman) {
        throw std::logic_error("emission_map: state is not post_raman");
    }
    const PhotonState pol = (sublevel == ControlSublevel::plus_half) ? PhotonState::horizontal
                                                                     : PhotonState::vertical;
    AtomPhotonState out = state;
    for (int ci = 0; ci < 3; ++ci) {
        const auto c = static_cast<ControlState>(ci);
        const int from = AtomPhotonState::index(c, EnsembleState::excited_W, PhotonState::vacuum);
        const int to = AtomPhotonState::index(c, EnsembleState::ground_G, pol);
        out.amps_[to] += out.amps_[from];
        out.amps_[from] = 0.0;
    }
    out.stage_ = StageTag::post_emission;
    return out;
}

AtomPhotonState build_psi2() {
    // Each branch: |r_c:s, W_Ryd>|0> -> raman -> emission(s) -> |r_c:s, G_e>|pol(s)>.
    const auto branch = [](ControlSublevel s) {
        const ControlState c =
            (s == ControlSublevel::plus_half) ? ControlState::r_plus : ControlState::r_minus;
        const AtomPhotonState init = AtomPhotonState::basis_state(
            c, EnsembleState::excited_W, PhotonState::vacuum, StageTag::pre_raman);
        return emission_map(raman_map(init), s);
    };
    const Eigen::VectorXcd amps =
        (branch(ControlSublevel::plus_half).amplitudes() +
         branch(ControlSublevel::minus_half).amplitudes()) /
        std::sqrt(2.0);
    return AtomPhotonState(amps, StageTag::post_emission);
}

NodeEfficiencyBreakdown node_efficiency(double f_gate, double eta_dir, double eta_map,
                                        double eta_retrieval, double t2_memory_s) {
    const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(f_gate) || !in_unit(eta_dir) || !in_unit(eta_map) || !in_unit(eta_retrieval)) {
        throw std::invalid_argument("node_efficiency: efficiencies must be in [0, 1]");
    }
    if (!(t2_memory_s > 0.0)) {
        throw std::invalid_argument("node_efficiency: t2_memory must be > 0");
    }
    return {f_gate, eta_dir, eta_map, f_gate * eta_dir * eta_map, eta_retrieval, t2_memory_s};
}

} // namespace rydnet
