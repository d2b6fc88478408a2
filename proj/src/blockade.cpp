#include "rydnet/blockade.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydnet {

const char* const kStep1BasisLabel = "step1:[gcGe,rcGe,gcW,rcW]";

BlockadeParams BlockadeParams::from_ratio(int n_atoms, double omega, double v_over_omega_eff) {
    BlockadeParams p;
    p.n_atoms = n_atoms;
    p.omega = omega;
    p.blockade_v = v_over_omega_eff * std::sqrt(static_cast<double>(n_atoms)) * omega;
    p.validate();
    return p;
}

double BlockadeParams::effective_rabi() const {
    return std::sqrt(static_cast<double>(n_atoms)) * omega;
}

void BlockadeParams::validate() const {
    if (n_atoms < 1) throw std::invalid_argument("BlockadeParams: n_atoms must be >= 1");
    if (!(omega > 0.0)) throw std::invalid_argument("BlockadeParams: omega must be > 0");
    if (!(blockade_v >= 0.0)) throw std::invalid_argument("BlockadeParams: blockade_v must be >= 0");
    if (c6 && !(*c6 > 0.0)) throw std::invalid_argument("BlockadeParams: c6 must be > 0");
}

HermitianOperator build_step1_hamiltonian(const BlockadeParams& params, DriveStage stage) {
    params.validate();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
    switch (stage) {
    case DriveStage::control_drive: {
        // (i Omega/2)(|r_c><g_c| - |g_c><r_c|) on both ensemble columns.
        const Complex up(0.0, 0.5 * params.omega);
        h(1, 0) = up; h(0, 1) = -up;
        h(3, 2) = up; h(2, 3) = -up;
        break;
    }
    case DriveStage::ensemble_drive: {
        const double g = 0.5 * params.effective_rabi();
        h(2, 0) = g; h(0, 2) = g;  // |g_c>: G <-> W, resonant
        h(3, 1) = g; h(1, 3) = g;  // |r_c>: G <-> W, detuned by V
        h(3, 3) = params.blockade_v;
        break;
    }
    }
    return HermitianOperator(h);
}

EffectiveRabi effective_rabi(int n_atoms, double omega) {
    if (n_atoms < 1) throw std::invalid_argument("effective_rabi: n_atoms must be >= 1");
    if (!(omega > 0.0)) throw std::invalid_argument("effective_rabi: omega must be > 0");
    const double om_eff = std::sqrt(static_cast<double>(n_atoms)) * omega;
    return {om_eff, std::numbers::pi / om_eff};
}

double blockade_radius(double c6, double omega) {
    if (!(c6 > 0.0) || !(omega > 0.0)) {
        throw std::invalid_argument("blockade_radius: inputs must be > 0");
    }
    return std::pow(c6 / omega, 1.0 / 6.0);
}

namespace {

QuantumState initial_state() {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
    psi[0] = 1.0;
    return QuantumState(psi, kStep1BasisLabel);
}

PulseSegment control_half_pi(const BlockadeParams& params) {
    return {build_step1_hamiltonian(params, DriveStage::control_drive),
            std::numbers::pi / (2.0 * params.omega)};
}

PulseSegment ensemble_pi(const BlockadeParams& params, bool perfect_blockade) {
    if (!perfect_blockade) {
        return {build_step1_hamiltonian(params, DriveStage::ensemble_drive),
                std::numbers::pi / params.effective_rabi()};
    }
    // V -> infinity branch: |r_c,W> projected out, so the r_c block is frozen
    // and only the resonant g_c block is driven.
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
    const double g = 0.5 * params.effective_rabi();
    h(2, 0) = g; h(0, 2) = g;
    return {HermitianOperator(h), std::numbers::pi / params.effective_rabi()};
}

} // namespace

QuantumState step1_bell_target() {
    Eigen::VectorXcd target = Eigen::VectorXcd::Zero(4);
    target[1] = 1.0 / std::sqrt(2.0);
    target[2] = Complex(0.0, -1.0) / std::sqrt(2.0);
    return QuantumState(target, kStep1BasisLabel);
}

QuantumState intermediate_state_check(const BlockadeParams& params) {
    return evolve_piecewise(initial_state(), {control_half_pi(params)});
}

Step1Result run_step1(const BlockadeParams& params, int samples_per_segment,
                      bool perfect_blockade) {
    params.validate();
    const std::vector<PulseSegment> protocol = {control_half_pi(params),
                                                ensemble_pi(params, perfect_blockade)};
    const QuantumState psi0 = initial_state();
    QuantumState final_state = evolve_piecewise(psi0, protocol);
    Trajectory traj = trajectory(psi0, protocol, samples_per_segment);

    double leak = 0.0;
    for (const auto& pops : traj.populations) {
        leak = std::max(leak, pops[3]);
    }
    const double fid = fidelity(final_state, step1_bell_target());
    return {std::move(final_state), fid, leak, std::move(traj)};
}

} // namespace rydnet
