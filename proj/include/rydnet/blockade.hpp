#pragma once

#include "rydnet/quantum.hpp"

#include <numbers>
#include <optional>

namespace rydnet {

/// Physical configuration of the control + ensemble gate. Frequencies are
/// angular (rad/s); pass omega = 1 to work in dimensionless Omega*t units.
struct BlockadeParams {
    int n_atoms = 1000;
    double omega = 2.0 * std::numbers::pi * 10e6;          ///< single-atom Rabi frequency (rad/s)
    double blockade_v = 0.0;                        ///< van der Waals shift V (rad/s)
    std::optional<double> c6;                       ///< vdW coefficient (rad/s * m^6), only for r_b

    /// V specified through the ratio V / Omega_eff, the way operating points
    /// are usually quoted.
    static BlockadeParams from_ratio(int n_atoms, double omega, double v_over_omega_eff);

    double effective_rabi() const;                  ///< sqrt(N) * omega

    void validate() const;
};

enum class DriveStage {
    control_drive,   ///< pi/2 stage: only the control-atom drive is on
    ensemble_drive,  ///< pi stage: collective drive + blockade shift
};

/// 4x4 Hamiltonian in the fixed basis [|g_c,G_e>, |r_c,G_e>, |g_c,W>, |r_c,W>].
///
/// The control drive uses the phase convention (i Omega/2)(|r><g| - |g><r|),
/// so a pi/2 pulse maps |g_c> to (|g_c> + |r_c>)/sqrt(2) with real positive
/// amplitudes. The ensemble drive is (Omega_eff/2)(|W><G| + h.c.) with the
/// doubly-excited |r_c,W> level shifted by V, so a resonant pi pulse gives
/// |G> -> -i|W> on the g_c branch.
HermitianOperator build_step1_hamiltonian(const BlockadeParams& params, DriveStage stage);

struct EffectiveRabi {
    double omega_eff;  ///< sqrt(N) * omega (rad/s)
    double t_pi;       ///< pi / omega_eff (s)
};

EffectiveRabi effective_rabi(int n_atoms, double omega);

/// r_b = (C6 / Omega)^(1/6) in hbar = 1 units. Throws on non-positive inputs.
double blockade_radius(double c6, double omega);

/// State after the control pi/2 segment only.
QuantumState intermediate_state_check(const BlockadeParams& params);

struct Step1Result {
    QuantumState final_state;
    double bell_fidelity = 0.0;   ///< overlap^2 with (|r_c,G_e> - i|g_c,W>)/sqrt(2)
    double max_leakage = 0.0;     ///< max |r_c,W> population over the sampled trajectory
    Trajectory trajectory;
};

/// Runs the two-pulse protocol from |g_c,G_e>: control pi/2 (duration
/// pi/(2 Omega)) then ensemble pi (duration pi/Omega_eff).
///
/// With perfect_blockade the |r_c,W> level is projected out entirely (the
/// V -> infinity branch): the r_c block does not evolve during the pi pulse
/// and the Bell fidelity is exactly 1.
Step1Result run_step1(const BlockadeParams& params, int samples_per_segment,
                      bool perfect_blockade = false);

/// Bell target (|r_c,G_e> - i|g_c,W>)/sqrt(2) in the step-1 basis.
QuantumState step1_bell_target();

extern const char* const kStep1BasisLabel;

} // namespace rydnet
