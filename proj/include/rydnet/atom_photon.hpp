#pragma once

#include "rydnet/quantum.hpp"

#include <array>

namespace rydnet {

enum class ControlState { r_plus = 0, r_minus = 1, ground = 2 };
enum class EnsembleState { ground_G = 0, excited_W = 1 };
enum class PhotonState { vacuum = 0, horizontal = 1, vertical = 2 };

enum class StageTag { pre_raman, post_raman, post_emission };

enum class ControlSublevel { plus_half, minus_half };

/// Joint control-atom / ensemble / photon state for the atom-photon
/// conversion chain.
///
/// Basis: {r_c:+1/2, r_c:-1/2, g_c} x {G_e, W} x {|0>, |H>, |V>}, indexed
/// control-major (index = (control*2 + ensemble)*3 + photon). The ensemble W
/// slot means W_Ryd before the Raman stage and W_e after it; the stage tag
/// records which reading is in force. Physical restriction: W components
/// carry no photon (those six slots are pinned to zero), since emission is
/// exactly what empties W.
class AtomPhotonState {
public:
    static constexpr int kDim = 18;

    AtomPhotonState(const Eigen::VectorXcd& amplitudes, StageTag stage);

    /// Unit basis state.
    static AtomPhotonState basis_state(ControlState c, EnsembleState e, PhotonState p,
                                       StageTag stage);

    /// (|r_c:s, G_e>|0> - i |g_c, W_Ryd>|0>)/sqrt(2): the step-1 Bell state
    /// joined with the photon vacuum, ready for the Raman stage.
    static AtomPhotonState bell_with_vacuum(ControlSublevel s);

    static int index(ControlState c, EnsembleState e, PhotonState p);

    Complex amplitude(ControlState c, EnsembleState e, PhotonState p) const;
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    StageTag stage() const { return stage_; }

    /// Total population with the ensemble in W (any control state).
    double w_population() const;

private:
    AtomPhotonState() = default;

    Eigen::VectorXcd amps_;
    StageTag stage_ = StageTag::pre_raman;

    friend AtomPhotonState raman_map(const AtomPhotonState&);
    friend AtomPhotonState emission_map(const AtomPhotonState&, ControlSublevel);
};

/// W_Ryd -> W_e relabeling with unit amplitude transfer (ideal unitary; all
/// loss is the scalar eta_map). Amplitudes are unchanged, the stage advances.
/// Throws unless the state is pre_raman.
AtomPhotonState raman_map(const AtomPhotonState& state);

/// Directional emission: every |., W_e>|0> amplitude moves to |., G_e>|H>
/// (sublevel +1/2) or |., G_e>|V> (sublevel -1/2), phases preserved.
/// Throws unless the state is post_raman.
AtomPhotonState emission_map(const AtomPhotonState& state, ControlSublevel sublevel);

/// Dual-sublevel initialization run through both maps branch by branch:
/// (|r_c:+1/2, G_e>|H> + |r_c:-1/2, G_e>|V>)/sqrt(2).
AtomPhotonState build_psi2();

/// Multiplicative single-node efficiency bookkeeping.
struct NodeEfficiencyBreakdown {
    double f_gate;
    double eta_dir;
    double eta_map;
    double eta_node;         ///< f_gate * eta_dir * eta_map
    double eta_retrieval;    ///< memory retrieval efficiency (reporting only)
    double t2_memory_s;      ///< memory coherence time (reporting only)
};

inline constexpr double kDefaultEtaRetrieval = 0.55;
inline constexpr double kDefaultT2MemoryS = 100e-6;

/// eta_node = f_gate * eta_dir * eta_map. Inputs must be in [0, 1].
NodeEfficiencyBreakdown node_efficiency(double f_gate, double eta_dir, double eta_map,
                                        double eta_retrieval = kDefaultEtaRetrieval,
                                        double t2_memory_s = kDefaultT2MemoryS);

} // namespace rydnet
