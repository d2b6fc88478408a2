#pragma once

#include "rydnet/atom_photon.hpp"
#include "rydnet/quantum.hpp"

#include <array>
#include <optional>
#include <vector>

namespace rydnet {

/// Photonic mode indices. Input frame: spatial modes a (node A) and b
/// (node B); output frame: beamsplitter ports c and d. Polarization H/V.
enum class ModeFrame { input_ab, output_cd };

inline constexpr int kPhotonModes = 4;      // (a|c,H), (a|c,V), (b|d,H), (b|d,V)
inline constexpr int kPhotonPatterns = 10;  // two-photon occupation patterns

/// Canonical two-photon occupation patterns as ordered mode pairs (m1 <= m2),
/// lexicographic: (0,0),(0,1),(0,2),(0,3),(1,1),(1,2),(1,3),(2,2),(2,3),(3,3).
struct PhotonPattern {
    int m1;
    int m2;
};

const std::array<PhotonPattern, kPhotonPatterns>& photon_patterns();
int pattern_index(int m1, int m2);

/// Two-qubit spin space (|+>=r:+1/2, |->=r:-1/2), basis |++>,|+->,|-+>,|-->,
/// tensor the 10 photonic occupation patterns. Double-occupancy patterns
/// carry the sqrt(2) two-photon Fock normalization.
class TwoPhotonState {
public:
    static constexpr int kSpinDim = 4;
    static constexpr int kDim = kSpinDim * kPhotonPatterns;

    TwoPhotonState(const Eigen::VectorXcd& amplitudes, ModeFrame frame);

    static int index(int spin, int pattern) { return spin * kPhotonPatterns + pattern; }

    Complex amplitude(int spin, int pattern) const { return amps_[index(spin, pattern)]; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    ModeFrame frame() const { return frame_; }

private:
    Eigen::VectorXcd amps_;
    ModeFrame frame_;
};

/// Tensor product of two single-node atom-photon states with the photons
/// assigned to spatial modes a and b. Inputs must be post_emission with all
/// amplitude on a photon (no vacuum component: losses are accounted in the
/// link budget, heralding conditions on both photons arriving) and with the
/// photon attached to a Rydberg sublevel of the control atom.
TwoPhotonState joint_state(const AtomPhotonState& node_a, const AtomPhotonState& node_b);

/// 50:50 non-polarizing beamsplitter, a -> (c+d)/sqrt(2), b -> (c-d)/sqrt(2)
/// per polarization, expanded into the output occupation basis with bosonic
/// normalization. Requires the input frame; unitary.
TwoPhotonState beamsplitter(const TwoPhotonState& state);

/// Detector coincidence patterns, one name per photonic occupation pattern.
enum class HeraldPattern {
    Hc_Vd,   ///< H photon in port c, V photon in port d
    Vc_Hd,
    Hc_Hd,   ///< identical polarization across ports (HOM-suppressed)
    Vc_Vd,
    Hc_Vc,   ///< both photons in port c, orthogonal polarizations
    Hd_Vd,
    two_Hc,  ///< bunched pairs
    two_Vc,
    two_Hd,
    two_Vd,
};

const char* herald_pattern_name(HeraldPattern p);

struct HeraldOutcome {
    HeraldPattern pattern;
    double probability;
    std::optional<QuantumState> atomic_state;  ///< absent when probability = 0
};

/// Projects onto one detector pattern; returns its probability and the
/// normalized post-measurement two-atom state. Requires the output frame.
HeraldOutcome herald(const TwoPhotonState& state, HeraldPattern pattern);

/// All ten patterns; probabilities sum to 1 for a normalized state.
std::vector<HeraldOutcome> herald_table(const TwoPhotonState& state);

/// Sum over the two cross-port orthogonal-polarization patterns, the events
/// counted as successful heralds.
double heralding_probability(const TwoPhotonState& state);

struct VisibilityModel {
    double visibility;  ///< two-photon interference visibility V in [0, 1]
};

struct HeraldedFidelity {
    double fidelity;                 ///< (1+V)/2
    Eigen::Matrix4cd density_matrix; ///< V |s><s| + (1-V)/2 (|+-><+-| + |-+><-+|)
};

/// Distinguishability as a convex mixture of the singlet with the dephased
/// cross terms; fidelity is taken against the singlet (|+-> - |-+>)/sqrt(2).
HeraldedFidelity heralded_fidelity(const VisibilityModel& model);

extern const char* const kSpinBasisLabel;

} // namespace rydnet
