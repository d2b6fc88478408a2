#include "rydnet/interference.hpp"

#include <cmath>
#include <stdexcept>

namespace rydnet {

const char* const kSpinBasisLabel = "spinAB:[++,+-,-+,--]";

namespace {

constexpr double kTol = 1e-12;

// Single-photon mode map for the 50:50 beamsplitter, output x input over
// modes (H, V) x (a|c, b|d): a -> (c+d)/sqrt(2), b -> (c-d)/sqrt(2).
Eigen::Matrix4d mode_map() {
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    // rows: cH=0, cV=1, dH=2, dV=3; cols: aH=0, aV=1, bH=2, bV=3
    m(0, 0) = s; m(2, 0) = s;
    m(1, 1) = s; m(3, 1) = s;
    m(0, 2) = s; m(2, 2) = -s;
    m(1, 3) = s; m(3, 3) = -s;
    return m;
}

// Two-photon transfer amplitude <out (k<=l)| U |in (i<=j)> from the mode map
// via the bosonic permanent formula.
double two_photon_amplitude(const Eigen::Matrix4d& m, const PhotonPattern& out,
                            const PhotonPattern& in) {
    const double perm = m(out.m1, in.m1) * m(out.m2, in.m2) +
                        m(out.m2, in.m1) * m(out.m1, in.m2);
    const double norm_in = (in.m1 == in.m2) ? std::sqrt(2.0) : 1.0;
    const double norm_out = (out.m1 == out.m2) ? std::sqrt(2.0) : 1.0;
    return perm / (norm_in * norm_out);
}

const PhotonPattern& pattern_of(HeraldPattern p) {
    // output-frame modes: cH=0, cV=1, dH=2, dV=3
    static const std::array<PhotonPattern, kPhotonPatterns> map = {{
        {0, 3},  // Hc_Vd
        {1, 2},  // Vc_Hd
        {0, 2},  // Hc_Hd
        {1, 3},  // Vc_Vd
        {0, 1},  // Hc_Vc
        {2, 3},  // Hd_Vd
        {0, 0},  // two_Hc
        {1, 1},  // two_Vc
        {2, 2},  // two_Hd
        {3, 3},  // two_Vd
    }};
    return map[static_cast<int>(p)];
}

} // namespace

const std::array<PhotonPattern, kPhotonPatterns>& photon_patterns() {
    static const std::array<PhotonPattern, kPhotonPatterns> table = {{
        {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
    }};
    return table;
}

int pattern_index(int m1, int m2) {
    if (m1 > m2) std::swap(m1, m2);
    const auto& table = photon_patterns();
    for (int i = 0; i < kPhotonPatterns; ++i) {
        if (table[i].m1 == m1 && table[i].m2 == m2) return i;
    }
    throw std::invalid_argument("pattern_index: mode out of range");
}

TwoPhotonState::TwoPhotonState(const Eigen::VectorXcd& amplitudes, ModeFrame frame)
    : amps_(amplitudes), frame_(frame) {
    if (amps_.size() != kDim) {
        throw std::invalid_argument("TwoPhotonState: wrong dimension");
    }
    if (std::abs(amps_.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("TwoPhotonState: norm violates unit-norm invariant");
    }
}

TwoPhotonState joint_state(const AtomPhotonState& node_a, const AtomPhotonState& node_b) {
    const auto extract = [](const AtomPhotonState& node, const char* which) {
        if (node.stage() != StageTag::post_emission) {
            throw std::invalid_argument(std::string("joint_state: node ") + which +
                                        " is not post_emission");
        }
        // spin x polarization amplitudes: rows |+>,|->; cols H,V
        Eigen::Matrix2cd m;
        m(0, 0) = node.amplitude(ControlState::r_plus, EnsembleState::ground_G,
                                 PhotonState::horizontal);
        m(0, 1) = node.amplitude(ControlState::r_plus, EnsembleState::ground_G,
                                 PhotonState::vertical);
        m(1, 0) = node.amplitude(ControlState::r_minus, EnsembleState::ground_G,
                                 PhotonState::horizontal);
        m(1, 1) = node.amplitude(ControlState::r_minus, EnsembleState::ground_G,
                                 PhotonState::vertical);
        if (std::abs(1.0 - m.cwiseAbs2().sum()) > 1e-9) {
            // anything outside the r+/r- one-photon block: vacuum, W, or a
            // photon on the control ground state
            for (int c = 0; c < 3; ++c) {
                const auto cs = static_cast<ControlState>(c);
                if (std::abs(node.amplitude(cs, EnsembleState::ground_G, PhotonState::vacuum)) >
                    1e-9) {
                    throw std::invalid_argument(
                        std::string("joint_state: node ") + which +
                        " carries vacuum amplitude; heralding assumes a photon is present");
                }
            }
            throw std::invalid_argument(std::string("joint_state: node ") + which +
                                        " has photon amplitude outside the Rydberg-sublevel "
                                        "qubit space");
        }
        return m;
    };
    const Eigen::Matrix2cd a = extract(node_a, "A");
    const Eigen::Matrix2cd b = extract(node_b, "B");

    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(TwoPhotonState::kDim);
    for (int sa = 0; sa < 2; ++sa) {
        for (int pa = 0; pa < 2; ++pa) {
            for (int sb = 0; sb < 2; ++sb) {
                for (int pb = 0; pb < 2; ++pb) {
                    const int spin = sa * 2 + sb;
                    const int mode_a = pa;        // aH=0, aV=1
                    const int mode_b = 2 + pb;    // bH=2, bV=3
                    const int pat = pattern_index(mode_a, mode_b);
                    amps[TwoPhotonState::index(spin, pat)] += a(sa, pa) * b(sb, pb);
                }
            }
        }
    }
    return TwoPhotonState(amps, ModeFrame::input_ab);
}

TwoPhotonState beamsplitter(const TwoPhotonState& state) {
    if (state.frame() != ModeFrame::input_ab) {
        throw std::logic_error("beamsplitter: state is not in the input frame");
    }
    const Eigen::Matrix4d m = mode_map();
    const auto& patterns = photon_patterns();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(TwoPhotonState::kDim);
    for (int spin = 0; spin < TwoPhotonState::kSpinDim; ++spin) {
        for (int pin = 0; pin < kPhotonPatterns; ++pin) {
            const Complex a = state.amplitude(spin, pin);
            if (a == Complex(0.0, 0.0)) continue;
            for (int pout = 0; pout < kPhotonPatterns; ++pout) {
                const double u = two_photon_amplitude(m, patterns[pout], patterns[pin]);
                if (u != 0.0) {
                    out[TwoPhotonState::index(spin, pout)] += u * a;
                }
            }
        }
    }
    return TwoPhotonState(out, ModeFrame::output_cd);
}

const char* herald_pattern_name(HeraldPattern p) {
    switch (p) {
    case HeraldPattern::Hc_Vd: return "Hc_Vd";
    case HeraldPattern::Vc_Hd: return "Vc_Hd";
    case HeraldPattern::Hc_Hd: return "Hc_Hd";
    case HeraldPattern::Vc_Vd: return "Vc_Vd";
    case HeraldPattern::Hc_Vc: return "Hc_Vc";
    case HeraldPattern::Hd_Vd: return "Hd_Vd";
    case HeraldPattern::two_Hc: return "two_Hc";
    case HeraldPattern::two_Vc: return "two_Vc";
    case HeraldPattern::two_Hd: return "two_Hd";
    case HeraldPattern::two_Vd: return "two_Vd";
    }
    throw std::invalid_argument("herald_pattern_name: unknown pattern");
}

HeraldOutcome herald(const TwoPhotonState& state, HeraldPattern pattern) {
    if (state.frame() != ModeFrame::output_cd) {
        throw std::logic_error("herald: state is not in the output frame");
    }
    const int pat = pattern_index(pattern_of(pattern).m1, pattern_of(pattern).m2);
    Eigen::VectorXcd atomic(TwoPhotonState::kSpinDim);
    double prob = 0.0;
    for (int spin = 0; spin < TwoPhotonState::kSpinDim; ++spin) {
        atomic[spin] = state.amplitude(spin, pat);
        prob += std::norm(atomic[spin]);
    }
    if (prob < kTol * kTol) {
        return {pattern, 0.0, std::nullopt};
    }
    return {pattern, prob,
            QuantumState(atomic / std::sqrt(prob), kSpinBasisLabel)};
}

std::vector<HeraldOutcome> herald_table(const TwoPhotonState& state) {
    std::vector<HeraldOutcome> out;
    out.reserve(kPhotonPatterns);
    for (int i = 0; i < kPhotonPatterns; ++i) {
        out.push_back(herald(state, static_cast<HeraldPattern>(i)));
    }
    return out;
}

double heralding_probability(const TwoPhotonState& state) {
    return herald(state, HeraldPattern::Hc_Vd).probability +
           herald(state, HeraldPattern::Vc_Hd).probability;
}

HeraldedFidelity heralded_fidelity(const VisibilityModel& model) {
    const double v = model.visibility;
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("heralded_fidelity: visibility must be in [0, 1]");
    }
    Eigen::Vector4cd singlet = Eigen::Vector4cd::Zero();
    singlet[1] = 1.0 / std::sqrt(2.0);
    singlet[2] = -1.0 / std::sqrt(2.0);

    Eigen::Matrix4cd rho = v * (singlet * singlet.adjoint());
    rho(1, 1) += (1.0 - v) * 0.5;
    rho(2, 2) += (1.0 - v) * 0.5;

    const double fid = (singlet.adjoint() * rho * singlet)(0, 0).real();
    return {fid, rho};
}

} // namespace rydnet
