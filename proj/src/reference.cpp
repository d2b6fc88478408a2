#include "rydnet/reference.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace rydnet::reference {

namespace {

Cvec matvec(const Cmat& m, const Cvec& v) {
    const std::size_t n = v.size();
    Cvec out(n, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

// dpsi/dt = -i H psi
Cvec rhs(const Cmat& h, const Cvec& psi) {
    Cvec out = matvec(h, psi);
    for (auto& a : out) {
        a *= std::complex<double>(0.0, -1.0);
    }
    return out;
}

void axpy(Cvec& y, std::complex<double> alpha, const Cvec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

} // namespace

Cvec integrate_schrodinger_rk4(const Cvec& psi0, const std::vector<HamiltonianSegment>& segments,
                               int steps_per_segment) {
    if (steps_per_segment < 1) {
        throw std::invalid_argument("integrate_schrodinger_rk4: need >= 1 step per segment");
    }
    Cvec psi = psi0;
    for (const auto& seg : segments) {
        if (seg.hamiltonian.size() != psi.size()) {
            throw std::invalid_argument("integrate_schrodinger_rk4: dimension mismatch");
        }
        if (seg.duration == 0.0) continue;
        const double h = seg.duration / steps_per_segment;
        for (int s = 0; s < steps_per_segment; ++s) {
            const Cvec k1 = rhs(seg.hamiltonian, psi);
            Cvec tmp = psi;
            axpy(tmp, 0.5 * h, k1);
            const Cvec k2 = rhs(seg.hamiltonian, tmp);
            tmp = psi;
            axpy(tmp, 0.5 * h, k2);
            const Cvec k3 = rhs(seg.hamiltonian, tmp);
            tmp = psi;
            axpy(tmp, h, k3);
            const Cvec k4 = rhs(seg.hamiltonian, tmp);
            axpy(psi, h / 6.0, k1);
            axpy(psi, h / 3.0, k2);
            axpy(psi, h / 3.0, k3);
            axpy(psi, h / 6.0, k4);
        }
    }
    return psi;
}

Eigen::VectorXcd beamsplitter_expand(const TwoPhotonState& input) {
    if (input.frame() != ModeFrame::input_ab) {
        throw std::invalid_argument("beamsplitter_expand: state is not in the input frame");
    }
    const double s = 1.0 / std::sqrt(2.0);
    // substitution per input mode: list of (output mode, coefficient)
    const std::array<std::array<std::pair<int, double>, 2>, 4> subs = {{
        {{{0, s}, {2, s}}},    // aH -> (cH + dH)/sqrt(2)
        {{{1, s}, {3, s}}},    // aV -> (cV + dV)/sqrt(2)
        {{{0, s}, {2, -s}}},   // bH -> (cH - dH)/sqrt(2)
        {{{1, s}, {3, -s}}},   // bV -> (cV - dV)/sqrt(2)
    }};

    const auto& patterns = photon_patterns();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(TwoPhotonState::kDim);
    for (int spin = 0; spin < TwoPhotonState::kSpinDim; ++spin) {
        for (int pin = 0; pin < kPhotonPatterns; ++pin) {
            const Complex amp = input.amplitude(spin, pin);
            if (amp == Complex(0.0, 0.0)) continue;
            const PhotonPattern& pat = patterns[pin];
            const double in_norm = (pat.m1 == pat.m2) ? std::sqrt(2.0) : 1.0;
            // (sum_k c_k o_k^dag)(sum_l d_l o_l^dag)|0>, collected per monomial
            double monomial[kPhotonModes][kPhotonModes] = {};
            for (const auto& [k, ck] : subs[pat.m1]) {
                for (const auto& [l, dl] : subs[pat.m2]) {
                    monomial[k][l] += ck * dl;
                }
            }
            for (int k = 0; k < kPhotonModes; ++k) {
                for (int l = k; l < kPhotonModes; ++l) {
                    double coeff;
                    if (k == l) {
                        coeff = monomial[k][k] * std::sqrt(2.0);  // (o^dag)^2|0> = sqrt(2)|2>
                    } else {
                        coeff = monomial[k][l] + monomial[l][k];
                    }
                    if (coeff != 0.0) {
                        out[TwoPhotonState::index(spin, pattern_index(k, l))] +=
                            amp * coeff / in_norm;
                    }
                }
            }
        }
    }
    return out;
}

} // namespace rydnet::reference
