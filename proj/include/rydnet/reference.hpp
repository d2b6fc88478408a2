#pragma once

#include "rydnet/interference.hpp"

#include <complex>
#include <vector>

namespace rydnet::reference {

/// Independent cross-check implementations. These deliberately share no code
/// with the production paths they validate: the integrator works on raw
/// complex vectors with hand-rolled matrix products, and the beamsplitter
/// expansion manipulates creation-operator monomials term by term.

using Cvec = std::vector<std::complex<double>>;
using Cmat = std::vector<std::vector<std::complex<double>>>;

struct HamiltonianSegment {
    Cmat hamiltonian;  // dense, Hermitian, angular frequency units
    double duration;
};

/// Fixed-step classical 4th-order Runge-Kutta on i d|psi>/dt = H |psi|,
/// `steps_per_segment` steps for each piecewise-constant segment.
Cvec integrate_schrodinger_rk4(const Cvec& psi0, const std::vector<HamiltonianSegment>& segments,
                               int steps_per_segment);

/// Applies the 50:50 beamsplitter by literal operator substitution
/// a -> (c+d)/sqrt(2), b -> (c-d)/sqrt(2): each two-photon input pattern is
/// expanded into output creation-operator monomials, like terms collected,
/// and double occupancies given their sqrt(2) Fock normalization.
Eigen::VectorXcd beamsplitter_expand(const TwoPhotonState& input);

} // namespace rydnet::reference
