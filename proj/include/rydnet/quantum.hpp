#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace rydnet {

using Complex = std::complex<double>;

/// Pure state over a fixed finite basis. Amplitudes are dimensionless and the
/// norm is pinned to 1 (checked to 1e-9 at construction). The basis_label
/// names the ordering convention in force so states from different modules
/// cannot be mixed up silently.
class QuantumState {
public:
    QuantumState(Eigen::VectorXcd amplitudes, std::string basis_label);

    /// Normalizes the input vector first; throws on a zero vector.
    static QuantumState normalized(Eigen::VectorXcd amplitudes, std::string basis_label);

    Eigen::Index dim() const { return amps_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    const std::string& basis_label() const { return label_; }

    double population(Eigen::Index i) const { return std::norm(amps_[i]); }
    Eigen::VectorXd populations() const;

private:
    Eigen::VectorXcd amps_;
    std::string label_;
};

/// Dense Hermitian matrix in angular-frequency units (hbar = 1). Hermiticity
/// is checked elementwise at construction to 1e-12 relative to the largest
/// entry and the matrix is symmetrized before storage.
class HermitianOperator {
public:
    explicit HermitianOperator(const Eigen::MatrixXcd& entries);

    Eigen::Index dim() const { return mat_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return mat_; }

private:
    Eigen::MatrixXcd mat_;
};

/// One piecewise-constant pulse: a Hamiltonian held for a fixed duration.
/// Durations are seconds, or dimensionless Omega*t when the caller works in
/// normalized units (the dynamics only see the product H*t).
struct PulseSegment {
    HermitianOperator hamiltonian;
    double duration;

    PulseSegment(HermitianOperator h, double t);
};

/// Applies U_n ... U_1 |psi>, each U_k = exp(-i H_k t_k) computed by exact
/// Hermitian eigendecomposition. Throws on dimension mismatch.
QuantumState evolve_piecewise(const QuantumState& state,
                              const std::vector<PulseSegment>& segments);

/// |<target|state>|^2; global-phase invariant by construction.
double fidelity(const QuantumState& state, const QuantumState& target);

/// Basis populations sampled along a pulse sequence. Times are cumulative;
/// segment boundaries appear once (each segment contributes its interior and
/// right-endpoint samples after the shared starting point).
struct Trajectory {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> populations;
};

/// Samples each segment uniformly with `samples_per_segment` points including
/// both endpoints (>= 2). The final sample equals evolve_piecewise output.
Trajectory trajectory(const QuantumState& state,
                      const std::vector<PulseSegment>& segments,
                      int samples_per_segment);

} // namespace rydnet
