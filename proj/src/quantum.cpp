#include "rydnet/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rydnet {

namespace {

constexpr double kNormTol = 1e-9;

void check_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

// One diagonalized segment, reusable for propagation to any intermediate time.
struct Propagator {
    Eigen::VectorXd evals;
    Eigen::MatrixXcd evecs;

    explicit Propagator(const HermitianOperator& h) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix());
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("eigendecomposition failed");
        }
        evals = solver.eigenvalues();
        evecs = solver.eigenvectors();
    }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& psi, double t) const {
        Eigen::VectorXcd c = evecs.adjoint() * psi;
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            c[i] *= std::exp(Complex(0.0, -evals[i] * t));
        }
        return evecs * c;
    }
};

} // namespace

QuantumState::QuantumState(Eigen::VectorXcd amplitudes, std::string basis_label)
    : amps_(std::move(amplitudes)), label_(std::move(basis_label)) {
    if (amps_.size() == 0) {
        throw std::invalid_argument("QuantumState: empty amplitude vector");
    }
    const double n = amps_.norm();
    if (std::abs(n - 1.0) > kNormTol) {
        throw std::invalid_argument("QuantumState: norm " + std::to_string(n) +
                                    " violates unit-norm invariant");
    }
}

QuantumState QuantumState::normalized(Eigen::VectorXcd amplitudes, std::string basis_label) {
    const double n = amplitudes.norm();
    if (n == 0.0) {
        throw std::invalid_argument("QuantumState::normalized: zero vector");
    }
    return QuantumState(amplitudes / n, std::move(basis_label));
}

Eigen::VectorXd QuantumState::populations() const {
    return amps_.cwiseAbs2();
}

HermitianOperator::HermitianOperator(const Eigen::MatrixXcd& entries) {
    if (entries.rows() != entries.cols() || entries.rows() == 0) {
        throw std::invalid_argument("HermitianOperator: matrix must be square and non-empty");
    }
    const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
    const double tol = 1e-12 * scale;
    if (((entries - entries.adjoint()).cwiseAbs().maxCoeff()) > tol) {
        throw std::invalid_argument("HermitianOperator: matrix is not Hermitian");
    }
    mat_ = 0.5 * (entries + entries.adjoint().eval());
}

PulseSegment::PulseSegment(HermitianOperator h, double t)
    : hamiltonian(std::move(h)), duration(t) {
    if (!(duration >= 0.0)) {
        throw std::invalid_argument("PulseSegment: duration must be >= 0");
    }
}

QuantumState evolve_piecewise(const QuantumState& state,
                              const std::vector<PulseSegment>& segments) {
    Eigen::VectorXcd psi = state.amplitudes();
    for (const auto& seg : segments) {
        check_same_dim(psi.size(), seg.hamiltonian.dim(), "evolve_piecewise");
        if (seg.duration == 0.0) {
            continue;
        }
        psi = Propagator(seg.hamiltonian).apply(psi, seg.duration);
    }
    return QuantumState(std::move(psi), state.basis_label());
}

double fidelity(const QuantumState& state, const QuantumState& target) {
    check_same_dim(state.dim(), target.dim(), "fidelity");
    return std::norm(target.amplitudes().dot(state.amplitudes()));
}

Trajectory trajectory(const QuantumState& state,
                      const std::vector<PulseSegment>& segments,
                      int samples_per_segment) {
    if (samples_per_segment < 2) {
        throw std::invalid_argument("trajectory: samples_per_segment must be >= 2");
    }
    Trajectory out;
    out.times.push_back(0.0);
    out.populations.push_back(state.populations());

    Eigen::VectorXcd psi = state.amplitudes();
    double t0 = 0.0;
    for (const auto& seg : segments) {
        check_same_dim(psi.size(), seg.hamiltonian.dim(), "trajectory");
        if (seg.duration == 0.0) {
            continue;
        }
        Propagator prop(seg.hamiltonian);
        for (int j = 1; j < samples_per_segment; ++j) {
            const double tau = seg.duration * j / (samples_per_segment - 1);
            Eigen::VectorXcd sample = prop.apply(psi, tau);
            out.times.push_back(t0 + tau);
            out.populations.push_back(sample.cwiseAbs2());
        }
        psi = prop.apply(psi, seg.duration);
        t0 += seg.duration;
    }
    return out;
}

} // namespace rydnet
