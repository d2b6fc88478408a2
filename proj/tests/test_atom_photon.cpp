#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rydnet/atom_photon.hpp"
#include "rydnet/rng.hpp"

#include <cmath>

using namespace rydnet;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("bell_with_vacuum layout") {
    const AtomPhotonState s = AtomPhotonState::bell_with_vacuum(ControlSublevel::plus_half);
    CHECK(s.stage() == StageTag::pre_raman);
    CHECK(std::abs(s.amplitude(ControlState::r_plus, EnsembleState::ground_G,
                               PhotonState::vacuum) -
                   kInvSqrt2) < 1e-15);
    CHECK(std::abs(s.amplitude(ControlState::ground, EnsembleState::excited_W,
                               PhotonState::vacuum) -
                   Complex(0.0, -kInvSqrt2)) < 1e-15);
    CHECK(s.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("raman map relabels without touching amplitudes") {
    const AtomPhotonState in = AtomPhotonState::bell_with_vacuum(ControlSublevel::plus_half);
    const AtomPhotonState out = raman_map(in);
    CHECK(out.stage() == StageTag::post_raman);
    CHECK((out.amplitudes() - in.amplitudes()).norm() == 0.0);

    CHECK_THROWS_AS(raman_map(out), std::logic_error);  // wrong stage
}

TEST_CASE("raman map leaves W-free states unchanged") {
    const AtomPhotonState flat = AtomPhotonState::basis_state(
        ControlState::r_minus, EnsembleState::ground_G, PhotonState::vacuum,
        StageTag::pre_raman);
    const AtomPhotonState out = raman_map(flat);
    CHECK((out.amplitudes() - flat.amplitudes()).norm() == 0.0);
}

TEST_CASE("raman map preserves the norm of random physical states") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(AtomPhotonState::kDim);
        for (int c = 0; c < 3; ++c) {
            const auto cs = static_cast<ControlState>(c);
            amps[AtomPhotonState::index(cs, EnsembleState::excited_W, PhotonState::vacuum)] =
                Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
            for (int p = 0; p < 3; ++p) {
                amps[AtomPhotonState::index(cs, EnsembleState::ground_G,
                                            static_cast<PhotonState>(p))] =
                    Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
            }
        }
        amps /= amps.norm();
        const AtomPhotonState in(amps, StageTag::pre_raman);
        CHECK(raman_map(in).amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("emission map realizes the polarization selection rule") {
    const AtomPhotonState mid = raman_map(AtomPhotonState::bell_with_vacuum(
        ControlSublevel::plus_half));

    const AtomPhotonState h_branch = emission_map(mid, ControlSublevel::plus_half);
    CHECK(h_branch.stage() == StageTag::post_emission);
    CHECK(std::abs(h_branch.amplitude(ControlState::r_plus, EnsembleState::ground_G,
                                      PhotonState::vacuum) -
                   kInvSqrt2) < 1e-12);
    CHECK(std::abs(h_branch.amplitude(ControlState::ground, EnsembleState::ground_G,
                                      PhotonState::horizontal) -
                   Complex(0.0, -kInvSqrt2)) < 1e-12);
    CHECK(h_branch.w_population() == 0.0);

    const AtomPhotonState v_branch = emission_map(mid, ControlSublevel::minus_half);
    CHECK(std::abs(v_branch.amplitude(ControlState::ground, EnsembleState::ground_G,
                                      PhotonState::vertical) -
                   Complex(0.0, -kInvSqrt2)) < 1e-12);

    CHECK_THROWS_AS(emission_map(h_branch, ControlSublevel::plus_half), std::logic_error);
}

TEST_CASE("emission map leaves vacuum-only input unchanged") {
    const AtomPhotonState vac = raman_map(AtomPhotonState::basis_state(
        ControlState::r_plus, EnsembleState::ground_G, PhotonState::vacuum,
        StageTag::pre_raman));
    const AtomPhotonState out = emission_map(vac, ControlSublevel::plus_half);
    CHECK(std::abs(out.amplitude(ControlState::r_plus, EnsembleState::ground_G,
                                 PhotonState::vacuum) -
                   1.0) < 1e-15);
}

TEST_CASE("psi2 construction") {
    const AtomPhotonState psi2 = build_psi2();
    CHECK(psi2.stage() == StageTag::post_emission);

    Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(AtomPhotonState::kDim);
    expected[AtomPhotonState::index(ControlState::r_plus, EnsembleState::ground_G,
                                    PhotonState::horizontal)] = kInvSqrt2;
    expected[AtomPhotonState::index(ControlState::r_minus, EnsembleState::ground_G,
                                    PhotonState::vertical)] = kInvSqrt2;
    CHECK((psi2.amplitudes() - expected).cwiseAbs().maxCoeff() < 1e-12);

    // photon polarization populations (1/2, 1/2)
    double p_h = 0.0, p_v = 0.0;
    for (int c = 0; c < 3; ++c) {
        const auto cs = static_cast<ControlState>(c);
        p_h += std::norm(psi2.amplitude(cs, EnsembleState::ground_G, PhotonState::horizontal));
        p_v += std::norm(psi2.amplitude(cs, EnsembleState::ground_G, PhotonState::vertical));
    }
    CHECK(p_h == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p_v == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("psi2 is maximally entangled across the control/photon cut") {
    const AtomPhotonState psi2 = build_psi2();
    Eigen::Matrix2cd m;  // rows |+>,|->; cols H,V
    m(0, 0) = psi2.amplitude(ControlState::r_plus, EnsembleState::ground_G,
                             PhotonState::horizontal);
    m(0, 1) = psi2.amplitude(ControlState::r_plus, EnsembleState::ground_G,
                             PhotonState::vertical);
    m(1, 0) = psi2.amplitude(ControlState::r_minus, EnsembleState::ground_G,
                             PhotonState::horizontal);
    m(1, 1) = psi2.amplitude(ControlState::r_minus, EnsembleState::ground_G,
                             PhotonState::vertical);

    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
    CHECK(svd.singularValues()[0] == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(svd.singularValues()[1] == doctest::Approx(kInvSqrt2).epsilon(1e-12));

    // reduced control-spin purity 1/2
    const Eigen::Matrix2cd rho = m * m.adjoint();
    CHECK((rho * rho).trace().real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("unphysical W-with-photon amplitudes are rejected") {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(AtomPhotonState::kDim);
    amps[AtomPhotonState::index(ControlState::ground, EnsembleState::excited_W,
                                PhotonState::horizontal)] = 1.0;
    CHECK_THROWS_AS(AtomPhotonState(amps, StageTag::post_emission), std::invalid_argument);
}

TEST_CASE("node efficiency product") {
    const NodeEfficiencyBreakdown b = node_efficiency(0.99, 0.35, 0.55);
    CHECK(b.eta_node == doctest::Approx(0.190575).epsilon(1e-12));
    CHECK(std::abs(b.eta_node - 0.1906) < 1e-4);
    CHECK(std::abs(b.eta_node - b.f_gate * b.eta_dir * b.eta_map) < 1e-12);
    CHECK(b.eta_retrieval == 0.55);
    CHECK(b.t2_memory_s == doctest::Approx(100e-6).epsilon(1e-12));

    CHECK(node_efficiency(0.0, 0.35, 0.55).eta_node == 0.0);
    CHECK(node_efficiency(0.99, 0.0, 0.55).eta_node == 0.0);
    CHECK(node_efficiency(1.0, 1.0, 1.0).eta_node == 1.0);

    CHECK_THROWS_AS(node_efficiency(1.2, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(node_efficiency(0.5, -0.1, 0.5), std::invalid_argument);
}

TEST_CASE("node efficiency is monotone in each factor") {
    const double grid[] = {0.0, 0.2, 0.5, 0.8, 1.0};
    for (double base : {0.3, 0.7}) {
        double prev = -1.0;
        for (double v : grid) {
            const double eta = node_efficiency(v, base, base).eta_node;
            CHECK(eta >= prev);
            prev = eta;
        }
        prev = -1.0;
        for (double v : grid) {
            const double eta = node_efficiency(base, v, base).eta_node;
            CHECK(eta >= prev);
            prev = eta;
        }
        prev = -1.0;
        for (double v : grid) {
            const double eta = node_efficiency(base, base, v).eta_node;
            CHECK(eta >= prev);
            prev = eta;
        }
    }
}
