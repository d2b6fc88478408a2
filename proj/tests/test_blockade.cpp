#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rydnet/blockade.hpp"
#include "rydnet/reference.hpp"

#include <cmath>
#include <numbers>

using namespace rydnet;
using std::numbers::pi;

namespace {

constexpr double kOmegaPhys = 2.0 * pi * 10e6;

// Bell fidelity recomputed through the raw RK4 route, no shared code with
// evolve_piecewise.
double rk4_bell_fidelity(const BlockadeParams& p, int steps) {
    const auto to_cmat = [](const HermitianOperator& h) {
        reference::Cmat m(4, std::vector<Complex>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = h.matrix()(i, j);
        return m;
    };
    const std::vector<reference::HamiltonianSegment> segments = {
        {to_cmat(build_step1_hamiltonian(p, DriveStage::control_drive)), pi / (2.0 * p.omega)},
        {to_cmat(build_step1_hamiltonian(p, DriveStage::ensemble_drive)),
         pi / p.effective_rabi()},
    };
    const reference::Cvec psi =
        reference::integrate_schrodinger_rk4({1.0, 0.0, 0.0, 0.0}, segments, steps);
    const Complex overlap =
        psi[1] / std::sqrt(2.0) + Complex(0.0, 1.0) * psi[2] / std::sqrt(2.0);
    return std::norm(overlap);
}

} // namespace

TEST_CASE("hamiltonian structure") {
    const BlockadeParams p = BlockadeParams::from_ratio(4, 1.0, 3.0);

    const auto ensemble = build_step1_hamiltonian(p, DriveStage::ensemble_drive).matrix();
    CHECK(ensemble(3, 3).real() == doctest::Approx(p.blockade_v).epsilon(1e-12));
    CHECK(std::abs(ensemble(2, 0) - Complex(1.0, 0.0)) < 1e-12);  // Omega_eff/2 = 1
    CHECK(std::abs(ensemble(3, 1) - ensemble(2, 0)) < 1e-12);

    BlockadeParams v0 = p;
    v0.blockade_v = 0.0;
    const auto sym = build_step1_hamiltonian(v0, DriveStage::ensemble_drive).matrix();
    CHECK(std::abs(sym(3, 1) - sym(2, 0)) == 0.0);  // r_c block equals g_c block
    CHECK(std::abs(sym(3, 3)) == 0.0);

    const auto control = build_step1_hamiltonian(p, DriveStage::control_drive).matrix();
    CHECK(std::abs(control(1, 0)) == doctest::Approx(0.5 * p.omega).epsilon(1e-12));
    CHECK(std::abs(control(2, 0)) == 0.0);  // no ensemble coupling in this stage
}

TEST_CASE("intermediate state after the pi/2 pulse") {
    const BlockadeParams p = BlockadeParams::from_ratio(1000, kOmegaPhys, 15.8);
    const QuantumState mid = intermediate_state_check(p);

    Eigen::VectorXcd psi_c = Eigen::VectorXcd::Zero(4);
    psi_c[0] = psi_c[1] = 1.0 / std::sqrt(2.0);
    CHECK(fidelity(mid, QuantumState(psi_c, kStep1BasisLabel)) > 1.0 - 1e-9);

    CHECK(mid.population(2) == 0.0);  // W states untouched before the ensemble pulse
    CHECK(mid.population(3) == 0.0);

    // segment duration pi/(2 Omega) for Omega/2pi = 10 MHz is 25 ns
    CHECK(pi / (2.0 * p.omega) == doctest::Approx(25e-9).epsilon(1e-12));
}

TEST_CASE("effective Rabi frequency and pi time") {
    const EffectiveRabi er = effective_rabi(1000, kOmegaPhys);
    CHECK(er.omega_eff / (2.0 * pi * 1e6) == doctest::Approx(316.22776602).epsilon(1e-9));
    CHECK(er.t_pi == doctest::Approx(1.5811388301e-9).epsilon(1e-9));

    CHECK(effective_rabi(1, 3.5).omega_eff == doctest::Approx(3.5).epsilon(1e-15));

    const EffectiveRabi four = effective_rabi(4, 1.0);
    CHECK(four.omega_eff == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(four.t_pi == doctest::Approx(pi / 2.0).epsilon(1e-15));

    CHECK_THROWS_AS(effective_rabi(0, 1.0), std::invalid_argument);
}

TEST_CASE("blockade radius") {
    CHECK(blockade_radius(2.5, 2.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(blockade_radius(64.0 * 2.5, 2.5) ==
          doctest::Approx(2.0 * blockade_radius(2.5, 2.5)).epsilon(1e-12));

    // C6/2pi = 500 GHz um^6, Omega/2pi = 10 MHz -> r_b = (5e4)^(1/6) um
    const double c6 = 2.0 * pi * 500e9 * 1e-36;  // rad/s m^6
    const double rb = blockade_radius(c6, kOmegaPhys);
    CHECK(rb == doctest::Approx(6.0696e-6).epsilon(1e-4));

    CHECK_THROWS_AS(blockade_radius(-1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(blockade_radius(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("operating point fidelity") {
    const Step1Result r = run_step1(BlockadeParams::from_ratio(1000, kOmegaPhys, 15.8), 400);
    // frozen via the independent integrator (also re-derived live below)
    CHECK(std::abs(r.bell_fidelity - 0.9992348) < 1e-5);
    CHECK(std::abs(r.bell_fidelity - 0.9993) < 0.0005);

    const double oracle = rk4_bell_fidelity(BlockadeParams::from_ratio(1000, kOmegaPhys, 15.8),
                                            10000);
    CHECK(std::abs(r.bell_fidelity - oracle) < 1e-6);
}

TEST_CASE("fidelity at ratio 5 matches the frozen oracle value") {
    const BlockadeParams p = BlockadeParams::from_ratio(1000, 1.0, 5.0);
    const Step1Result r = run_step1(p, 200);
    CHECK(std::abs(r.bell_fidelity - 0.9749870) < 1e-5);       // frozen, RK4 1e5 steps
    CHECK(std::abs(r.bell_fidelity - rk4_bell_fidelity(p, 100000)) < 1e-6);
}

TEST_CASE("normalized and physical units give the same dynamics") {
    const Step1Result phys = run_step1(BlockadeParams::from_ratio(1000, kOmegaPhys, 15.8), 50);
    const Step1Result norm = run_step1(BlockadeParams::from_ratio(1000, 1.0, 15.8), 50);
    CHECK(std::abs(phys.bell_fidelity - norm.bell_fidelity) < 1e-9);
    CHECK(std::abs(phys.max_leakage - norm.max_leakage) < 1e-9);
}

TEST_CASE("leakage transient matches the detuned-Rabi bound") {
    // max |r_c,W> population is 0.5 * Omega_eff^2 / (Omega_eff^2 + V^2): the
    // |r_c,G_e> component (weight 1/2) cycles at the generalized Rabi
    // frequency, and the pi pulse spans several such cycles.
    const double ratio = 15.8;
    const Step1Result r = run_step1(BlockadeParams::from_ratio(1000, 1.0, ratio), 2000);
    const double bound = 0.5 / (1.0 + ratio * ratio);
    CHECK(r.max_leakage == doctest::Approx(bound).epsilon(2e-3));
    CHECK(r.max_leakage <= bound * (1.0 + 1e-9));
    // end-of-gate residual is far below the transient peak
    CHECK(r.trajectory.populations.back()[3] < 2e-4);
}

TEST_CASE("fidelity is non-decreasing in the blockade ratio") {
    double prev = 0.0;
    for (double ratio : {1.0, 2.0, 5.0, 10.0, 15.8, 30.0}) {
        const Step1Result r = run_step1(BlockadeParams::from_ratio(1000, 1.0, ratio), 50);
        CHECK(r.bell_fidelity >= prev - 1e-12);
        prev = r.bell_fidelity;
    }
}

TEST_CASE("perfect-blockade branch reaches unit fidelity") {
    const Step1Result r = run_step1(BlockadeParams::from_ratio(1000, 1.0, 15.8), 50, true);
    CHECK(r.bell_fidelity > 1.0 - 1e-9);
    CHECK(r.max_leakage < 1e-15);
}

TEST_CASE("leakage drops at least 3x when the drive-to-blockade ratio halves") {
    for (double ratio : {2.0, 5.0, 15.8}) {
        const double leak = run_step1(BlockadeParams::from_ratio(64, 1.0, ratio), 3000)
                                .max_leakage;
        const double leak_half =
            run_step1(BlockadeParams::from_ratio(64, 1.0, 2.0 * ratio), 3000).max_leakage;
        CHECK(leak >= 3.0 * leak_half);
    }
}

TEST_CASE("populations stay normalized along the trajectory") {
    const Step1Result r = run_step1(BlockadeParams::from_ratio(1000, 1.0, 15.8), 400);
    for (const auto& pops : r.trajectory.populations) {
        CHECK(std::abs(pops.sum() - 1.0) < 1e-9);
    }
}

TEST_CASE("trajectory shows the expected pulse shape") {
    const BlockadeParams p = BlockadeParams::from_ratio(1000, 1.0, 15.8);
    const Step1Result r = run_step1(p, 100);
    // population of |g_c,G_e> right after the pi/2 pulse
    const double t_half = pi / (2.0 * p.omega);
    for (std::size_t i = 0; i < r.trajectory.times.size(); ++i) {
        if (std::abs(r.trajectory.times[i] - t_half) < 1e-12) {
            CHECK(r.trajectory.populations[i][0] == doctest::Approx(0.5).epsilon(1e-9));
        }
    }
    CHECK(r.trajectory.times.front() == 0.0);
    CHECK(r.trajectory.times.back() ==
          doctest::Approx(t_half + pi / p.effective_rabi()).epsilon(1e-12));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(BlockadeParams::from_ratio(0, 1.0, 1.0).validate(), std::invalid_argument);
    BlockadeParams bad;
    bad.omega = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(run_step1(BlockadeParams::from_ratio(10, 1.0, 1.0), 1),
                    std::invalid_argument);
}
