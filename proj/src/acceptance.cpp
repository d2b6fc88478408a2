#include "rydnet/acceptance.hpp"

#include "rydnet/blockade.hpp"
#include "rydnet/emission.hpp"
#include "rydnet/interference.hpp"
#include "rydnet/link.hpp"
#include "rydnet/reference.hpp"
#include "rydnet/rng.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

namespace rydnet::acceptance {

namespace {

using std::numbers::pi;

constexpr double kOmega = 2.0 * pi * 10e6;  // Omega/2pi = 10 MHz
constexpr double kRatio = 15.8;             // V / Omega_eff
constexpr int kAtoms = 1000;

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), format, args...);
    return buf;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!detail.str().empty()) detail << "; ";
        detail << what;
        if (!cond) {
            detail << " [VIOLATED]";
            ok = false;
        }
    }

    void note(const std::string& what) {
        if (!detail.str().empty()) detail << "; ";
        detail << what;
    }

    CriterionResult result(int id, std::string name) const {
        return {id, std::move(name), ok, detail.str()};
    }
};

Step1Result default_step1() {
    return run_step1(BlockadeParams::from_ratio(kAtoms, kOmega, kRatio), 400);
}

// --- criterion 1: step-1 Bell fidelity at the operating point, under 1 s ---
CriterionResult c1() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const Step1Result r = default_step1();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    c.require(std::abs(r.bell_fidelity - 0.9993) <= 0.0005,
              fmt("bell_fidelity=%.6f within 0.9993+-0.0005", r.bell_fidelity));
    c.require(ms < 1000.0, fmt("runtime=%.1fms < 1s", ms));
    return c.result(1, "step1-fidelity");
}

// --- criterion 2: doubly-excited population bound over the trajectory ---
CriterionResult c2() {
    Check c;
    const Step1Result r = default_step1();
    double end_leak = r.trajectory.populations.back()[3];
    c.require(r.max_leakage < 1e-4,
              fmt("max |r_c,W> population=%.3e < 1e-4 (end-of-gate %.3e)", r.max_leakage,
                  end_leak));
    if (!c.ok) {
        c.note(fmt("detuned-Rabi transient bound 0.5/(1+ratio^2)=%.3e at ratio=%.1f makes the "
                   "1e-4 bound incompatible with the %.4f fidelity operating point",
                   0.5 / (1.0 + kRatio * kRatio), kRatio, 0.9993));
    }
    return c.result(2, "blockade-leakage");
}

// --- criterion 3: collective enhancement numbers ---
CriterionResult c3() {
    Check c;
    const EffectiveRabi er = effective_rabi(kAtoms, kOmega);
    const double omega_eff_mhz = er.omega_eff / (2.0 * pi * 1e6);
    const double t_pi_ns = er.t_pi * 1e9;
    c.require(std::abs(omega_eff_mhz - 316.2) <= 0.5,
              fmt("Omega_eff/2pi=%.2fMHz within 316.2+-0.5", omega_eff_mhz));
    c.require(std::abs(t_pi_ns - 1.58) <= 0.05, fmt("t_pi=%.3fns within 1.58+-0.05", t_pi_ns));
    return c.result(3, "collective-enhancement");
}

// --- criterion 4: main-lobe first zero and half-max width of the pattern ---
CriterionResult c4() {
    Check c;
    const auto lobe_metrics = [](double l_over_lambda) {
        CloudGeometry g{l_over_lambda, 1.0};
        std::vector<double> grid;
        const double step = 0.005 * pi / 180.0;
        for (double t = 0.0; t <= 25.0 * pi / 180.0; t += step) grid.push_back(t);
        const auto curve = emission_pattern_curve(g, grid, PatternModel::sinc_axial);
        // first zero: first local minimum of the intensity
        double first_zero = 0.0;
        for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
            if (curve[i].second <= curve[i - 1].second && curve[i].second <= curve[i + 1].second) {
                first_zero = curve[i].first;
                break;
            }
        }
        // half width at half maximum, linear interpolation at the 0.5 crossing
        double hwhm = 0.0;
        for (std::size_t i = 1; i < curve.size(); ++i) {
            if (curve[i].second < 0.5) {
                const double x0 = curve[i - 1].first, x1 = curve[i].first;
                const double y0 = curve[i - 1].second, y1 = curve[i].second;
                hwhm = x0 + (0.5 - y0) * (x1 - x0) / (y1 - y0);
                break;
            }
        }
        return std::pair{first_zero, 2.0 * hwhm};
    };

    const auto [zero10, fwhm10] = lobe_metrics(10.0);
    c.require(std::abs(zero10 * 180.0 / pi - 5.74) <= 0.1,
              fmt("L=10: first zero=%.3fdeg within 5.74+-0.1", zero10 * 180.0 / pi));
    for (double l : {5.0, 10.0, 20.0}) {
        const auto [zero, fwhm] = lobe_metrics(l);
        const double ratio = fwhm / (1.0 / l);
        c.require(std::abs(ratio - 1.0) <= 0.2,
                  fmt("L=%.0f: FWHM=%.4frad tracks lambda/L (ratio %.3f)", l, fwhm, ratio));
    }
    return c.result(4, "emission-pattern");
}

// --- criterion 5: directional efficiency at the operating geometry ---
CriterionResult c5() {
    Check c;
    const FiberAcceptance acc{6.0 * pi / 180.0};
    const CloudGeometry op{10.0, 1.0};
    const double eta_op = directional_efficiency(op, acc, 2001);
    c.require(std::abs(eta_op - 0.35) <= 0.15,
              fmt("eta_dir(L=10,R=1,6deg)=%.4f within 0.35+-0.15", eta_op));
    const double eta_l1 = directional_efficiency(CloudGeometry{1.0, 1.0}, acc, 2001);
    c.require(eta_op > eta_l1, fmt("eta_dir(L=10)=%.4f > eta_dir(L=1)=%.4f", eta_op, eta_l1));
    const double eta_full = directional_efficiency(op, FiberAcceptance{pi / 2.0}, 2001);
    c.require(eta_full == 1.0, fmt("eta_dir(theta_max=pi/2)=%.17g == 1", eta_full));
    const double eta_tr =
        directional_efficiency(op, acc, 2001, PatternModel::sinc_with_transverse);
    c.note(fmt("radius-aware model gives %.4f at the same point (model spread)", eta_tr));
    return c.result(5, "directional-efficiency");
}

// --- criterion 6: single-node efficiency product ---
CriterionResult c6() {
    Check c;
    const NodeEfficiencyBreakdown b = node_efficiency(0.99, 0.35, 0.55);
    c.require(std::abs(b.eta_node - 0.1906) <= 1e-4,
              fmt("eta_node=%.6f within 0.1906+-1e-4 (~0.19)", b.eta_node));
    return c.result(6, "node-efficiency");
}

// --- criterion 7: HOM suppression and heralding exactness ---
CriterionResult c7() {
    Check c;
    const TwoPhotonState joint = joint_state(build_psi2(), build_psi2());
    const TwoPhotonState out = beamsplitter(joint);

    const double p_hom_h = herald(out, HeraldPattern::Hc_Hd).probability;
    const double p_hom_v = herald(out, HeraldPattern::Vc_Vd).probability;
    c.require(p_hom_h < 1e-12 && p_hom_v < 1e-12,
              fmt("identical-polarization coincidences %.1e, %.1e < 1e-12", p_hom_h, p_hom_v));

    const HeraldOutcome hv = herald(out, HeraldPattern::Hc_Vd);
    const HeraldOutcome vh = herald(out, HeraldPattern::Vc_Hd);
    c.require(std::abs(hv.probability - 0.125) <= 1e-12 &&
                  std::abs(vh.probability - 0.125) <= 1e-12,
              fmt("cross-port patterns at %.15f, %.15f (1/8 each)", hv.probability,
                  vh.probability));
    c.require(std::abs(heralding_probability(out) - 0.25) <= 1e-12,
              fmt("P_herald=%.15f (1/4)", heralding_probability(out)));

    Eigen::Vector4cd singlet = Eigen::Vector4cd::Zero();
    singlet[1] = 1.0 / std::sqrt(2.0);
    singlet[2] = -1.0 / std::sqrt(2.0);
    for (const auto& o : {hv, vh}) {
        const double fid = std::norm(singlet.dot(o.atomic_state->amplitudes()));
        c.require(fid >= 1.0 - 1e-12,
                  fmt("%s heralded state singlet fidelity %.15f", herald_pattern_name(o.pattern),
                      fid));
    }
    return c.result(7, "hom-heralding");
}

// --- criterion 8: link-budget arithmetic ---
CriterionResult c8() {
    Check c;
    LinkParams p;                 // eta_node 0.19, eta_det 0.8, alpha 0.2
    p.distance_km = 10.0 * std::log10(1.25) / p.alpha_db_per_km;  // eta_prop = 0.8
    const double pe_short = success_probability(p);
    c.require(std::abs(pe_short - 0.0037) <= 0.0001,
              fmt("P_E(eta_prop=0.8)=%.5f%% within 0.37+-0.01%%", 100.0 * pe_short));

    p.distance_km = 20.0;
    const double pe_20 = success_probability(p);
    c.require(std::abs(pe_20 - 0.0009) <= 0.00005,
              fmt("P_E(20km)=%.5f%% within 0.09+-0.005%%", 100.0 * pe_20));

    LinkParams ideal;
    ideal.eta_node = 1.0;
    ideal.eta_det = 1.0;
    ideal.distance_km = 0.0;
    c.require(success_probability(ideal) == 0.25,
              fmt("ideal limit P_E=%.17g == 0.25", success_probability(ideal)));
    return c.result(8, "link-arithmetic");
}

// --- criterion 9: cumulative retry closed form + Monte Carlo agreement ---
CriterionResult c9() {
    Check c;
    const double closed = cumulative_success(0.005, 100).back().second;
    c.require(std::abs(closed - 0.3942) <= 1e-4,
              fmt("1-(1-0.005)^100=%.6f within 0.3942+-1e-4", closed));

    LinkParams p;  // defaults give T2/T_regen = 100 attempts
    p.distance_km = 0.0;
    p.eta_node = std::sqrt(0.02) / p.eta_det;  // pins P_E = 0.005
    const std::uint64_t trials = 100000;
    const LinkStats mc = simulate_link(p, trials, 20240901);
    const double se = std::sqrt(closed * (1.0 - closed) / static_cast<double>(trials));
    c.require(std::abs(mc.mc_success_frequency - closed) <= 3.0 * se,
              fmt("MC frequency %.5f within 3se=%.5f of %.5f (P_E=%.6f)",
                  mc.mc_success_frequency, 3.0 * se, closed, mc.p_e));

    const LinkStats again = simulate_link(p, trials, 20240901);
    const LinkStats serial = simulate_link_serial(p, trials, 20240901);
    const bool identical = mc.mc_success_frequency == again.mc_success_frequency &&
                           mc.mc_mean_attempts == again.mc_mean_attempts &&
                           mc.mc_success_frequency == serial.mc_success_frequency &&
                           mc.mc_mean_attempts == serial.mc_mean_attempts;
    c.require(identical, "fixed seed bit-reproducible (repeat + serial reference)");
    return c.result(9, "cumulative-retry");
}

// --- criterion 10: entanglement rate vs distance ---
CriterionResult c10() {
    Check c;
    LinkParams p;
    const double rate20 = entanglement_rate(p);
    c.require(rate20 > 600.0, fmt("rate(20km, defaults)=%.1fHz > 600Hz", rate20));

    bool ordered = true;
    for (int i = 0; i <= 50; ++i) {
        LinkParams q = p;
        q.distance_km = i;
        double prev = -1.0;
        for (double eta : {0.15, 0.19, 0.25}) {
            q.eta_node = eta;
            const double r = entanglement_rate(q);
            if (r <= prev) ordered = false;
            prev = r;
        }
    }
    c.require(ordered, "rate curves strictly ordered in eta_node at 0..50km");

    LinkParams hi = p;
    hi.eta_node = 0.25;
    c.require(entanglement_rate(hi) > 1000.0,
              fmt("rate(20km, eta_node=0.25)=%.1fHz > 1kHz", entanglement_rate(hi)));
    return c.result(10, "rate-at-distance");
}

// --- criterion 11: visibility relation and density-matrix validity ---
CriterionResult c11() {
    Check c;
    const HeraldedFidelity hf = heralded_fidelity({0.95});
    c.require(std::abs(hf.fidelity - 0.975) <= 1e-12, fmt("F(V=0.95)=%.15f == 0.975", hf.fidelity));

    const Eigen::Matrix4cd& rho = hf.density_matrix;
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const double trace_err = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
    const double min_eig = es.eigenvalues().minCoeff();
    c.require(herm <= 1e-12 && trace_err <= 1e-12 && min_eig >= -1e-12,
              fmt("rho Hermitian (%.1e), unit trace (%.1e), eigenvalues >= %.1e", herm, trace_err,
                  min_eig));
    return c.result(11, "visibility-relation");
}

// --- criterion 12: independent-oracle suites ---
CriterionResult c12() {
    Check c;

    // (a) eigendecomposition propagator vs raw RK4 on the step-1 protocol
    {
        const BlockadeParams bp = BlockadeParams::from_ratio(kAtoms, kOmega, kRatio);
        const auto to_cmat = [](const HermitianOperator& h) {
            reference::Cmat m(4, std::vector<Complex>(4));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m[i][j] = h.matrix()(i, j);
            return m;
        };
        const std::vector<reference::HamiltonianSegment> segments = {
            {to_cmat(build_step1_hamiltonian(bp, DriveStage::control_drive)),
             pi / (2.0 * bp.omega)},
            {to_cmat(build_step1_hamiltonian(bp, DriveStage::ensemble_drive)),
             pi / bp.effective_rabi()},
        };
        const reference::Cvec rk4 =
            reference::integrate_schrodinger_rk4({1.0, 0.0, 0.0, 0.0}, segments, 10000);
        const Step1Result r = default_step1();
        double max_diff = 0.0;
        for (int i = 0; i < 4; ++i) {
            max_diff = std::max(max_diff, std::abs(rk4[i] - r.final_state.amplitudes()[i]));
        }
        c.require(max_diff <= 1e-6,
                  fmt("propagator vs RK4 (1e4 steps/segment): max amplitude diff %.2e", max_diff));
    }

    // (b) sinc closed forms vs seeded Monte Carlo position sums, thin cloud
    {
        const CloudGeometry g{5.0, 0.05};
        const int n = 20000, azimuths = 16;
        const std::uint64_t seed = 777;
        double worst_proj = 0.0, worst_full = 0.0;
        std::ostringstream gap;
        for (int deg = 0; deg <= 3; ++deg) {
            const double theta = deg * pi / 180.0;
            const double sinc2 = std::pow(array_factor_sinc(theta, g.length_over_lambda), 2);
            const double mc_proj =
                array_factor_numeric(theta, g, n, substream_seed(seed, 2 * deg),
                                     MismatchConvention::axial_projection, azimuths);
            const double mc_full =
                array_factor_numeric(theta, g, n, substream_seed(seed, 2 * deg + 1),
                                     MismatchConvention::full_vector, azimuths);
            const double ax = 1.0 - std::cos(theta);
            const double sf = (std::abs(ax) < 1e-300)
                                  ? 1.0
                                  : std::sin(pi * g.length_over_lambda * ax) /
                                        (pi * g.length_over_lambda * ax);
            const double closed_full =
                std::pow(sf * transverse_disk_factor(
                                  2.0 * pi * g.radius_over_lambda * std::sin(theta)),
                         2);
            worst_proj = std::max(worst_proj, std::abs(mc_proj - sinc2));
            worst_full = std::max(worst_full, std::abs(mc_full - closed_full));
            if (deg > 0) gap << (deg > 1 ? ", " : "") << fmt("%.1f%%@%ddeg",
                                                             100.0 * std::abs(mc_full - sinc2),
                                                             deg);
        }
        c.require(worst_proj <= 0.02,
                  fmt("projection MC vs sinc^2 on main lobe: max diff %.4f", worst_proj));
        c.require(worst_full <= 0.02,
                  fmt("full-vector MC vs its closed form: max diff %.4f", worst_full));
        c.note("convention gap full-vector vs sinc^2: " + gap.str());
    }

    // (c) beamsplitter matrix route vs operator-expansion route
    {
        const TwoPhotonState joint = joint_state(build_psi2(), build_psi2());
        double max_diff =
            (beamsplitter(joint).amplitudes() - reference::beamsplitter_expand(joint))
                .cwiseAbs()
                .maxCoeff();
        SplitMix64 rng(424242);
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::VectorXcd amps(TwoPhotonState::kDim);
            for (int i = 0; i < TwoPhotonState::kDim; ++i) {
                amps[i] = Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
            }
            const TwoPhotonState random_state(amps / amps.norm(), ModeFrame::input_ab);
            max_diff = std::max(max_diff, (beamsplitter(random_state).amplitudes() -
                                           reference::beamsplitter_expand(random_state))
                                              .cwiseAbs()
                                              .maxCoeff());
        }
        c.require(max_diff <= 1e-12,
                  fmt("beamsplitter vs symbolic expansion: max amplitude diff %.2e", max_diff));
    }
    return c.result(12, "oracle-suites");
}

} // namespace

CriterionResult run_criterion(int id) {
    switch (id) {
    case 1: return c1();
    case 2: return c2();
    case 3: return c3();
    case 4: return c4();
    case 5: return c5();
    case 6: return c6();
    case 7: return c7();
    case 8: return c8();
    case 9: return c9();
    case 10: return c10();
    case 11: return c11();
    case 12: return c12();
    default: throw std::invalid_argument("run_criterion: id must be 1..12");
    }
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    out.reserve(kCriterionCount);
    for (int id = 1; id <= kCriterionCount; ++id) {
        out.push_back(run_criterion(id));
    }
    return out;
}

bool report(std::ostream& out, const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail
            << "\n";
        all = all && r.passed;
    }
    out << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
    return all;
}

} // namespace rydnet::acceptance
