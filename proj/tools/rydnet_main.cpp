// Command-line front end: reproduces each protocol figure as CSV data, reports
// the scalar operating-point numbers, and runs the acceptance suite.

#include "rydnet/acceptance.hpp"
#include "rydnet/atom_photon.hpp"
#include "rydnet/blockade.hpp"
#include "rydnet/config.hpp"
#include "rydnet/csv.hpp"
#include "rydnet/emission.hpp"
#include "rydnet/interference.hpp"
#include "rydnet/link.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace rydnet;
using std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitAcceptance = 2;
constexpr int kExitIo = 3;

constexpr double kGamma0Hz = 6e6;  // single-atom decay rate used for tau_emit

void emit_error(const std::string& kind, const std::string& message) {
    nlohmann::json record;
    record["error"]["kind"] = kind;
    record["error"]["message"] = message;
    std::cerr << record.dump() << "\n";
}

struct CommonFlags {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
};

// Per-subcommand option wiring: every subcommand takes the shared config /
// seed / output flags plus the parameter overrides.
void attach_common_flags(CLI::App* cmd, CommonFlags* flags) {
    cmd->add_option("--config", flags->config_path, "flat key=value config file");

    static const std::vector<std::pair<const char*, const char*>> kFlagKeys = {
        {"--seed", "seed"},
        {"--out", "output_dir"},
        {"--n-atoms", "blockade.N"},
        {"--blockade-ratio", "blockade.ratio"},
        {"--cloud-length", "geometry.L_over_lambda"},
        {"--cloud-radius", "geometry.R_over_lambda"},
        {"--theta-max-deg", "geometry.theta_max_deg"},
        {"--distance-km", "link.distance_km"},
        {"--alpha-db-km", "link.alpha_db_km"},
        {"--eta-det", "link.eta_det"},
        {"--visibility", "link.visibility"},
        {"--trials", "link.trials"},
    };
    for (const auto& [flag, key] : kFlagKeys) {
        const std::string key_copy = key;
        cmd->add_option_function<std::string>(
            flag,
            [flags, key_copy](const std::string& value) {
                flags->overrides.emplace_back(key_copy, value);
            },
            std::string("overrides config key ") + key);
    }
}

std::filesystem::path out_dir(const RunConfig& cfg) {
    std::filesystem::path dir(cfg.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                                 ec.message());
    }
    return dir;
}

// ---- step1 ----------------------------------------------------------------

void run_step1_cmd(const RunConfig& cfg) {
    const auto params = BlockadeParams::from_ratio(static_cast<int>(cfg.blockade.n_atoms),
                                                   cfg.omega_rad_s(),
                                                   cfg.blockade.blockade_ratio);
    const Step1Result result =
        run_step1(params, static_cast<int>(cfg.blockade.samples));
    const EffectiveRabi er =
        effective_rabi(static_cast<int>(cfg.blockade.n_atoms), cfg.omega_rad_s());

    CsvWriter traj({"time_s", "pop_gcGe", "pop_rcGe", "pop_gcW", "pop_rcW"});
    for (std::size_t i = 0; i < result.trajectory.times.size(); ++i) {
        const auto& p = result.trajectory.populations[i];
        traj.add_row({result.trajectory.times[i], p[0], p[1], p[2], p[3]});
    }
    traj.write(out_dir(cfg) / "step1_trajectory.csv");

    CsvWriter summary({"key", "value"});
    summary.add_row({std::string("n_atoms"), static_cast<long long>(cfg.blockade.n_atoms)});
    summary.add_row({std::string("omega_2pi_mhz"), cfg.blockade.omega_mhz});
    summary.add_row({std::string("blockade_ratio"), cfg.blockade.blockade_ratio});
    summary.add_row({std::string("omega_eff_2pi_mhz"), er.omega_eff / (2.0 * pi * 1e6)});
    summary.add_row({std::string("t_half_pi_s"), pi / (2.0 * params.omega)});
    summary.add_row({std::string("t_pi_s"), er.t_pi});
    summary.add_row({std::string("bell_fidelity"), result.bell_fidelity});
    summary.add_row({std::string("max_leakage"), result.max_leakage});
    summary.write(out_dir(cfg) / "step1_summary.csv");

    std::cout << "step1: bell_fidelity=" << CsvWriter::format_double(result.bell_fidelity)
              << " max_leakage=" << CsvWriter::format_double(result.max_leakage)
              << " t_pi=" << CsvWriter::format_double(er.t_pi) << "s\n";
}

// ---- emission --------------------------------------------------------------

void run_emission_cmd(const RunConfig& cfg) {
    const double theta_max = cfg.geometry.theta_max_deg * pi / 180.0;
    const FiberAcceptance acceptance{theta_max};

    // angular pattern for the three reference aspect ratios
    std::vector<double> grid;
    for (int i = 0; i <= 360; ++i) grid.push_back((pi / 2.0) * i / 360.0);
    CsvWriter pattern({"theta_deg", "intensity_L10", "intensity_L5", "intensity_L1"});
    std::vector<std::vector<std::pair<double, double>>> curves;
    for (double l : {10.0, 5.0, 1.0}) {
        curves.push_back(emission_pattern_curve(
            CloudGeometry{l, cfg.geometry.radius_over_lambda}, grid));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        pattern.add_row({grid[i] * 180.0 / pi, curves[0][i].second, curves[1][i].second,
                         curves[2][i].second});
    }
    pattern.write(out_dir(cfg) / "emission_pattern.csv");

    // directional efficiency vs aspect ratio for three transverse radii;
    // the (L, R) points are independent, so compute them in parallel
    CsvWriter eff({"L_over_lambda", "eta_dir_R0p5", "eta_dir_R1", "eta_dir_R2",
                   "eta_dir_sinc"});
    std::vector<double> lengths;
    for (double l = 1.0; l <= 20.0 + 1e-9; l += 0.5) lengths.push_back(l);
    const std::vector<double> radii = {0.5, 1.0, 2.0};
    std::vector<std::array<double, 4>> eta(lengths.size());
    const auto n_lengths = static_cast<std::int64_t>(lengths.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n_lengths; ++i) {
        for (std::size_t j = 0; j < radii.size(); ++j) {
            eta[i][j] = directional_efficiency(CloudGeometry{lengths[i], radii[j]}, acceptance,
                                               801, PatternModel::sinc_with_transverse);
        }
        eta[i][3] = directional_efficiency(
            CloudGeometry{lengths[i], cfg.geometry.radius_over_lambda}, acceptance, 801);
    }
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        eff.add_row({lengths[i], eta[i][0], eta[i][1], eta[i][2], eta[i][3]});
    }
    eff.write(out_dir(cfg) / "emission_efficiency.csv");

    const CloudGeometry op{cfg.geometry.length_over_lambda, cfg.geometry.radius_over_lambda};
    const double eta_sinc = directional_efficiency(op, acceptance, 2001);
    const double eta_tr =
        directional_efficiency(op, acceptance, 2001, PatternModel::sinc_with_transverse);
    const double tau =
        collective_emission_time({static_cast<int>(cfg.blockade.n_atoms), kGamma0Hz});

    CsvWriter summary({"key", "value"});
    summary.add_row({std::string("L_over_lambda"), cfg.geometry.length_over_lambda});
    summary.add_row({std::string("R_over_lambda"), cfg.geometry.radius_over_lambda});
    summary.add_row({std::string("theta_max_deg"), cfg.geometry.theta_max_deg});
    summary.add_row({std::string("eta_dir_sinc_model"), eta_sinc});
    summary.add_row({std::string("eta_dir_transverse_model"), eta_tr});
    summary.add_row({std::string("gamma0_hz"), kGamma0Hz});
    summary.add_row({std::string("tau_emit_s"), tau});
    summary.write(out_dir(cfg) / "emission_summary.csv");

    std::cout << "emission: eta_dir=" << CsvWriter::format_double(eta_sinc)
              << " (transverse model " << CsvWriter::format_double(eta_tr)
              << ") tau_emit=" << CsvWriter::format_double(tau) << "s\n";
}

// ---- node ------------------------------------------------------------------

void run_node_cmd(const RunConfig& cfg) {
    const NodeEfficiencyBreakdown b =
        node_efficiency(cfg.node.f_gate, cfg.node.eta_dir, cfg.node.eta_map, cfg.node.eta_r,
                        cfg.link.t2_us * 1e-6);

    const double theta_max = cfg.geometry.theta_max_deg * pi / 180.0;
    const CloudGeometry op{cfg.geometry.length_over_lambda, cfg.geometry.radius_over_lambda};
    const double eta_model_sinc = directional_efficiency(op, FiberAcceptance{theta_max}, 2001);
    const double eta_model_tr = directional_efficiency(op, FiberAcceptance{theta_max}, 2001,
                                                       PatternModel::sinc_with_transverse);

    CsvWriter record({"key", "value"});
    record.add_row({std::string("f_gate"), b.f_gate});
    record.add_row({std::string("eta_dir"), b.eta_dir});
    record.add_row({std::string("eta_map"), b.eta_map});
    record.add_row({std::string("eta_node"), b.eta_node});
    record.add_row({std::string("eta_retrieval"), b.eta_retrieval});
    record.add_row({std::string("t2_memory_s"), b.t2_memory_s});
    record.add_row({std::string("eta_dir_model_sinc"), eta_model_sinc});
    record.add_row({std::string("eta_dir_model_transverse"), eta_model_tr});
    record.write(out_dir(cfg) / "node_efficiency.csv");

    std::cout << "node: eta_node=" << CsvWriter::format_double(b.eta_node) << " = "
              << CsvWriter::format_double(b.f_gate) << " * "
              << CsvWriter::format_double(b.eta_dir) << " * "
              << CsvWriter::format_double(b.eta_map) << "\n";
}

// ---- hom -------------------------------------------------------------------

void run_hom_cmd(const RunConfig& cfg) {
    const TwoPhotonState out = beamsplitter(joint_state(build_psi2(), build_psi2()));
    const auto table = herald_table(out);

    CsvWriter outcomes({"pattern", "probability", "amp_pp_re", "amp_pp_im", "amp_pm_re",
                        "amp_pm_im", "amp_mp_re", "amp_mp_im", "amp_mm_re", "amp_mm_im"});
    for (const auto& o : table) {
        Eigen::Vector4cd a = Eigen::Vector4cd::Zero();
        if (o.atomic_state) a = o.atomic_state->amplitudes();
        outcomes.add_row({std::string(herald_pattern_name(o.pattern)), o.probability,
                          a[0].real(), a[0].imag(), a[1].real(), a[1].imag(), a[2].real(),
                          a[2].imag(), a[3].real(), a[3].imag()});
    }
    outcomes.write(out_dir(cfg) / "herald_outcomes.csv");

    CsvWriter fv({"visibility", "fidelity"});
    for (int i = 0; i <= 100; ++i) {
        const double v = i / 100.0;
        fv.add_row({v, heralded_fidelity({v}).fidelity});
    }
    fv.write(out_dir(cfg) / "fidelity_vs_visibility.csv");

    std::cout << "hom: P_herald=" << CsvWriter::format_double(heralding_probability(out))
              << " F(V=" << CsvWriter::format_double(cfg.link.visibility)
              << ")=" << CsvWriter::format_double(
                             heralded_fidelity({cfg.link.visibility}).fidelity)
              << "\n";
}

// ---- link ------------------------------------------------------------------

void run_link_cmd(const RunConfig& cfg) {
    CsvWriter cumulative({"M", "p_cum_pe0.2pct", "p_cum_pe0.5pct", "p_cum_pe1pct",
                          "p_cum_pe2pct"});
    const std::vector<double> pes = {0.002, 0.005, 0.01, 0.02};
    std::vector<std::vector<std::pair<int, double>>> curves;
    for (double pe : pes) curves.push_back(cumulative_success(pe, 200));
    for (int m = 0; m < 200; ++m) {
        cumulative.add_row({static_cast<long long>(m + 1), curves[0][m].second,
                            curves[1][m].second, curves[2][m].second, curves[3][m].second});
    }
    cumulative.write(out_dir(cfg) / "link_cumulative.csv");

    CsvWriter rate({"distance_km", "rate_hz_eta0.15", "rate_hz_eta0.19", "rate_hz_eta0.25"});
    for (int d = 0; d <= 50; ++d) {
        std::vector<CsvWriter::Cell> row{static_cast<double>(d)};
        for (double eta : {0.15, 0.19, 0.25}) {
            LinkParams p = cfg.link_params();
            p.distance_km = d;
            p.eta_node = eta;
            row.emplace_back(entanglement_rate(p));
        }
        rate.add_row(std::move(row));
    }
    rate.write(out_dir(cfg) / "link_rate.csv");

    const LinkParams params = cfg.link_params();
    const LinkStats stats =
        simulate_link(params, static_cast<std::uint64_t>(cfg.link.trials), cfg.seed);
    CsvWriter mc({"key", "value"});
    mc.add_row({std::string("eta_node"), params.eta_node});
    mc.add_row({std::string("eta_det"), params.eta_det});
    mc.add_row({std::string("distance_km"), params.distance_km});
    mc.add_row({std::string("alpha_db_per_km"), params.alpha_db_per_km});
    mc.add_row({std::string("p_e"), stats.p_e});
    mc.add_row({std::string("rate_hz"), stats.rate_hz});
    mc.add_row({std::string("max_attempts"), static_cast<long long>(stats.max_attempts)});
    mc.add_row({std::string("p_cumulative_closed"),
                stats.cumulative.empty() ? 0.0 : stats.cumulative.back().second});
    mc.add_row({std::string("trials"), static_cast<long long>(stats.trials)});
    mc.add_row({std::string("seed"), static_cast<long long>(stats.seed)});
    mc.add_row({std::string("mc_success_frequency"), stats.mc_success_frequency});
    mc.add_row({std::string("mc_success_frequency_se"), stats.mc_success_frequency_se});
    mc.add_row({std::string("mc_empirical_p_e"), stats.mc_empirical_p_e});
    mc.add_row({std::string("mc_empirical_p_e_se"), stats.mc_empirical_p_e_se});
    mc.add_row({std::string("mc_mean_attempts"), stats.mc_mean_attempts});
    mc.write(out_dir(cfg) / "link_mc.csv");

    std::cout << "link: P_E=" << CsvWriter::format_double(stats.p_e)
              << " rate=" << CsvWriter::format_double(stats.rate_hz)
              << "Hz mc_success_frequency="
              << CsvWriter::format_double(stats.mc_success_frequency) << "\n";
}

int run_check_cmd() {
    const auto results = acceptance::run_all();
    return acceptance::report(std::cout, results) ? kExitOk : kExitAcceptance;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rydnet: cavity-free Rydberg-ensemble quantum networking simulator"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"step1", "blockade-gate dynamics: trajectory CSV and fidelity/leakage summary"},
        {"emission", "angular pattern and directional-efficiency CSVs"},
        {"node", "single-node efficiency breakdown record"},
        {"hom", "beamsplitter herald table and fidelity-vs-visibility CSV"},
        {"link", "cumulative-retry and rate-vs-distance CSVs plus Monte Carlo stats"},
        {"figures", "all of the above"},
        {"check", "run the acceptance suite (exit 0 iff all criteria pass)"},
    };
    std::map<std::string, CommonFlags> flags;
    for (const auto& [name, desc] : commands) {
        attach_common_flags(app.add_subcommand(name, desc), &flags[name]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("cli_parse", e.what());
        return kExitValidation;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const CommonFlags& f = flags[name];

    try {
        if (name == "check") {
            return run_check_cmd();
        }
        const RunConfig cfg = parse_config(f.config_path, f.overrides);
        if (name == "step1") {
            run_step1_cmd(cfg);
        } else if (name == "emission") {
            run_emission_cmd(cfg);
        } else if (name == "node") {
            run_node_cmd(cfg);
        } else if (name == "hom") {
            run_hom_cmd(cfg);
        } else if (name == "link") {
            run_link_cmd(cfg);
        } else if (name == "figures") {
            run_step1_cmd(cfg);
            run_emission_cmd(cfg);
            run_node_cmd(cfg);
            run_hom_cmd(cfg);
            run_link_cmd(cfg);
        }
        return kExitOk;
    } catch (const ConfigMissingError& e) {
        emit_error("config_missing", e.what());
        return kExitIo;
    } catch (const ConfigParseError& e) {
        emit_error("config_parse", e.what());
        return kExitValidation;
    } catch (const ConfigValidationError& e) {
        emit_error("config_validation", e.what());
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        emit_error("validation", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        emit_error("io", e.what());
        return kExitIo;
    }
}
