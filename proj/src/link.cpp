#include "rydnet/link.hpp"

#include "rydnet/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace rydnet {

void LinkParams::validate() const {
    const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(eta_node)) throw std::invalid_argument("LinkParams: eta_node must be in [0, 1]");
    if (!in_unit(eta_det)) throw std::invalid_argument("LinkParams: eta_det must be in [0, 1]");
    if (!(alpha_db_per_km >= 0.0)) {
        throw std::invalid_argument("LinkParams: alpha must be >= 0");
    }
    if (!(distance_km >= 0.0)) throw std::invalid_argument("LinkParams: distance must be >= 0");
    if (!(t_cycle_s > 0.0)) throw std::invalid_argument("LinkParams: t_cycle must be > 0");
    if (!(t2_memory_s > 0.0)) throw std::invalid_argument("LinkParams: t2_memory must be > 0");
    if (!(t_regen_s > 0.0)) throw std::invalid_argument("LinkParams: t_regen must be > 0");
}

double propagation_efficiency(double distance_km, double alpha_db_per_km,
                              PropagationConvention convention) {
    if (!(distance_km >= 0.0) || !(alpha_db_per_km >= 0.0)) {
        throw std::invalid_argument("propagation_efficiency: inputs must be >= 0");
    }
    const double d = (convention == PropagationConvention::midpoint) ? 0.5 * distance_km
                                                                     : distance_km;
    return std::pow(10.0, -alpha_db_per_km * d / 10.0);
}

double success_probability(const LinkParams& params) {
    params.validate();
    const double eta_prop =
        propagation_efficiency(params.distance_km, params.alpha_db_per_km, params.convention);
    const double amp = params.eta_node * eta_prop * params.eta_det;
    return 0.25 * amp * amp;
}

std::vector<std::pair<int, double>> cumulative_success(double p_e, int max_attempts) {
    if (!(p_e >= 0.0 && p_e <= 1.0)) {
        throw std::invalid_argument("cumulative_success: p_e must be in [0, 1]");
    }
    if (max_attempts < 1) {
        throw std::invalid_argument("cumulative_success: max_attempts must be >= 1");
    }
    std::vector<std::pair<int, double>> out;
    out.reserve(max_attempts);
    for (int m = 1; m <= max_attempts; ++m) {
        out.emplace_back(m, 1.0 - std::pow(1.0 - p_e, m));
    }
    return out;
}

double entanglement_rate(const LinkParams& params) {
    return success_probability(params) / params.t_cycle_s;
}

int attempts_within_memory(const LinkParams& params) {
    params.validate();
    return static_cast<int>(std::floor(params.t2_memory_s / params.t_regen_s));
}

namespace {

// One trial: attempts until success or the retry budget runs out. Returns the
// number of attempts consumed and whether the trial succeeded.
struct TrialResult {
    std::uint32_t attempts;
    bool success;
};

TrialResult run_trial(double p_e, int max_attempts, std::uint64_t trial_seed) {
    SplitMix64 rng(trial_seed);
    for (int k = 1; k <= max_attempts; ++k) {
        if (rng.next_double() < p_e) {
            return {static_cast<std::uint32_t>(k), true};
        }
    }
    return {static_cast<std::uint32_t>(max_attempts), false};
}

LinkStats finalize_stats(const LinkParams& params, std::uint64_t trials, std::uint64_t seed,
                         std::uint64_t successes, std::uint64_t attempts_total) {
    LinkStats stats;
    stats.p_e = success_probability(params);
    stats.rate_hz = entanglement_rate(params);
    stats.max_attempts = attempts_within_memory(params);
    if (stats.max_attempts >= 1) {
        stats.cumulative = cumulative_success(stats.p_e, stats.max_attempts);
    }
    stats.trials = trials;
    stats.seed = seed;

    const double n_trials = static_cast<double>(trials);
    stats.mc_success_frequency = static_cast<double>(successes) / n_trials;
    stats.mc_success_frequency_se =
        std::sqrt(std::max(0.0, stats.mc_success_frequency * (1.0 - stats.mc_success_frequency) /
                                    n_trials));
    stats.mc_mean_attempts = static_cast<double>(attempts_total) / n_trials;
    if (attempts_total > 0) {
        const double n_att = static_cast<double>(attempts_total);
        stats.mc_empirical_p_e = static_cast<double>(successes) / n_att;
        stats.mc_empirical_p_e_se =
            std::sqrt(std::max(0.0, stats.mc_empirical_p_e * (1.0 - stats.mc_empirical_p_e) /
                                        n_att));
    }
    return stats;
}

} // namespace

LinkStats simulate_link(const LinkParams& params, std::uint64_t trials, std::uint64_t seed) {
    params.validate();
    if (trials < 1) throw std::invalid_argument("simulate_link: trials must be >= 1");
    const double p_e = success_probability(params);
    const int budget = attempts_within_memory(params);

    std::uint64_t successes = 0;
    std::uint64_t attempts_total = 0;
    const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) reduction(+ : successes, attempts_total)
    for (std::int64_t t = 0; t < n; ++t) {
        if (budget < 1) continue;
        const TrialResult r =
            run_trial(p_e, budget, substream_seed(seed, static_cast<std::uint64_t>(t)));
        successes += r.success ? 1u : 0u;
        attempts_total += r.attempts;
    }
    return finalize_stats(params, trials, seed, successes, attempts_total);
}

LinkStats simulate_link_serial(const LinkParams& params, std::uint64_t trials,
                               std::uint64_t seed) {
    params.validate();
    if (trials < 1) throw std::invalid_argument("simulate_link_serial: trials must be >= 1");
    const double p_e = success_probability(params);
    const int budget = attempts_within_memory(params);

    std::uint64_t successes = 0;
    std::uint64_t attempts_total = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (budget < 1) continue;
        const TrialResult r = run_trial(p_e, budget, substream_seed(seed, t));
        successes += r.success ? 1u : 0u;
        attempts_total += r.attempts;
    }
    return finalize_stats(params, trials, seed, successes, attempts_total);
}

} // namespace rydnet
