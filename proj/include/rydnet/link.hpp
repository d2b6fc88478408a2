#pragma once

#include <cstdint>
#include <vector>

namespace rydnet {

enum class PropagationConvention {
    full_separation,  ///< each photon attenuated over the full node separation
    midpoint,         ///< detectors at the midpoint: each photon travels d/2
};

struct LinkParams {
    double eta_node = 0.19;
    double eta_det = 0.8;
    double alpha_db_per_km = 0.2;
    double distance_km = 20.0;
    double t_cycle_s = 1e-6;
    double t2_memory_s = 100e-6;
    double t_regen_s = 1e-6;
    PropagationConvention convention = PropagationConvention::full_separation;

    void validate() const;
};

/// Fiber transmission 10^(-alpha d / 10); under midpoint each photon sees d/2.
double propagation_efficiency(double distance_km, double alpha_db_per_km,
                              PropagationConvention convention);

/// Per-attempt heralding success P_E = (1/4) eta_node^2 eta_prop^2 eta_det^2.
double success_probability(const LinkParams& params);

/// (M, 1 - (1-p)^M) for M = 1..max_attempts.
std::vector<std::pair<int, double>> cumulative_success(double p_e, int max_attempts);

/// success_probability / t_cycle, in Hz.
double entanglement_rate(const LinkParams& params);

/// floor(T2 / T_regen): retry budget within the memory coherence time.
int attempts_within_memory(const LinkParams& params);

struct LinkStats {
    double p_e = 0.0;                    ///< analytic per-attempt success
    double rate_hz = 0.0;
    int max_attempts = 0;                ///< memory-limited retry budget
    std::vector<std::pair<int, double>> cumulative;

    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double mc_empirical_p_e = 0.0;       ///< successes / attempts drawn
    double mc_empirical_p_e_se = 0.0;
    double mc_success_frequency = 0.0;   ///< trials succeeding within the budget
    double mc_success_frequency_se = 0.0;
    double mc_mean_attempts = 0.0;       ///< attempts consumed per trial
};

/// Seeded Monte Carlo of the retry protocol: independent Bernoulli(P_E)
/// attempts per trial up to the memory budget. Each trial's stream derives
/// from (seed, trial index) and tallies are integer reductions, so the result
/// is bit-identical for any thread count. OpenMP-parallel across trials.
LinkStats simulate_link(const LinkParams& params, std::uint64_t trials, std::uint64_t seed);

/// Serial reference for simulate_link; bit-identical output.
LinkStats simulate_link_serial(const LinkParams& params, std::uint64_t trials,
                               std::uint64_t seed);

} // namespace rydnet
