#pragma once

#include "rydnet/link.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rydnet {

struct ConfigMissingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every field carries the default operating point; see README for the
/// config-file grammar (flat `section.key = value` lines).
struct RunConfig {
    struct Blockade {
        long long n_atoms = 1000;
        double omega_mhz = 10.0;       ///< Omega / 2pi in MHz
        double blockade_ratio = 15.8;  ///< V / Omega_eff
        long long samples = 400;       ///< trajectory samples per segment
    } blockade;

    struct Geometry {
        double length_over_lambda = 10.0;
        double radius_over_lambda = 1.0;
        double theta_max_deg = 6.0;
    } geometry;

    struct Node {
        double f_gate = 0.99;
        double eta_dir = 0.35;  ///< operating-point collection efficiency
        double eta_map = 0.55;
        double eta_r = 0.55;
    } node;

    struct Link {
        double eta_node = 0.19;
        double eta_det = 0.8;
        double alpha_db_km = 0.2;
        double distance_km = 20.0;
        double t_cycle_us = 1.0;
        double t2_us = 100.0;
        double t_regen_us = 1.0;
        double visibility = 0.95;
        std::string convention = "full_separation";
        long long trials = 100000;
    } link;

    std::uint64_t seed = 12345;
    std::string output_dir = "out";

    /// Omega in rad/s.
    double omega_rad_s() const;
    /// LinkParams in SI units.
    LinkParams link_params() const;

    /// Throws ConfigValidationError on out-of-range values.
    void validate() const;
};

/// Loads `path` over the built-in defaults, then applies flag overrides
/// (key, textual value) on top. An empty path skips the file entirely.
///
/// Errors are distinguished: ConfigMissingError (file does not exist),
/// ConfigParseError (malformed line, unknown key, unparsable value),
/// ConfigValidationError (well-formed but out-of-range).
RunConfig parse_config(const std::string& path,
                       const std::vector<std::pair<std::string, std::string>>& flag_overrides);

/// All recognized config keys, for diagnostics and docs.
std::vector<std::string> config_keys();

} // namespace rydnet
