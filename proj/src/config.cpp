#include "rydnet/config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

namespace rydnet {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigParseError("config: key '" + key + "' expects a number, got '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigParseError("config: key '" + key + "' expects an integer, got '" + value +
                               "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigParseError("config: key '" + key + "' expects an unsigned integer, got '" +
                               value + "'");
    }
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& key_table() {
    static const std::map<std::string, Setter> table = {
        {"blockade.N",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.blockade.n_atoms = parse_int(k, v);
         }},
        {"blockade.omega_mhz",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.blockade.omega_mhz = parse_double(k, v);
         }},
        {"blockade.ratio",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.blockade.blockade_ratio = parse_double(k, v);
         }},
        {"blockade.samples",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.blockade.samples = parse_int(k, v);
         }},
        {"geometry.L_over_lambda",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.geometry.length_over_lambda = parse_double(k, v);
         }},
        {"geometry.R_over_lambda",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.geometry.radius_over_lambda = parse_double(k, v);
         }},
        {"geometry.theta_max_deg",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.geometry.theta_max_deg = parse_double(k, v);
         }},
        {"node.f_gate",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.node.f_gate = parse_double(k, v);
         }},
        {"node.eta_dir",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.node.eta_dir = parse_double(k, v);
         }},
        {"node.eta_map",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.node.eta_map = parse_double(k, v);
         }},
        {"node.eta_r",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.node.eta_r = parse_double(k, v);
         }},
        {"link.eta_node",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.link.eta_node = parse_double(k, v);
         }},
        {"link.eta_det",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.link.eta_det = parse_double(k, v);
         }},
        {"link.alpha_db_km",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.link.alpha_db_km = parse_double(k, v);
         }},
        {"link.distance_km",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.link.distance_km = parse_double(k, v);
         }},
        {"link.t_cycle_us",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.link.t_cycle_us = parse_double(k, v);
         }},
        {"link.t2_us",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.link.t2_us = parse_double(k, v);
         }},
        {"link.t_regen_us",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.link.t_regen_us = parse_double(k, v);
         }},
        {"link.visibility",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.link.visibility = parse_double(k, v);
         }},
        {"link.convention",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (v != "full_separation" && v != "midpoint") {
                 throw ConfigParseError("config: key '" + k +
                                        "' expects full_separation or midpoint, got '" + v + "'");
             }
             c.link.convention = v;
         }},
        {"link.trials",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.link.trials = parse_int(k, v);
         }},
        {"seed",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.seed = parse_u64(k, v);
         }},
        {"output_dir",
         [](RunConfig& c, const std::string&, const std::string& v) { c.output_dir = v; }},
    };
    return table;
}

void apply(RunConfig& config, const std::string& key, const std::string& value) {
    const auto& table = key_table();
    const auto it = table.find(key);
    if (it == table.end()) {
        throw ConfigParseError("config: unknown key '" + key + "'");
    }
    it->second(config, key, value);
}

} // namespace

double RunConfig::omega_rad_s() const {
    return 2.0 * std::numbers::pi * blockade.omega_mhz * 1e6;
}

LinkParams RunConfig::link_params() const {
    LinkParams p;
    p.eta_node = link.eta_node;
    p.eta_det = link.eta_det;
    p.alpha_db_per_km = link.alpha_db_km;
    p.distance_km = link.distance_km;
    p.t_cycle_s = link.t_cycle_us * 1e-6;
    p.t2_memory_s = link.t2_us * 1e-6;
    p.t_regen_s = link.t_regen_us * 1e-6;
    p.convention = (link.convention == "midpoint") ? PropagationConvention::midpoint
                                                   : PropagationConvention::full_separation;
    return p;
}

void RunConfig::validate() const {
    const auto fail = [](const std::string& msg) { throw ConfigValidationError("config: " + msg); };
    const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };

    if (blockade.n_atoms < 1) fail("blockade.N must be >= 1");
    if (!(blockade.omega_mhz > 0.0)) fail("blockade.omega_mhz must be > 0");
    if (!(blockade.blockade_ratio >= 0.0)) fail("blockade.ratio must be >= 0");
    if (blockade.samples < 2) fail("blockade.samples must be >= 2");
    if (!(geometry.length_over_lambda > 0.0)) fail("geometry.L_over_lambda must be > 0");
    if (!(geometry.radius_over_lambda > 0.0)) fail("geometry.R_over_lambda must be > 0");
    if (!(geometry.theta_max_deg > 0.0) || geometry.theta_max_deg > 90.0) {
        fail("geometry.theta_max_deg must be in (0, 90]");
    }
    if (!in_unit(node.f_gate)) fail("node.f_gate must be in [0, 1]");
    if (!in_unit(node.eta_dir)) fail("node.eta_dir must be in [0, 1]");
    if (!in_unit(node.eta_map)) fail("node.eta_map must be in [0, 1]");
    if (!in_unit(node.eta_r)) fail("node.eta_r must be in [0, 1]");
    if (!in_unit(link.eta_node)) fail("link.eta_node must be in [0, 1]");
    if (!in_unit(link.eta_det)) fail("link.eta_det must be in [0, 1]");
    if (!(link.alpha_db_km >= 0.0)) fail("link.alpha_db_km must be >= 0");
    if (!(link.distance_km >= 0.0)) fail("link.distance_km must be >= 0");
    if (!(link.t_cycle_us > 0.0)) fail("link.t_cycle_us must be > 0");
    if (!(link.t2_us > 0.0)) fail("link.t2_us must be > 0");
    if (!(link.t_regen_us > 0.0)) fail("link.t_regen_us must be > 0");
    if (!in_unit(link.visibility)) fail("link.visibility must be in [0, 1]");
    if (link.trials < 1) fail("link.trials must be >= 1");
    if (output_dir.empty()) fail("output_dir must not be empty");
}

RunConfig parse_config(const std::string& path,
                       const std::vector<std::pair<std::string, std::string>>& flag_overrides) {
    RunConfig config;

    if (!path.empty()) {
        if (!std::filesystem::exists(path)) {
            throw ConfigMissingError("config: file not found: " + path);
        }
        std::ifstream in(path);
        if (!in) {
            throw ConfigMissingError("config: cannot open file: " + path);
        }
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            const std::string stripped = trim(line);
            if (stripped.empty()) continue;
            const auto eq = stripped.find('=');
            if (eq == std::string::npos) {
                throw ConfigParseError("config: " + path + ":" + std::to_string(lineno) +
                                       ": expected 'key = value'");
            }
            apply(config, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
        }
    }

    for (const auto& [key, value] : flag_overrides) {
        apply(config, key, value);
    }

    config.validate();
    return config;
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    for (const auto& [key, _] : key_table()) {
        keys.push_back(key);
    }
    return keys;
}

} // namespace rydnet
