#include "agglab/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "agglab/errors.hpp"

namespace agglab {
namespace {

const char* const kKnownChecks[] = {"copy_sum_cf", "shifted_copy_sum_cf", "iterated_cf",
                                    "tail_ratio",  "forward_tail",        "karamata"};

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Accepts plain decimals and scientific notation; rejects trailing junk.
bool parse_double(const std::string& text, double& out) {
    if (text.empty()) return false;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) return false;
    out = v;
    return true;
}

// Unsigned integers may be written in scientific notation (N=1e5); the value
// must be a nonnegative integer representable without rounding.
bool parse_uint(const std::string& text, std::uint64_t& out) {
    double v = 0.0;
    if (!parse_double(text, v)) return false;
    if (!(v >= 0.0) || v != std::floor(v) || v >= 1.8446744073709552e19) return false;
    out = static_cast<std::uint64_t>(v);
    return true;
}

bool parse_int(const std::string& text, int& out) {
    double v = 0.0;
    if (!parse_double(text, v)) return false;
    if (v != std::floor(v) || std::fabs(v) > 2147483647.0) return false;
    out = static_cast<int>(v);
    return true;
}

bool parse_bool(const std::string& text, bool& out) {
    if (text == "true" || text == "1") {
        out = true;
        return true;
    }
    if (text == "false" || text == "0") {
        out = false;
        return true;
    }
    return false;
}

}  // namespace

bool is_known_check(const std::string& name) {
    for (const char* known : kKnownChecks) {
        if (name == known) return true;
    }
    return false;
}

std::vector<std::string> default_checks(const ModelParams& params) {
    std::vector<std::string> names(std::begin(kKnownChecks), std::end(kKnownChecks));
    if (params.alpha == 1.0) {
        // The shifted (strictly stable) regime does not exist at alpha = 1.
        names.erase(std::remove(names.begin(), names.end(), "shifted_copy_sum_cf"),
                    names.end());
    }
    return names;
}

void RunConfig::validate() const {
    std::vector<std::string> problems;
    try {
        params.validate();
    } catch (const std::exception& e) {
        problems.emplace_back(e.what());
    }
    try {
        settings.validate();
    } catch (const std::exception& e) {
        problems.emplace_back(e.what());
    }
    if (checks) {
        for (const auto& name : *checks) {
            if (!is_known_check(name)) problems.push_back("unknown check '" + name + "'");
        }
        if (params.alpha == 1.0 &&
            std::find(checks->begin(), checks->end(), "shifted_copy_sum_cf") !=
                checks->end()) {
            problems.emplace_back("check 'shifted_copy_sum_cf' requires alpha != 1");
        }
    }
    if (sim_copies < 1) problems.emplace_back("sim_copies must be >= 1");
    if (sim_horizon < 0) problems.emplace_back("sim_horizon must be >= 0");
    if (!std::isfinite(karamata_beta) || karamata_beta < 0.0) {
        problems.emplace_back("karamata_beta must be finite and >= 0");
    }
    if (!problems.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw ConfigError(msg);
    }
}

RunConfig parse_run_config(const std::string& text) {
    RunConfig cfg;
    std::vector<std::string> diagnostics;

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const auto bad = [&](const std::string& why) {
            diagnostics.push_back("line " + std::to_string(line_no) + ": " + why);
        };
        std::string line = raw;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            bad("expected key=value, got '" + line + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            bad("empty key");
            continue;
        }

        const auto set_double = [&](double& target) {
            if (!parse_double(value, target)) bad("invalid number for '" + key + "': '" + value + "'");
        };
        const auto set_uint = [&](std::uint64_t& target) {
            if (!parse_uint(value, target)) {
                bad("invalid nonnegative integer for '" + key + "': '" + value + "'");
            }
        };
        const auto set_int = [&](int& target) {
            if (!parse_int(value, target)) bad("invalid integer for '" + key + "': '" + value + "'");
        };

        if (key == "alpha") {
            set_double(cfg.params.alpha);
        } else if (key == "m_xi") {
            set_double(cfg.params.m_xi);
        } else if (key == "seed") {
            set_uint(cfg.seed);
        } else if (key == "out_dir") {
            cfg.out_dir = value;
        } else if (key == "checks") {
            cfg.checks.emplace();  // explicitly set, possibly to the empty list
            std::istringstream items(value);
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (item.empty()) continue;
                if (!is_known_check(item)) {
                    bad("unknown check '" + item + "'");
                    continue;
                }
                cfg.checks->push_back(item);
            }
        } else if (key == "N") {
            set_uint(cfg.settings.cf_copies);
        } else if (key == "n") {
            set_uint(cfg.settings.iter_n);
        } else if (key == "k") {
            set_int(cfg.settings.k);
        } else if (key == "reps") {
            set_uint(cfg.settings.cf_reps);
        } else if (key == "center_pool") {
            set_uint(cfg.settings.center_pool);
        } else if (key == "tail_N") {
            set_uint(cfg.settings.tail_N);
        } else if (key == "iter_reps") {
            set_uint(cfg.settings.iter_reps);
        } else if (key == "iter_N") {
            std::uint64_t v = 0;
            if (parse_uint(value, v)) {
                cfg.settings.iter_N = v;
            } else {
                bad("invalid nonnegative integer for 'iter_N': '" + value + "'");
            }
        } else if (key == "iter_cubic") {
            if (!parse_bool(value, cfg.settings.iter_cubic_schedule)) {
                bad("invalid boolean for 'iter_cubic': '" + value + "'");
            }
        } else if (key == "z_max") {
            set_double(cfg.settings.z_max);
        } else if (key == "bias_allowance") {
            set_double(cfg.settings.bias_allowance);
        } else if (key == "tail_z_max") {
            set_double(cfg.settings.tail_z_max);
        } else if (key == "ks_level") {
            set_double(cfg.settings.ks_level);
        } else if (key == "quantile_level") {
            set_double(cfg.settings.quantile_level);
        } else if (key == "karamata_rel_tol") {
            set_double(cfg.settings.karamata_rel_tol);
        } else if (key == "iter_alpha1_mean_tol") {
            set_double(cfg.settings.iter_alpha1_mean_tol);
        } else if (key == "iter_alpha1_spread_tol") {
            set_double(cfg.settings.iter_alpha1_spread_tol);
        } else if (key == "karamata_beta") {
            set_double(cfg.karamata_beta);
        } else if (key == "sim_copies") {
            set_uint(cfg.sim_copies);
        } else if (key == "sim_horizon") {
            set_int(cfg.sim_horizon);
        } else {
            bad("unknown key '" + key + "'");
        }
    }

    if (!diagnostics.empty()) {
        std::string msg = "configuration errors:";
        for (const auto& d : diagnostics) msg += "\n  " + d;
        throw ConfigError(msg);
    }
    cfg.validate();
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_run_config(buf.str());
}

}  // namespace agglab
