#pragma once

// Run configuration for the batch front end: line-oriented key=value text
// with '#' comments.  Parsing is total — every malformed line produces a
// line-numbered diagnostic and the parser reads on, so one pass reports all
// problems.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agglab/checks.hpp"
#include "agglab/params.hpp"

namespace agglab {

struct RunConfig {
    ModelParams params{.m_xi = 0.5, .alpha = 0.5};
    std::uint64_t seed = 12345;
    CheckSettings settings;
    // Verification checks to run, in order.  Unset means the default suite;
    // an explicitly empty list means run nothing.
    std::optional<std::vector<std::string>> checks;
    std::string out_dir;
    // Karamata comparison exponent (its check is exact-law, not simulated).
    double karamata_beta = 2.0;
    // Simulation subcommand shape.
    std::uint64_t sim_copies = 1000;
    int sim_horizon = 5;

    // Throws ConfigError listing every violated constraint.
    void validate() const;
};

// True iff `name` is a known verification check.
bool is_known_check(const std::string& name);

// The default suite at these params: every check whose regime applies.
std::vector<std::string> default_checks(const ModelParams& params);

// Parses config text; throws ConfigError carrying all line-numbered
// diagnostics when anything is malformed, unknown, or invalid.
RunConfig parse_run_config(const std::string& text);

// Convenience: reads the file and parses it.  I/O failures throw
// std::runtime_error; parse failures throw ConfigError.
RunConfig load_run_config(const std::string& path);

}  // namespace agglab
