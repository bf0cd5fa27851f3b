// Batch front end: analytic constant tables, ensemble simulation, and the
// Monte Carlo verification suite.
//
// Exit codes: 0 success / all checks pass, 1 at least one check failed,
// 2 usage or configuration error, 3 I/O error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "agglab/analytic.hpp"
#include "agglab/basis.hpp"
#include "agglab/checks.hpp"
#include "agglab/config.hpp"
#include "agglab/errors.hpp"
#include "agglab/report.hpp"
#include "agglab/sim.hpp"
#include "agglab/special.hpp"

namespace fs = std::filesystem;
using namespace agglab;

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoFailure("write failed: " + path.string());
}

// Precedence: --out flag, then config out_dir, then AGGLAB_OUT_DIR, then cwd.
fs::path resolve_out_dir(const std::string& flag_out, const std::string& cfg_out) {
    std::string dir = !flag_out.empty() ? flag_out : cfg_out;
    if (dir.empty()) {
        if (const char* env = std::getenv("AGGLAB_OUT_DIR")) dir = env;
    }
    if (dir.empty()) dir = ".";
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoFailure("cannot create output directory '" + dir + "': " + ec.message());
    return fs::path(dir);
}

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

int cmd_table(const ModelParams& params, int k_max) {
    params.validate();
    std::cout << "parameters: alpha=" << fixed6(params.alpha)
              << " m_xi=" << fixed6(params.m_xi) << "\n";
    std::cout << "C_alpha                  = " << fixed6(c_alpha(params.alpha)) << "\n";
    std::cout << "constant_C               = " << fixed6(kCompensatedSineConstant) << "\n";
    if (params.alpha == 1.0) {
        std::cout << "b_alpha                  = n/a (alpha = 1)\n";
    } else {
        std::cout << "b_alpha                  = " << fixed6(b_alpha(params)) << "\n";
    }
    std::cout << "stationary_tail_constant = " << fixed6(stationary_tail_constant(params))
              << "\n\n";
    for (int k = 0; k <= k_max; ++k) {
        std::cout << "k=" << k << ": sum_tail_ratio = " << fixed6(sum_tail_ratio(k, params))
                  << "  levy_mass_above(r=1) = " << fixed6(levy_mass_above(k, params, 1.0))
                  << "\n";
    }
    std::cout << "\nbasis vectors at k=" << k_max << ":\n";
    const StableBasis basis = basis_vectors(k_max, params);
    for (int j = 0; j <= k_max; ++j) {
        std::cout << "  v_" << j << " = (";
        for (int ell = 0; ell <= k_max; ++ell) {
            std::cout << (ell ? ", " : "") << fixed6(basis.vectors[j][ell]);
        }
        std::cout << ")\n";
    }
    return 0;
}

int cmd_simulate(const RunConfig& cfg, const fs::path& out_dir, int jobs) {
    SimConfig sim;
    sim.n_copies = cfg.sim_copies;
    sim.horizon = cfg.sim_horizon;
    sim.seed = cfg.seed;
    const PathEnsemble ensemble = simulate_ensemble(cfg.params, sim, jobs);
    const fs::path path = out_dir / "ensemble.csv";
    write_file(path, ensemble_csv(ensemble));
    std::cout << "wrote " << path.string() << "\n";
    return 0;
}

VerificationReport run_named_check(const std::string& name, const RunConfig& cfg) {
    if (name == "copy_sum_cf") return check_copy_sum_cf(cfg.params, cfg.seed, cfg.settings);
    if (name == "shifted_copy_sum_cf") {
        return check_shifted_copy_sum_cf(cfg.params, cfg.seed, cfg.settings);
    }
    if (name == "iterated_cf") return check_iterated_cf(cfg.params, cfg.seed, cfg.settings);
    if (name == "tail_ratio") return check_tail_ratio(cfg.params, cfg.seed, cfg.settings);
    if (name == "forward_tail") return check_forward_tail(cfg.params, cfg.seed, cfg.settings);
    if (name == "karamata") {
        return check_karamata(cfg.params, cfg.karamata_beta, cfg.settings);
    }
    throw std::invalid_argument("unknown check: " + name);
}

int cmd_verify(const RunConfig& cfg, const fs::path& out_dir, const std::string& format) {
    const std::vector<std::string> names =
        cfg.checks ? *cfg.checks : default_checks(cfg.params);
    bool all_pass = true;
    for (const auto& name : names) {
        VerificationReport report;
        try {
            report = run_named_check(name, cfg);
        } catch (const std::exception& e) {
            // A failing check must not abort the rest of the suite.
            std::cout << name << ": ERROR  " << e.what() << "\n";
            all_pass = false;
            continue;
        }
        write_file(out_dir / (name + ".json"), report_json_string(report));
        write_file(out_dir / (name + ".meta.json"), report_meta_json_string(report));
        if (format == "csv") {
            write_file(out_dir / (name + ".points.csv"), report_points_csv(report));
        } else if (format == "text") {
            write_file(out_dir / (name + ".txt"), report_text_table(report));
        }
        char detail[96];
        std::snprintf(detail, sizeof(detail), "max_abs_diff=%.3g  wall=%.1fs",
                      report.max_abs_diff, report.wall_seconds);
        std::cout << name << ": " << (report.pass ? "PASS" : "FAIL") << "  " << detail
                  << "\n";
        if (!report.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Aggregation laboratory for subcritical branching processes with "
                 "heavy-tailed immigration"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_flag;
    std::string format = "json";
    std::uint64_t seed_flag = 0;
    int jobs = 1;
    double alpha_flag = 0.5;
    double m_xi_flag = 0.5;
    int k_max = 3;

    auto* table = app.add_subcommand("table", "Print the analytic constants and rays");
    auto* table_cfg = table->add_option("--config", config_path, "Config file (key=value)");
    auto* table_alpha = table->add_option("--alpha", alpha_flag, "Tail index in (0,2)");
    auto* table_m = table->add_option("--m-xi", m_xi_flag, "Offspring mean in [0,1)");
    table->add_option("--k-max", k_max, "Largest window horizon")->check(CLI::Range(0, 8));

    auto* simulate = app.add_subcommand("simulate", "Write a stationary path ensemble CSV");
    auto* sim_cfg = simulate->add_option("--config", config_path, "Config file (key=value)");
    auto* sim_seed = simulate->add_option("--seed", seed_flag, "Root seed override");
    simulate->add_option("--out", out_flag, "Output directory");
    simulate->add_option("--jobs", jobs, "Worker threads (never affects results)")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run verification checks and write reports");
    auto* ver_cfg = verify->add_option("--config", config_path, "Config file (key=value)");
    auto* ver_seed = verify->add_option("--seed", seed_flag, "Root seed override");
    verify->add_option("--out", out_flag, "Output directory");
    verify->add_option("--jobs", jobs, "Worker threads (never affects results)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "Extra per-check artifact format")
        ->check(CLI::IsMember({"csv", "json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) {
            ModelParams params{m_xi_flag, alpha_flag};
            if (table_cfg->count() > 0) {
                const RunConfig cfg = load_run_config(config_path);
                params = cfg.params;
                if (table_alpha->count() > 0) params.alpha = alpha_flag;
                if (table_m->count() > 0) params.m_xi = m_xi_flag;
            }
            return cmd_table(params, k_max);
        }
        if (simulate->parsed()) {
            RunConfig cfg;
            if (sim_cfg->count() > 0) cfg = load_run_config(config_path);
            if (sim_seed->count() > 0) cfg.seed = seed_flag;
            const fs::path out_dir = resolve_out_dir(out_flag, cfg.out_dir);
            return cmd_simulate(cfg, out_dir, jobs);
        }
        if (verify->parsed()) {
            RunConfig cfg;
            if (ver_cfg->count() > 0) cfg = load_run_config(config_path);
            if (ver_seed->count() > 0) cfg.seed = seed_flag;
            cfg.settings.jobs = jobs;
            const fs::path out_dir = resolve_out_dir(out_flag, cfg.out_dir);
            return cmd_verify(cfg, out_dir, format);
        }
    } catch (const IoFailure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable with require_subcommand(1)
}
