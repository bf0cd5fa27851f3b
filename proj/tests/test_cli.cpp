// End-to-end tests of the command-line front end, driven as subprocesses
// against the installed binary (path injected at compile time).  Covers the
// table/simulate/verify subcommands, exit codes, output-directory resolution,
// and byte stability of the written artifacts.

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "agglab/pareto_int.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(AGGLAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr) << cmd;
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Same, but with an environment assignment prefixed to the shell command.
RunResult run_with_env(const std::string& env_assignment, const std::string& args) {
    const std::string cmd =
        env_assignment + " " + std::string(AGGLAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    EXPECT_NE(pipe, nullptr) << cmd;
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::path(::testing::TempDir()) / ("agglab_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    ASSERT_TRUE(out) << path;
    out << text;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    EXPECT_TRUE(in) << path;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TEST(CliTable, AlphaOneBranchConstants) {
    const RunResult r = run_cli("table --alpha 1 --m-xi 0.5");
    EXPECT_EQ(r.exit_code, 0) << r.output;
    EXPECT_NE(r.output.find("1.570796"), std::string::npos) << r.output;  // pi/2
    EXPECT_NE(r.output.find("n/a (alpha = 1)"), std::string::npos) << r.output;
}

TEST(CliTable, NoOffspringCollapsesConstants) {
    const RunResult r = run_cli("table --alpha 0.5 --m-xi 0 --k-max 1");
    EXPECT_EQ(r.exit_code, 0) << r.output;
    EXPECT_NE(r.output.find("stationary_tail_constant = 1.000000"), std::string::npos)
        << r.output;
    EXPECT_NE(r.output.find("k=1: sum_tail_ratio = 2.000000"), std::string::npos)
        << r.output;
    EXPECT_NE(r.output.find("k=0: sum_tail_ratio = 1.000000"), std::string::npos)
        << r.output;
}

TEST(CliTable, DefaultParameterRatios) {
    const RunResult r = run_cli("table --alpha 0.5 --m-xi 0.5 --k-max 1");
    EXPECT_EQ(r.exit_code, 0) << r.output;
    EXPECT_NE(r.output.find("k=1: sum_tail_ratio = 1.517638"), std::string::npos)
        << r.output;
    EXPECT_NE(r.output.find("stationary_tail_constant = 3.414214"), std::string::npos)
        << r.output;
}

TEST(CliTable, RejectsOutOfRangeParameters) {
    EXPECT_EQ(run_cli("table --alpha 2.5").exit_code, 2);
    EXPECT_EQ(run_cli("table --m-xi 1").exit_code, 2);
    EXPECT_EQ(run_cli("table --k-max 11").exit_code, 2);  // flag range check
}

TEST(CliSimulate, ShapeAndByteDeterminism) {
    const fs::path dir1 = fresh_dir("sim1");
    const fs::path dir2 = fresh_dir("sim2");
    const fs::path dir3 = fresh_dir("sim3");
    const fs::path cfg = dir1 / "run.cfg";
    write_text(cfg, "sim_copies = 3\nsim_horizon = 2\nseed = 11\n");

    const RunResult r1 =
        run_cli("simulate --config " + cfg.string() + " --out " + dir1.string());
    EXPECT_EQ(r1.exit_code, 0) << r1.output;
    EXPECT_NE(r1.output.find("wrote"), std::string::npos);
    const std::string csv1 = read_file(dir1 / "ensemble.csv");
    std::istringstream lines(csv1);
    std::string line;
    std::vector<std::string> all;
    while (std::getline(lines, line)) all.push_back(line);
    ASSERT_EQ(all.size(), 4u);  // header + 3 copies
    EXPECT_EQ(all[0], "x0,x1,x2");
    for (std::size_t i = 1; i < all.size(); ++i) {
        EXPECT_EQ(std::count(all[i].begin(), all[i].end(), ','), 2) << all[i];
    }

    const RunResult r2 =
        run_cli("simulate --config " + cfg.string() + " --out " + dir2.string());
    EXPECT_EQ(r2.exit_code, 0) << r2.output;
    EXPECT_EQ(csv1, read_file(dir2 / "ensemble.csv"));  // byte-identical rerun

    const RunResult r3 = run_cli("simulate --config " + cfg.string() + " --seed 12 --out " +
                                 dir3.string());
    EXPECT_EQ(r3.exit_code, 0) << r3.output;
    EXPECT_NE(csv1, read_file(dir3 / "ensemble.csv"));
}

TEST(CliSimulate, ColumnTailsMatchImmigrationLaw) {
    // Without offspring every stored column is an independent integer-Pareto
    // sample; spot-check the written CSV's empirical tails at 3 sigma.
    const fs::path dir = fresh_dir("simtails");
    const fs::path cfg = dir / "run.cfg";
    write_text(cfg,
               "alpha = 1.5\nm_xi = 0\nsim_copies = 100000\nsim_horizon = 2\nseed = 5\n");
    const RunResult r =
        run_cli("simulate --config " + cfg.string() + " --out " + dir.string());
    ASSERT_EQ(r.exit_code, 0) << r.output;

    std::ifstream in(dir / "ensemble.csv");
    ASSERT_TRUE(in);
    std::string line;
    ASSERT_TRUE(std::getline(in, line));  // header
    std::vector<std::array<double, 3>> rows;
    rows.reserve(100000);
    while (std::getline(in, line)) {
        std::array<double, 3> row{};
        std::size_t pos = 0;
        for (int c = 0; c < 3; ++c) {
            const std::size_t comma = line.find(',', pos);
            row[static_cast<std::size_t>(c)] =
                std::stod(line.substr(pos, comma - pos));
            pos = (comma == std::string::npos) ? line.size() : comma + 1;
        }
        rows.push_back(row);
    }
    ASSERT_EQ(rows.size(), 100000u);

    const agglab::ParetoIntLaw law{1.5};
    const double n = static_cast<double>(rows.size());
    for (std::size_t c = 0; c < 3; ++c) {
        for (double x : {1.0, 4.0, 9.0}) {
            double count = 0.0;
            for (const auto& row : rows) {
                if (row[c] > x) count += 1.0;
            }
            const double p = agglab::imm_tail(law, x);
            EXPECT_NEAR(count / n, p, 3.0 * std::sqrt(p * (1.0 - p) / n))
                << "column " << c << " threshold " << x;
        }
    }
}

TEST(CliVerify, ExplicitlyEmptyCheckListRunsNothing) {
    const fs::path dir = fresh_dir("verify_empty");
    const fs::path cfg = dir / "run.cfg";
    write_text(cfg, "checks =\n");
    const RunResult r =
        run_cli("verify --config " + cfg.string() + " --out " + dir.string());
    EXPECT_EQ(r.exit_code, 0) << r.output;
    for (const auto& entry : fs::directory_iterator(dir)) {
        EXPECT_EQ(entry.path().extension(), ".cfg") << entry.path();
    }
}

TEST(CliVerify, KaramataOnlyWritesStableReports) {
    const fs::path dir1 = fresh_dir("verify_k1");
    const fs::path dir2 = fresh_dir("verify_k2");
    const fs::path cfg = dir1 / "run.cfg";
    write_text(cfg, "checks = karamata\nseed = 100\n");

    const RunResult r1 =
        run_cli("verify --config " + cfg.string() + " --out " + dir1.string());
    EXPECT_EQ(r1.exit_code, 0) << r1.output;
    EXPECT_NE(r1.output.find("karamata: PASS"), std::string::npos) << r1.output;
    ASSERT_TRUE(fs::exists(dir1 / "karamata.json"));
    ASSERT_TRUE(fs::exists(dir1 / "karamata.meta.json"));

    const RunResult r2 =
        run_cli("verify --config " + cfg.string() + " --out " + dir2.string());
    EXPECT_EQ(r2.exit_code, 0) << r2.output;
    EXPECT_EQ(read_file(dir1 / "karamata.json"), read_file(dir2 / "karamata.json"));
    // volatile data stays out of the stable artifact
    EXPECT_EQ(read_file(dir1 / "karamata.json").find("generated_at"), std::string::npos);
}

TEST(CliVerify, FormatSelectsExtraArtifact) {
    const fs::path dir_csv = fresh_dir("verify_csv");
    const fs::path dir_txt = fresh_dir("verify_txt");
    const fs::path dir_json = fresh_dir("verify_json");
    const fs::path cfg = dir_csv / "run.cfg";
    write_text(cfg, "checks = karamata\n");

    EXPECT_EQ(run_cli("verify --config " + cfg.string() + " --out " + dir_csv.string() +
                      " --format csv")
                  .exit_code,
              0);
    EXPECT_TRUE(fs::exists(dir_csv / "karamata.points.csv"));
    const std::string csv = read_file(dir_csv / "karamata.points.csv");
    EXPECT_EQ(csv.rfind("ecf_re,ecf_im,cf_re,cf_im,z\n", 0), 0u) << csv;

    EXPECT_EQ(run_cli("verify --config " + cfg.string() + " --out " + dir_txt.string() +
                      " --format text")
                  .exit_code,
              0);
    EXPECT_TRUE(fs::exists(dir_txt / "karamata.txt"));
    EXPECT_NE(read_file(dir_txt / "karamata.txt").find("result: PASS"),
              std::string::npos);

    EXPECT_EQ(run_cli("verify --config " + cfg.string() + " --out " + dir_json.string() +
                      " --format json")
                  .exit_code,
              0);
    EXPECT_FALSE(fs::exists(dir_json / "karamata.points.csv"));
    EXPECT_FALSE(fs::exists(dir_json / "karamata.txt"));
    EXPECT_TRUE(fs::exists(dir_json / "karamata.json"));
}

TEST(CliVerify, FailingCheckExitsOne) {
    const fs::path dir = fresh_dir("verify_fail");
    const fs::path cfg = dir / "run.cfg";
    // the exact-law ratio at x = 1e4 sits ~1e-4 away from the limit, so an
    // absurdly tight gate must fail honestly
    write_text(cfg, "checks = karamata\nkaramata_rel_tol = 1e-6\n");
    const RunResult r =
        run_cli("verify --config " + cfg.string() + " --out " + dir.string());
    EXPECT_EQ(r.exit_code, 1) << r.output;
    EXPECT_NE(r.output.find("karamata: FAIL"), std::string::npos) << r.output;
    EXPECT_TRUE(fs::exists(dir / "karamata.json"));  // report still written
}

TEST(CliVerify, CheckErrorIsReportedAndFailsTheSuite) {
    const fs::path dir = fresh_dir("verify_error");
    const fs::path cfg = dir / "run.cfg";
    // 1e5 rows at the 99.9% quantile leave ~100 exceedances: below the floor
    write_text(cfg, "checks = tail_ratio\ntail_N = 100000\nquantile_level = 0.999\n");
    const RunResult r =
        run_cli("verify --config " + cfg.string() + " --out " + dir.string());
    EXPECT_EQ(r.exit_code, 1) << r.output;
    EXPECT_NE(r.output.find("tail_ratio: ERROR"), std::string::npos) << r.output;
}

TEST(CliVerify, MalformedConfigExitsTwoWithLineDiagnostics) {
    const fs::path dir = fresh_dir("verify_badcfg");
    const fs::path cfg = dir / "run.cfg";
    write_text(cfg, "alpha = 0.5\nseed = banana\nmystery = 1\n");
    const RunResult r =
        run_cli("verify --config " + cfg.string() + " --out " + dir.string());
    EXPECT_EQ(r.exit_code, 2) << r.output;
    EXPECT_NE(r.output.find("line 2"), std::string::npos) << r.output;
    EXPECT_NE(r.output.find("line 3"), std::string::npos) << r.output;
}

TEST(CliVerify, EnvironmentVariableSuppliesOutDir) {
    const fs::path dir = fresh_dir("verify_env");
    const fs::path cfg = dir / "run.cfg";
    write_text(cfg, "checks = karamata\n");
    const fs::path out = dir / "from_env";
    const RunResult r = run_with_env("AGGLAB_OUT_DIR=" + out.string(),
                                     "verify --config " + cfg.string());
    EXPECT_EQ(r.exit_code, 0) << r.output;
    EXPECT_TRUE(fs::exists(out / "karamata.json"));
}

TEST(CliUsage, BadInvocationsExitTwo) {
    EXPECT_EQ(run_cli("").exit_code, 2);                       // missing subcommand
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);             // unknown subcommand
    EXPECT_EQ(run_cli("table --no-such-flag").exit_code, 2);   // unknown flag
    EXPECT_EQ(run_cli("verify --format yaml").exit_code, 2);   // bad enum value
    EXPECT_EQ(run_cli("verify --config /nonexistent.cfg").exit_code, 2);
    EXPECT_EQ(run_cli("--help").exit_code, 0);
}

TEST(CliUsage, OutputPathCollisionExitsThree) {
    const fs::path dir = fresh_dir("collide");
    const fs::path blocker = dir / "blocked";
    write_text(blocker, "i am a file\n");
    const fs::path cfg = dir / "run.cfg";
    write_text(cfg, "checks = karamata\n");
    const RunResult r =
        run_cli("verify --config " + cfg.string() + " --out " + blocker.string());
    EXPECT_EQ(r.exit_code, 3) << r.output;
    EXPECT_NE(r.output.find("I/O error"), std::string::npos) << r.output;
}

}  // namespace
