#include "agglab/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace agglab {
namespace {

using ordered_json = nlohmann::ordered_json;

// Full-precision decimal rendering used in the CSV outputs: round-trips every
// double and is locale-independent ('.' decimal point).
std::string csv_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ordered_json point_json(const CheckPoint& p) {
    ordered_json j;
    j["label"] = p.label;
    j["theta"] = p.theta;
    j["observed"] = {p.observed_re, p.observed_im};
    j["expected"] = {p.expected_re, p.expected_im};
    j["stderr"] = p.stderr_;
    j["z"] = p.z;
    j["pass"] = p.pass;
    return j;
}

}  // namespace

std::string report_json_string(const VerificationReport& report) {
    ordered_json j;
    j["check"] = report.check;
    j["params"]["alpha"] = report.params.alpha;
    j["params"]["m_xi"] = report.params.m_xi;
    j["seed"] = report.seed;
    ordered_json sizes = ordered_json::object();
    for (const auto& [key, value] : report.sizes) sizes[key] = value;  // map is sorted
    j["sizes"] = std::move(sizes);
    j["tolerance_policy"] = report.tolerance_policy;
    j["pass"] = report.pass;
    j["max_abs_diff"] = report.max_abs_diff;
    ordered_json points = ordered_json::array();
    for (const auto& p : report.points) points.push_back(point_json(p));
    j["points"] = std::move(points);
    j["warnings"] = report.warnings;
    return j.dump(2) + "\n";
}

std::string report_meta_json_string(const VerificationReport& report) {
    ordered_json j;
    j["check"] = report.check;
    j["wall_seconds"] = report.wall_seconds;
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    j["generated_at"] = stamp;
    return j.dump(2) + "\n";
}

std::string report_text_table(const VerificationReport& report) {
    std::ostringstream out;
    out << "check: " << report.check << "  (alpha=" << csv_number(report.params.alpha)
        << ", m_xi=" << csv_number(report.params.m_xi) << ", seed=" << report.seed << ")\n";
    out << "sizes:";
    for (const auto& [key, value] : report.sizes) out << " " << key << "=" << value;
    out << "\n";
    out << "policy: " << report.tolerance_policy << "\n";

    // Aligned point table.
    const char* headers[] = {"point", "observed", "expected", "stderr", "z", "pass"};
    std::vector<std::array<std::string, 6>> rows;
    for (const auto& p : report.points) {
        char obs[64], exp[64];
        std::snprintf(obs, sizeof(obs), "%.6g%+.6gi", p.observed_re, p.observed_im);
        std::snprintf(exp, sizeof(exp), "%.6g%+.6gi", p.expected_re, p.expected_im);
        char se[32], z[32];
        std::snprintf(se, sizeof(se), "%.3g", p.stderr_);
        std::snprintf(z, sizeof(z), "%.3g", p.z);
        rows.push_back({p.label, obs, exp, se, z, p.pass ? "pass" : "FAIL"});
    }
    std::array<std::size_t, 6> width{};
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::string(headers[c]).size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
    }
    const auto emit_row = [&](const std::array<std::string, 6>& row) {
        for (std::size_t c = 0; c < 6; ++c) {
            out << row[c] << std::string(width[c] - row[c].size(), ' ')
                << (c + 1 < 6 ? "  " : "");
        }
        out << "\n";
    };
    emit_row({headers[0], headers[1], headers[2], headers[3], headers[4], headers[5]});
    for (const auto& row : rows) emit_row(row);

    char diff[32];
    std::snprintf(diff, sizeof(diff), "%.6g", report.max_abs_diff);
    out << "max_abs_diff: " << diff << "\n";
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
    out << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string report_points_csv(const VerificationReport& report) {
    std::size_t dim = 0;
    for (const auto& p : report.points) dim = std::max(dim, p.theta.size());
    std::ostringstream out;
    for (std::size_t c = 0; c < dim; ++c) out << "theta_" << c << ",";
    out << "ecf_re,ecf_im,cf_re,cf_im,z\n";
    for (const auto& p : report.points) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (c < p.theta.size()) out << csv_number(p.theta[c]);
            out << ",";
        }
        out << csv_number(p.observed_re) << "," << csv_number(p.observed_im) << ","
            << csv_number(p.expected_re) << "," << csv_number(p.expected_im) << ","
            << csv_number(p.z) << "\n";
    }
    return out.str();
}

std::string ensemble_csv(const PathEnsemble& ensemble) {
    std::ostringstream out;
    const std::size_t cols = static_cast<std::size_t>(ensemble.horizon) + 1;
    for (std::size_t c = 0; c < cols; ++c) out << (c ? "," : "") << "x" << c;
    out << "\n";
    char buf[48];
    for (std::uint64_t r = 0; r < ensemble.n_copies; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            // States are integer-valued; conditional tail samples are scaled
            // and fractional, so fall back to full precision for those.
            const double v = ensemble.at(r, static_cast<int>(c));
            if (v == std::floor(v) && std::fabs(v) < 1e18) {
                std::snprintf(buf, sizeof(buf), "%.0f", v);
            } else {
                std::snprintf(buf, sizeof(buf), "%.17g", v);
            }
            out << (c ? "," : "") << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace agglab
