#pragma once

// Serialization of verification reports and simulation output.
//
// The machine-readable artifacts are byte-stable: two runs with identical
// inputs produce identical files.  Anything volatile (wall time, timestamps)
// is confined to the sidecar metadata document.

#include <string>

#include "agglab/checks.hpp"
#include "agglab/sim.hpp"

namespace agglab {

// Stable-key-order JSON document of a report; excludes wall time.
std::string report_json_string(const VerificationReport& report);

// Sidecar metadata (wall seconds, generation timestamp); the only place
// volatile data is allowed.
std::string report_meta_json_string(const VerificationReport& report);

// Aligned plain-text table for humans.
std::string report_text_table(const VerificationReport& report);

// Point grid as CSV: theta components, then ecf_re, ecf_im, cf_re, cf_im, z.
// Points without a theta leave those columns empty.
std::string report_points_csv(const VerificationReport& report);

// Ensemble as CSV with header x0..xk, one copy per row, '.' decimal point.
std::string ensemble_csv(const PathEnsemble& ensemble);

}  // namespace agglab
