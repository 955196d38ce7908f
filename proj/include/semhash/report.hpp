#pragma once

#include <string>

#include "semhash/evaluate.hpp"

namespace semhash {

// Aligned-text tables: one per-classifier table per dataset plus the
// cross-dataset summary rows.
std::string render_report_text(const EvalReport& report);

// Machine-readable report with the full per-run breakdown. Key order is
// fixed, so two reports from the same seed differ only in the timing
// fields and the "generated_at" stamp. include_timing=false omits those
// volatile fields entirely.
std::string report_to_json(const EvalReport& report,
                           bool include_timing = true);

}  // namespace semhash
