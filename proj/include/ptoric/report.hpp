#pragma once

#include <string>

#include "ptoric/scenario.hpp"

namespace ptoric {

// Stable-field-order JSON document; `with_timings = false` drops the timing
// block (used by the determinism checks).
std::string report_to_json(const CertificationReport& rep, bool with_timings = true);
std::string report_to_text(const CertificationReport& rep);
std::string family_to_json(const FamilyReport& fam, bool with_timings = true);
// One CSV row per family point, fixed column order documented in the README.
std::string family_to_csv(const FamilyReport& fam);
std::string report_to_csv(const CertificationReport& rep);

// Vector figure of the section parameter domain: branch points, deck images
// of the loop, covering-piece boundaries, and the chosen loop.
std::string report_figure_svg(const CertificationReport& rep);

// Atomic write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);

void emit_report(const CertificationReport& rep, const std::string& format,
                 const std::string& path);
void emit_figure(const CertificationReport& rep, const std::string& path);

}  // namespace ptoric
