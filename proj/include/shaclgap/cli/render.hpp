#pragma once

#include "shaclgap/gap/diagnose.hpp"
#include "shaclgap/rdf/prefix_map.hpp"
#include "shaclgap/shacl/model.hpp"
#include "shaclgap/validator/report.hpp"

#include <string>

namespace shaclgap::cli {

// Rendered forms of the reports, exactly as the command line tool prints
// them. Kept apart from the tool so tests can pin the bytes.

// report_to_graph serialized, with the input documents' prefixes available
// for compaction.
std::string render_report_turtle(const validator::ValidationReport& report,
                                 const rdf::PrefixMap& prefixes);
// Stable key order, two-space indent, no timestamps. Terms are rendered in
// N-Triples syntax.
std::string render_report_json(const validator::ValidationReport& report);
std::string render_report_text(const validator::ValidationReport& report);

std::string render_gap_json(const gap::GapReport& report);
// Alternatives best-first, one explain line per gap.
std::string render_gap_text(const gap::GapReport& report);

std::string render_inspect(const shacl::ShapesGraph& shapes, const rdf::PrefixMap& prefixes);

}  // namespace shaclgap::cli
