#pragma once

#include <string>
#include <vector>

#include "gdyn/checkers.hpp"

namespace gdyn {

/// `property=<tag> verdict=<bool>` followed by witness / note lines.
std::string format_property_report(const GSystem& s, const PropertyReport& r);

/// One key=value line per property of the implication diagram, then the
/// precondition flags and a consistency line.
std::string format_diagram_row(const GSystem& s);

std::string format_minimal_sets(const GSystem& s);

}  // namespace gdyn
