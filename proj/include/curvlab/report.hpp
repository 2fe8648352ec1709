#pragma once

#include <string>
#include <string_view>

#include "curvlab/runner.hpp"

namespace curvlab {

/// JSON report, schema "curvlab-report/1". Keys keep a fixed order and
/// non-finite numbers are written as null, so equal reports give equal bytes.
std::string report_to_json(const Report& report);

/// Inverse of report_to_json; throws ParseError on malformed input.
Report report_from_json(std::string_view text);

/// Line-oriented text report: header, conventions block, one line per record, summary.
std::string report_to_text(const Report& report);

}  // namespace curvlab
