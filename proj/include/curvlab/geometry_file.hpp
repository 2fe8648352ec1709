#pragma once

#include <string>
#include <string_view>

#include "curvlab/catalog.hpp"

namespace curvlab {

/// Builds a catalog entry from a JSON geometry description (format in the
/// README). Parameter overrides replace the file's defaults before any
/// expression is compiled. Errors are ParseError with 1-based line/column
/// into the file text; line 0 means the problem has no single location.
GeometryEntry parse_geometry_json(std::string_view text, const ParamOverrides& overrides = {});

/// Reads `path` and calls parse_geometry_json; a missing file is a ParseError at line 0.
GeometryEntry load_geometry_file(const std::string& path, const ParamOverrides& overrides = {});

}  // namespace curvlab
