#pragma once

// Reproduction reports assembled from the library modules.

#include "hkc/json_io.hpp"

#include <map>
#include <string>

namespace hkc::report {

/// Module name -> version string, embedded in every report.
const std::map<std::string, std::string>& moduleVersions();

/// Intersection numbers, Chern classes, the nef/effective gap at the
/// endpoints 1 and 8/5, and catalog flags for the variety of lines.
/// Output is deterministic.
io::Json reportFanoLines();

} // namespace hkc::report
