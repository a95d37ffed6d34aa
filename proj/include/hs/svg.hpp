#pragma once

#include <string>

#include "hs/io.hpp"

namespace hs {

// Deterministic SVG figure for a solve result: per-class maximal regions,
// boundary sets, and the minimal compact points. Byte-identical output for
// identical input.
std::string render_solution_svg(const ResultFile& result);

}  // namespace hs
