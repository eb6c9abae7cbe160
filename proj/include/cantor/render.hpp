#pragma once

#include <string>

#include "cantor/constructions.hpp"

namespace cantor {

// Deterministic SVG of a construction: every level-`level` corner-IFS square
// filled by its exact classification, region boundary overlaid (disk arcs as
// 256 chords), root outline and legend. Identical inputs give identical
// bytes. level <= 9.
std::string render_svg(const CoverSpec& spec, int level);

}  // namespace cantor
