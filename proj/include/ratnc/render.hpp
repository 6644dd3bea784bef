#pragma once

#include <string>

#include "ratnc/labeled_pair.hpp"

namespace ratnc {

// Character-grid picture of the path with labels and (approximate) lasers.
std::string ascii_diagram(const DyckPath& d);

// SVG 1.1 document: exact path, diagonal, lasers, plus the disk diagram of
// the labeled pair with rank annotations.
std::string svg_diagram(const DyckPath& d);

}  // namespace ratnc
