#pragma once

#include <string>

#include "mgm/mosaic.hpp"

namespace mgm {

// Three lines of three characters per tile (brackets not printed):
//
//     0      1      2      3      4      5      6
//   [   ]  [   ]  [   ]  [ | ]  [ | ]  [   ]  [ | ]
//   [   ]  [-. ]  [ .-]  [ '-]  [-' ]  [---]  [ | ]
//   [   ]  [ | ]  [ | ]  [   ]  [   ]  [   ]  [ | ]
//
//     7      8      9      10     11     12
//   [ | ]  [ | ]  [ | ]  [ | ]  [ | ]  [ | ]
//   [-/-]  [-\-]  [-|-]  [---]  [-=-]  [-I-]
//   [ | ]  [ | ]  [ | ]  [ | ]  [ | ]  [ | ]
//
// The corner arcs of 7 and 8 are drawn as one slash, a crossing shows its
// over-strand unbroken, and '=' and 'I' are the horizontal and vertical
// markers. Every row ends with '\n'.
std::string render_ascii(const Mosaic& m);

// Standalone SVG, one <g> per tile, 40 units per tile. Crossings leave a gap
// in the under-strand; markers are short thick bars.
std::string render_svg(const Mosaic& m);

}  // namespace mgm
