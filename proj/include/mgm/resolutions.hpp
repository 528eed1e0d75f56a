#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgm/kei.hpp"
#include "mgm/mosaic.hpp"
#include "mgm/moves.hpp"
#include "mgm/search_equivalent.hpp"

namespace mgm {

enum class Direction { Plus, Minus };

char sign_char(Direction d);

// Replaces every marked vertex by a double arc: (11,+) and (12,-) become 8,
// (11,-) and (12,+) become 7. Other tiles are unchanged.
Mosaic splice(const Mosaic& m, Direction d);

enum class Truth { Yes, No, Unknown };
const char* to_string(Truth t);

struct TriState {
  Truth value = Truth::Unknown;
  std::string evidence;
};

struct TrivialityOptions {
  std::uint64_t node_budget = 200000;
  // Extra room beyond the diagram's own size for the search.
  int size_slack = 1;
  int workers = 1;
  // Certificate family; core kei of Z_3, Z_5 and Z_7 when empty.
  std::vector<Kei> certificates;
};

// Semi-decision for "m is a diagram of a trivial link". Yes carries a move
// trace to a crossingless diagram; No carries a kei coloring witness.
// Throws std::invalid_argument when m has marked vertices.
TriState is_trivial_unlink(const Mosaic& m, const TrivialityOptions& options = {},
                           const MoveCatalog& catalog = MoveCatalog::default_catalog());

// Both resolutions trivial. No dominates, then Unknown.
TriState is_admissible(const Mosaic& m, const TrivialityOptions& options = {},
                       const MoveCatalog& catalog = MoveCatalog::default_catalog());

}  // namespace mgm
