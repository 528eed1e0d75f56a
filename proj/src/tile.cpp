#include "mgm/tile.hpp"

#include <stdexcept>
#include <string>

namespace mgm {

Tile Tile::from_code(int code) {
  auto t = try_from_code(code);
  if (!t) throw std::invalid_argument("invalid tile code " + std::to_string(code));
  return *t;
}

std::optional<Tile> tile_with_points(EdgeSet points) {
  for (int c = 0; c <= 6; ++c) {
    Tile t = Tile::from_code(c);
    if (t.connection_points() == points) return t;
  }
  return std::nullopt;
}

}  // namespace mgm
