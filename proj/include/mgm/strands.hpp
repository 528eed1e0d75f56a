#pragma once

#include <array>
#include <vector>

#include "mgm/mosaic.hpp"

namespace mgm {

// A connection point of a specific tile.
struct PointRef {
  int row;
  int col;
  Edge edge;
  auto operator<=>(const PointRef&) const = default;
};

// Maximal path through the diagram. Arcs pass through the over-strand of a
// crossing and end at under-crossing points and at marked vertices; closed
// arcs have no ends.
struct Arc {
  // Every tile-level connection point on the arc, in row-major/edge order.
  std::vector<PointRef> points;
  int component = 0;
};

struct CrossingIncidence {
  int row;
  int col;
  int under_a;  // arc at the T or L under point (whichever is under)
  int over;
  int under_b;
};

struct VertexIncidence {
  int row;
  int col;
  std::array<int, 4> arcs;  // indexed by Edge (T, R, B, L)
};

struct StrandStructure {
  std::vector<Arc> arcs;
  std::vector<CrossingIncidence> crossings;
  std::vector<VertexIncidence> vertices;
  // Components with crossings and marked vertices passed straight through.
  int component_count = 0;

  // Arc id of a tile-level connection point; -1 if the tile has no point there.
  int arc_at(int row, int col, Edge e) const;

  int rows = 0;
  int cols = 0;
  std::vector<int> point_arc;  // (row * cols + col) * 4 + edge
};

// Throws std::invalid_argument if `m` is not suitably connected. Arc ids follow
// the first point of each arc in (row, col, edge) order.
StrandStructure trace(const Mosaic& m);

// Number of components (pass-through convention); 0 for an empty diagram.
inline int component_count(const Mosaic& m) { return trace(m).component_count; }

}  // namespace mgm
