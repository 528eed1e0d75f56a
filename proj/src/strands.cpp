#include "mgm/strands.hpp"

#include <stdexcept>

#include "mgm/detail/disjoint_set.hpp"

namespace mgm {

int StrandStructure::arc_at(int row, int col, Edge e) const {
  if (row < 0 || col < 0 || row >= rows || col >= cols) return -1;
  return point_arc[(static_cast<std::size_t>(row) * cols + col) * 4 + static_cast<int>(e)];
}

StrandStructure trace(const Mosaic& m) {
  auto report = validate(m);
  if (!report.suitably_connected) {
    const auto& f = report.failures.front();
    throw std::invalid_argument("mosaic is not suitably connected: (" + std::to_string(f.row) +
                                "," + std::to_string(f.col) + ") edge " + edge_name(f.edge) +
                                " unmatched");
  }
  const int R = m.rows(), C = m.cols();
  auto id = [C](int i, int j, Edge e) { return (i * C + j) * 4 + static_cast<int>(e); };

  detail::DisjointSet arcs(R * C * 4);
  detail::DisjointSet comps(R * C * 4);
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) {
      Tile t = m.at(i, j);
      EdgeSet pts = t.connection_points();
      if (pts.contains(Edge::R)) {
        arcs.unite(id(i, j, Edge::R), id(i, j + 1, Edge::L));
        comps.unite(id(i, j, Edge::R), id(i, j + 1, Edge::L));
      }
      if (pts.contains(Edge::B)) {
        arcs.unite(id(i, j, Edge::B), id(i + 1, j, Edge::T));
        comps.unite(id(i, j, Edge::B), id(i + 1, j, Edge::T));
      }
      for (Edge e : kAllEdges) {
        if (!pts.contains(e)) continue;
        Edge p = t.partner(e);
        comps.unite(id(i, j, e), id(i, j, p));
        bool joins_arc = t.is_crossing() ? t.is_over_point(e) : !t.is_marked();
        if (joins_arc) arcs.unite(id(i, j, e), id(i, j, p));
      }
    }
  }

  StrandStructure s;
  s.rows = R;
  s.cols = C;
  s.point_arc.assign(static_cast<std::size_t>(R) * C * 4, -1);
  std::vector<int> arc_of_root(R * C * 4, -1);
  std::vector<int> comp_of_root(R * C * 4, -1);
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) {
      EdgeSet pts = m.at(i, j).connection_points();
      for (Edge e : kAllEdges) {
        if (!pts.contains(e)) continue;
        int p = id(i, j, e);
        int root = arcs.find(p);
        if (arc_of_root[root] < 0) {
          arc_of_root[root] = static_cast<int>(s.arcs.size());
          s.arcs.emplace_back();
          int croot = comps.find(p);
          if (comp_of_root[croot] < 0) comp_of_root[croot] = s.component_count++;
          s.arcs.back().component = comp_of_root[croot];
        }
        int a = arc_of_root[root];
        s.point_arc[p] = a;
        s.arcs[a].points.push_back({i, j, e});
      }
    }
  }

  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) {
      Tile t = m.at(i, j);
      auto at = [&](Edge e) { return s.point_arc[id(i, j, e)]; };
      if (t.is_crossing()) {
        if (t.code() == 9)
          s.crossings.push_back({i, j, at(Edge::L), at(Edge::T), at(Edge::R)});
        else
          s.crossings.push_back({i, j, at(Edge::T), at(Edge::L), at(Edge::B)});
      } else if (t.is_marked()) {
        s.vertices.push_back({i, j, {at(Edge::T), at(Edge::R), at(Edge::B), at(Edge::L)}});
      }
    }
  }
  return s;
}

}  // namespace mgm
