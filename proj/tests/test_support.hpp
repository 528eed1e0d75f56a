#pragma once

// Fixture loading and oracles written independently of the library internals:
// connection points come from a local table, arcs from a local union-find.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgm/mosaic.hpp"

namespace mgm::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(MGM_DATA_DIR) + "/mosaics/" + name + ".mosaic";
}

inline Mosaic fixture(const std::string& name) { return parse_mosaic(read_file(fixture_path(name))); }

// Edge order T, R, B, L as bits 0..3.
inline constexpr std::array<const char*, 13> kPoints{"",     "LB",   "BR",   "RT",   "TL",
                                                     "LR",   "TB",   "TRBL", "TRBL", "TRBL",
                                                     "TRBL", "TRBL", "TRBL"};

inline int edge_bit(char e) {
  switch (e) {
    case 'T': return 0;
    case 'R': return 1;
    case 'B': return 2;
    default: return 3;
  }
}

inline unsigned point_mask(int code) {
  unsigned m = 0;
  for (const char* p = kPoints[code]; *p; ++p) m |= 1u << edge_bit(*p);
  return m;
}

inline bool has(int code, char e) { return point_mask(code) >> edge_bit(e) & 1; }

// Interior consistency only: neighbours agree on shared edges.
inline bool interior_consistent(const std::vector<int>& g, int rows, int cols) {
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int c = g[i * cols + j];
      if (j + 1 < cols && has(c, 'R') != has(g[i * cols + j + 1], 'L')) return false;
      if (i + 1 < rows && has(c, 'B') != has(g[(i + 1) * cols + j], 'T')) return false;
    }
  }
  return true;
}

inline bool fully_connected(const std::vector<int>& g, int rows, int cols) {
  if (!interior_consistent(g, rows, cols)) return false;
  for (int j = 0; j < cols; ++j)
    if (has(g[j], 'T') || has(g[(rows - 1) * cols + j], 'B')) return false;
  for (int i = 0; i < rows; ++i)
    if (has(g[i * cols], 'L') || has(g[i * cols + cols - 1], 'R')) return false;
  return true;
}

inline std::vector<int> codes_of(const Mosaic& m) {
  std::vector<int> g;
  for (Tile t : m.cells()) g.push_back(t.code());
  return g;
}

// Every suitably connected n x n grid, by a border-restricted product of tile
// choices followed by a full adjacency filter. Lexicographic in codes.
inline std::vector<Mosaic> oracle_enumerate(int n, bool allow_marked) {
  const int last = allow_marked ? 12 : 10;
  std::vector<std::vector<int>> choices(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int c = 0; c <= last; ++c) {
        if ((i == 0 && has(c, 'T')) || (i == n - 1 && has(c, 'B')) || (j == 0 && has(c, 'L')) ||
            (j == n - 1 && has(c, 'R')))
          continue;
        choices[i * n + j].push_back(c);
      }
    }
  }
  std::vector<Mosaic> out;
  std::vector<std::size_t> idx(n * n, 0);
  std::vector<int> g(n * n);
  for (;;) {
    for (int k = 0; k < n * n; ++k) g[k] = choices[k][idx[k]];
    if (fully_connected(g, n, n)) out.push_back(Mosaic::from_codes(n, n, g));
    int k = n * n - 1;
    while (k >= 0 && ++idx[k] == choices[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

// Coloring count for the core kei of Z_n. Variables are tile connection
// points; equalities come from shared edges, tile interiors, over-strands and
// marked vertices; each crossing adds under_b = 2 over - under_a.
inline std::uint64_t oracle_coloring_count(const Mosaic& m, int n) {
  const int rows = m.rows(), cols = m.cols();
  auto g = codes_of(m);
  auto id = [&](int i, int j, int e) { return (i * cols + j) * 4 + e; };
  std::vector<int> parent(rows * cols * 4);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  const int T = 0, R = 1, B = 2, L = 3;
  std::vector<std::array<int, 3>> relations;  // (under_a, over, under_b)
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      int c = g[i * cols + j];
      if (j + 1 < cols && has(c, 'R')) unite(id(i, j, R), id(i, j + 1, L));
      if (i + 1 < rows && has(c, 'B')) unite(id(i, j, B), id(i + 1, j, T));
      switch (c) {
        case 1: unite(id(i, j, L), id(i, j, B)); break;
        case 2: unite(id(i, j, B), id(i, j, R)); break;
        case 3: unite(id(i, j, R), id(i, j, T)); break;
        case 4: unite(id(i, j, T), id(i, j, L)); break;
        case 5: unite(id(i, j, L), id(i, j, R)); break;
        case 6: unite(id(i, j, T), id(i, j, B)); break;
        case 7:
          unite(id(i, j, T), id(i, j, L));
          unite(id(i, j, B), id(i, j, R));
          break;
        case 8:
          unite(id(i, j, T), id(i, j, R));
          unite(id(i, j, B), id(i, j, L));
          break;
        case 9:
          unite(id(i, j, T), id(i, j, B));
          relations.push_back({id(i, j, L), id(i, j, T), id(i, j, R)});
          break;
        case 10:
          unite(id(i, j, L), id(i, j, R));
          relations.push_back({id(i, j, T), id(i, j, L), id(i, j, B)});
          break;
        case 11:
        case 12:
          unite(id(i, j, T), id(i, j, B));
          unite(id(i, j, L), id(i, j, R));
          unite(id(i, j, T), id(i, j, L));
          break;
        default: break;
      }
    }
  }
  std::map<int, int> cls;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      for (int e = 0; e < 4; ++e)
        if (point_mask(g[i * cols + j]) >> e & 1) cls.emplace(find(id(i, j, e)), 0);
  int k = 0;
  for (auto& [root, index] : cls) index = k++;
  // Check each relation at the depth where its last variable is assigned.
  std::vector<std::vector<std::array<int, 3>>> at_depth(k);
  for (auto& r : relations) {
    std::array<int, 3> v{cls[find(r[0])], cls[find(r[1])], cls[find(r[2])]};
    at_depth[std::max({v[0], v[1], v[2]})].push_back(v);
  }
  std::vector<int> val(k, 0);
  std::uint64_t count = 0;
  std::function<void(int)> go = [&](int d) {
    if (d == k) {
      ++count;
      return;
    }
    for (int x = 0; x < n; ++x) {
      val[d] = x;
      bool ok = true;
      for (auto& v : at_depth[d])
        if (((2 * val[v[1]] - val[v[0]]) % n + n) % n != val[v[2]]) ok = false;
      if (ok) go(d + 1);
    }
  };
  go(0);
  return count;
}

// All ways to fill the cells marked -1 in `g` so that the whole grid is
// suitably connected, using tiles up to `last`. Stops after `limit`
// solutions; `shuffle` randomizes the candidate order.
inline std::vector<std::vector<int>> completions(std::vector<int> g, int rows, int cols, int last,
                                                 std::size_t limit, std::mt19937* shuffle = nullptr,
                                                 std::uint64_t node_limit = 2000000) {
  std::vector<std::vector<int>> out;
  std::uint64_t nodes = 0;
  std::function<void(int)> go = [&](int pos) {
    if (out.size() >= limit || ++nodes > node_limit) return;
    if (pos == rows * cols) {
      out.push_back(g);
      return;
    }
    const int i = pos / cols, j = pos % cols;
    auto fits = [&](int c) {
      if (has(c, 'T') != (i > 0 && has(g[pos - cols], 'B'))) return false;
      if (has(c, 'L') != (j > 0 && has(g[pos - 1], 'R'))) return false;
      if (i == rows - 1 && has(c, 'B')) return false;
      if (j == cols - 1 && has(c, 'R')) return false;
      // A fixed neighbour below or to the right constrains this cell too.
      if (j + 1 < cols && g[pos + 1] >= 0 && has(c, 'R') != has(g[pos + 1], 'L')) return false;
      if (i + 1 < rows && g[pos + cols] >= 0 && has(c, 'B') != has(g[pos + cols], 'T')) return false;
      return true;
    };
    if (g[pos] >= 0) {
      if (fits(g[pos])) go(pos + 1);
      return;
    }
    std::vector<int> cand(last + 1);
    std::iota(cand.begin(), cand.end(), 0);
    if (shuffle) std::shuffle(cand.begin(), cand.end(), *shuffle);
    for (int c : cand) {
      if (!fits(c)) continue;
      g[pos] = c;
      go(pos + 1);
      if (out.size() >= limit) break;
    }
    g[pos] = -1;
  };
  go(0);
  return out;
}

}  // namespace mgm::testing

#include "mgm/moves.hpp"

namespace mgm::testing {

// A random suitably connected mosaic containing variant v's lhs at (row, col).
struct Site {
  Mosaic mosaic;
  int row = 0;
  int col = 0;
};

inline std::optional<Site> random_site(const MoveCatalog::Variant& v, std::mt19937& rng) {
  const int margin = 1 + static_cast<int>(rng() % 2);
  const int rows = v.lhs.rows() + 2 * margin, cols = v.lhs.cols() + 2 * margin;
  const int row = static_cast<int>(rng() % (rows - v.lhs.rows() + 1));
  const int col = static_cast<int>(rng() % (cols - v.lhs.cols() + 1));
  std::vector<int> g(rows * cols, -1);
  for (int i = 0; i < v.lhs.rows(); ++i)
    for (int j = 0; j < v.lhs.cols(); ++j) g[(row + i) * cols + col + j] = v.lhs.at(i, j).code();
  auto done = completions(g, rows, cols, 12, 1, &rng, 20000);
  if (done.empty()) return std::nullopt;
  return Site{Mosaic::from_codes(rows, cols, done.front()), row, col};
}

}  // namespace mgm::testing
