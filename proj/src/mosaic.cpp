#include "mgm/mosaic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mgm {

namespace {

struct Step {
  int di;
  int dj;
};

constexpr Step step(Edge e) {
  switch (e) {
    case Edge::T: return {-1, 0};
    case Edge::R: return {0, 1};
    case Edge::B: return {1, 0};
    default: return {0, -1};
  }
}

}  // namespace

Mosaic::Mosaic(int rows, int cols) : Mosaic(rows, cols, {}) {}

Mosaic::Mosaic(int rows, int cols, std::vector<Tile> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("mosaic dimensions must be positive");
  auto n = static_cast<std::size_t>(rows) * cols;
  if (cells_.empty()) cells_.resize(n);
  if (cells_.size() != n) throw std::invalid_argument("mosaic cell count does not match dimensions");
}

Mosaic Mosaic::from_codes(int rows, int cols, std::span<const int> codes) {
  std::vector<Tile> cells;
  cells.reserve(codes.size());
  for (int c : codes) cells.push_back(Tile::from_code(c));
  return Mosaic(rows, cols, std::move(cells));
}

Mosaic Mosaic::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty mosaic");
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw std::invalid_argument("ragged mosaic rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_codes(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), flat);
}

ValidationReport validate(const Mosaic& m) {
  ValidationReport report;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      EdgeSet pts = m.at(i, j).connection_points();
      for (Edge e : kAllEdges) {
        if (!pts.contains(e)) continue;
        auto [di, dj] = step(e);
        int ni = i + di, nj = j + dj;
        bool ok = m.in_bounds(ni, nj) && m.at(ni, nj).connection_points().contains(opposite(e));
        if (!ok) report.failures.push_back({i, j, e});
      }
    }
  }
  report.suitably_connected = report.failures.empty();
  return report;
}

int ch_index(const Mosaic& m) {
  return static_cast<int>(std::count_if(m.cells().begin(), m.cells().end(),
                                        [](Tile t) { return t.is_vertex(); }));
}

int marked_count(const Mosaic& m) {
  return static_cast<int>(std::count_if(m.cells().begin(), m.cells().end(),
                                        [](Tile t) { return t.is_marked(); }));
}

int crossing_count(const Mosaic& m) {
  return static_cast<int>(std::count_if(m.cells().begin(), m.cells().end(),
                                        [](Tile t) { return t.is_crossing(); }));
}

Mosaic embed(const Mosaic& m, int rows, int cols, int top, int left) {
  if (top < 0 || left < 0 || top + m.rows() > rows || left + m.cols() > cols)
    throw std::invalid_argument("embedding does not fit");
  Mosaic out(rows, cols);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i + top, j + left, m.at(i, j));
  return out;
}

Mosaic inject(const Mosaic& m) { return embed(m, m.rows() + 1, m.cols() + 1, 0, 0); }

Mosaic crop(const Mosaic& m) {
  int top = m.rows(), bottom = -1, left = m.cols(), right = -1;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).code() == 0) continue;
      top = std::min(top, i);
      bottom = std::max(bottom, i);
      left = std::min(left, j);
      right = std::max(right, j);
    }
  }
  if (bottom < 0) return Mosaic(1, 1);
  Mosaic out(bottom - top + 1, right - left + 1);
  for (int i = top; i <= bottom; ++i)
    for (int j = left; j <= right; ++j) out.set(i - top, j - left, m.at(i, j));
  return out;
}

Mosaic rotated(const Mosaic& m, int quarter_turns) {
  int q = ((quarter_turns % 4) + 4) % 4;
  Mosaic cur = m;
  for (int k = 0; k < q; ++k) {
    // Counter-clockwise: cell (i, j) moves to (cols-1-j, i).
    Mosaic next(cur.cols(), cur.rows());
    for (int i = 0; i < cur.rows(); ++i)
      for (int j = 0; j < cur.cols(); ++j)
        next.set(cur.cols() - 1 - j, i, cur.at(i, j).rotated(1));
    cur = std::move(next);
  }
  return cur;
}

std::pair<Mosaic, Mosaic> twofold_closures(const Mosaic& inner) {
  const int m = inner.rows(), n = inner.cols();
  for (const auto& f : validate(inner).failures) {
    auto [di, dj] = step(f.edge);
    if (inner.in_bounds(f.row + di, f.col + dj))
      throw std::invalid_argument("inner mosaic is not suitably connected at (" +
                                  std::to_string(f.row) + "," + std::to_string(f.col) + ")");
  }

  const int R = m + 2, C = n + 2;
  // Ring cells in clockwise order starting at the top-left corner.
  std::vector<std::pair<int, int>> ring;
  for (int j = 0; j < C; ++j) ring.emplace_back(0, j);
  for (int i = 1; i < R; ++i) ring.emplace_back(i, C - 1);
  for (int j = C - 2; j >= 0; --j) ring.emplace_back(R - 1, j);
  for (int i = R - 2; i >= 1; --i) ring.emplace_back(i, 0);
  const int L = static_cast<int>(ring.size());

  // For each ring cell: the edge pointing into the inner grid, if it carries a point.
  std::vector<int> points;  // ring positions carrying an inner connection point
  std::vector<Edge> inward(L, Edge::T);
  for (int p = 0; p < L; ++p) {
    auto [i, j] = ring[p];
    int ii = i - 1, jj = j - 1;
    auto probe = [&](Edge from_ring, int ci, int cj, Edge from_inner) {
      if (inner.in_bounds(ci, cj) && inner.at(ci, cj).connection_points().contains(from_inner)) {
        points.push_back(p);
        inward[p] = from_ring;
      }
    };
    if (i == 0 && j > 0 && j < C - 1) probe(Edge::B, 0, jj, Edge::T);
    else if (j == C - 1 && i > 0 && i < R - 1) probe(Edge::L, ii, n - 1, Edge::R);
    else if (i == R - 1 && j > 0 && j < C - 1) probe(Edge::T, m - 1, jj, Edge::B);
    else if (j == 0 && i > 0 && i < R - 1) probe(Edge::R, ii, 0, Edge::L);
  }
  if (points.size() % 2 != 0)
    throw std::invalid_argument("odd number of boundary connection points (" +
                                std::to_string(points.size()) + ")");

  // Edge from ring cell p towards ring cell p+1 (clockwise neighbour).
  auto towards = [&](int p, int q) {
    auto [i, j] = ring[p];
    auto [qi, qj] = ring[q];
    if (qi < i) return Edge::T;
    if (qi > i) return Edge::B;
    if (qj > j) return Edge::R;
    return Edge::L;
  };

  auto close = [&](int shift) {
    Mosaic out = embed(inner, R, C, 1, 1);
    std::vector<std::uint8_t> bits(L, 0);
    auto add = [&](int p, Edge e) { bits[p] |= EdgeSet{e}.bits(); };
    const int k = static_cast<int>(points.size());
    for (int t = 0; t < k; t += 2) {
      int a = points[(t + shift) % k];
      int b = points[(t + shift + 1) % k];
      add(a, inward[a]);
      add(b, inward[b]);
      for (int p = a; p != b; p = (p + 1) % L) {
        int q = (p + 1) % L;
        add(p, towards(p, q));
        add(q, towards(q, p));
      }
    }
    for (int p = 0; p < L; ++p) {
      auto t = tile_with_points(EdgeSet(bits[p]));
      if (!t) throw std::logic_error("ring cell received an impossible point set");
      out.set(ring[p].first, ring[p].second, *t);
    }
    return out;
  };
  return {close(0), close(1)};
}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct ParsedRow {
  int line;
  std::vector<int> codes;
};

// Returns rows grouped into blocks separated by blank lines.
std::vector<std::vector<ParsedRow>> parse_rows(std::string_view text) {
  std::vector<std::vector<ParsedRow>> blocks(1);
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      if (!blocks.back().empty()) blocks.emplace_back();
      if (end == text.size()) break;
      continue;
    }
    if (line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    ParsedRow row{line_no, {}};
    std::size_t k = 0;
    while (k < line.size()) {
      if (line[k] == ' ' || line[k] == '\t') {
        ++k;
        continue;
      }
      std::size_t start = k;
      while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
      std::string_view tok = line.substr(start, k - start);
      int col = static_cast<int>(start) + 1;
      bool digits = tok.size() <= 3 && std::all_of(tok.begin(), tok.end(), [](char c) {
                      return std::isdigit(static_cast<unsigned char>(c)) != 0;
                    });
      int value = digits ? std::stoi(std::string(tok)) : -1;
      if (value < 0 || value >= Tile::kCount)
        throw ParseError(line_no, col, "unknown tile token '" + std::string(tok) + "'");
      row.codes.push_back(value);
    }
    blocks.back().push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (blocks.back().empty()) blocks.pop_back();
  return blocks;
}

Mosaic block_to_mosaic(const std::vector<ParsedRow>& rows) {
  const std::size_t width = rows.front().codes.size();
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.codes.size() != width)
      throw ParseError(r.line, 1,
                       "ragged row: expected " + std::to_string(width) + " tiles, found " +
                           std::to_string(r.codes.size()));
    flat.insert(flat.end(), r.codes.begin(), r.codes.end());
  }
  return Mosaic::from_codes(static_cast<int>(rows.size()), static_cast<int>(width), flat);
}

}  // namespace

Mosaic parse_mosaic(std::string_view text) {
  auto blocks = parse_rows(text);
  if (blocks.empty()) throw ParseError(1, 1, "empty input");
  if (blocks.size() > 1) {
    // Blank lines inside a single mosaic are tolerated.
    std::vector<ParsedRow> merged;
    for (auto& b : blocks) merged.insert(merged.end(), b.begin(), b.end());
    return block_to_mosaic(merged);
  }
  return block_to_mosaic(blocks.front());
}

std::vector<Mosaic> parse_mosaic_blocks(std::string_view text) {
  std::vector<Mosaic> out;
  for (const auto& b : parse_rows(text)) out.push_back(block_to_mosaic(b));
  return out;
}

std::string serialize(const Mosaic& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.rows()) * m.cols() * 3);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out.push_back(' ');
      out += std::to_string(m.at(i, j).code());
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace mgm
