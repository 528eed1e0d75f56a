#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgm/tile.hpp"

namespace mgm {

// Rectangular grid of tiles, rows indexed top to bottom, columns left to right.
class Mosaic {
 public:
  Mosaic() : Mosaic(1, 1) {}
  Mosaic(int rows, int cols);
  Mosaic(int rows, int cols, std::vector<Tile> cells);

  // Builds from a row-major list of codes; throws on bad shape or codes.
  static Mosaic from_codes(int rows, int cols, std::span<const int> codes);
  static Mosaic from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // Side of the smallest square mosaic holding this grid.
  int size() const { return rows_ > cols_ ? rows_ : cols_; }

  Tile at(int i, int j) const { return cells_[index(i, j)]; }
  void set(int i, int j, Tile t) { cells_[index(i, j)] = t; }
  bool in_bounds(int i, int j) const { return i >= 0 && j >= 0 && i < rows_ && j < cols_; }
  std::span<const Tile> cells() const { return cells_; }

  auto operator<=>(const Mosaic&) const = default;
  bool operator==(const Mosaic&) const = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

  int rows_;
  int cols_;
  std::vector<Tile> cells_;
};

struct EdgeFailure {
  int row;
  int col;
  Edge edge;
  auto operator<=>(const EdgeFailure&) const = default;
};

struct ValidationReport {
  bool suitably_connected = true;
  // Row-major, then edge order T,R,B,L. Each entry is a connection point that
  // has no matching point across its edge (or lies on the outer boundary).
  std::vector<EdgeFailure> failures;
};

ValidationReport validate(const Mosaic& m);
inline bool is_suitably_connected(const Mosaic& m) { return validate(m).suitably_connected; }

// Number of crossings plus marked vertices.
int ch_index(const Mosaic& m);
int marked_count(const Mosaic& m);
int crossing_count(const Mosaic& m);

// Adds an empty last row and last column.
Mosaic inject(const Mosaic& m);
// Removes all-empty outer rows and columns; an all-empty grid becomes 1x1.
Mosaic crop(const Mosaic& m);
// Places `m` at (top, left) inside an empty rows x cols grid.
Mosaic embed(const Mosaic& m, int rows, int cols, int top, int left);
// Whole-grid counter-clockwise quarter turns (tiles rotate with the grid).
Mosaic rotated(const Mosaic& m, int quarter_turns = 1);

// The two closures of `inner` by a ring of boundary tiles. Throws
// std::invalid_argument when the inner grid is not suitably connected away
// from its outer boundary, or when its boundary carries an odd number of
// connection points. With no boundary points both closures are the same.
std::pair<Mosaic, Mosaic> twofold_closures(const Mosaic& inner);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Text format: one row per line of whitespace-separated codes 0..12; lines
// starting with '#' are comments; blank lines are ignored.
Mosaic parse_mosaic(std::string_view text);
std::string serialize(const Mosaic& m);

// Parses blank-line separated mosaic blocks (census files).
std::vector<Mosaic> parse_mosaic_blocks(std::string_view text);

}  // namespace mgm
