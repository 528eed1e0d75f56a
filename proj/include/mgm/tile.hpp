#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mgm {

// Edge midpoints of a square tile. Order is used for deterministic iteration.
enum class Edge : std::uint8_t { T = 0, R = 1, B = 2, L = 3 };

inline constexpr std::array<Edge, 4> kAllEdges{Edge::T, Edge::R, Edge::B, Edge::L};

constexpr char edge_name(Edge e) {
  constexpr std::string_view names = "TRBL";
  return names[static_cast<int>(e)];
}

constexpr Edge opposite(Edge e) {
  return static_cast<Edge>((static_cast<int>(e) + 2) % 4);
}

// Counter-clockwise quarter turn: T -> L -> B -> R -> T.
constexpr Edge rotate_edge(Edge e, int quarter_turns = 1) {
  int q = ((quarter_turns % 4) + 4) % 4;
  return static_cast<Edge>((static_cast<int>(e) + 3 * q) % 4);
}

// Small bit set over {T,R,B,L}.
class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint8_t bits) : bits_(bits & 0xF) {}
  constexpr EdgeSet(std::initializer_list<Edge> edges) {
    for (Edge e : edges) bits_ |= bit(e);
  }

  constexpr bool contains(Edge e) const { return (bits_ & bit(e)) != 0; }
  constexpr int size() const {
    int n = 0;
    for (Edge e : kAllEdges) n += contains(e) ? 1 : 0;
    return n;
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  constexpr EdgeSet rotated(int quarter_turns = 1) const {
    EdgeSet out;
    for (Edge e : kAllEdges) {
      if (contains(e)) out.bits_ |= bit(rotate_edge(e, quarter_turns));
    }
    return out;
  }
  constexpr bool operator==(const EdgeSet&) const = default;

 private:
  static constexpr std::uint8_t bit(Edge e) { return std::uint8_t(1u << static_cast<int>(e)); }
  std::uint8_t bits_ = 0;
};

enum class TileKind : std::uint8_t { Empty, Arc, Line, DoubleArc, Crossing, Marked };

// One of the 13 mosaic tiles.
//
//   0 empty            1 arc {L,B}     2 arc {B,R}     3 arc {R,T}     4 arc {T,L}
//   5 line {L,R}       6 line {T,B}
//   7 double arc {T,L}+{B,R}           8 double arc {T,R}+{B,L}
//   9 crossing, vertical over          10 crossing, horizontal over
//   11 marked vertex, marker horizontal
//   12 marked vertex, marker vertical
//
// Codes 9..12 carry the two straight strands {T,B} and {L,R}.
class Tile {
 public:
  static constexpr int kCount = 13;

  constexpr Tile() = default;

  // Throws std::invalid_argument for codes outside 0..12.
  static Tile from_code(int code);
  static constexpr std::optional<Tile> try_from_code(int code) {
    if (code < 0 || code >= kCount) return std::nullopt;
    return Tile(static_cast<std::uint8_t>(code));
  }

  constexpr int code() const { return code_; }
  constexpr TileKind kind() const {
    constexpr std::array<TileKind, kCount> kinds{
        TileKind::Empty,     TileKind::Arc,       TileKind::Arc,      TileKind::Arc,
        TileKind::Arc,       TileKind::Line,      TileKind::Line,     TileKind::DoubleArc,
        TileKind::DoubleArc, TileKind::Crossing,  TileKind::Crossing, TileKind::Marked,
        TileKind::Marked};
    return kinds[code_];
  }
  constexpr bool is_crossing() const { return kind() == TileKind::Crossing; }
  constexpr bool is_marked() const { return kind() == TileKind::Marked; }
  // Crossings and marked vertices: the tiles counted by the ch-index.
  constexpr bool is_vertex() const { return code_ >= 9; }

  constexpr EdgeSet connection_points() const {
    using enum Edge;
    constexpr std::array<EdgeSet, kCount> points{
        EdgeSet{},         EdgeSet{L, B},     EdgeSet{B, R},     EdgeSet{R, T},     EdgeSet{T, L},
        EdgeSet{L, R},     EdgeSet{T, B},     EdgeSet{T, R, B, L}, EdgeSet{T, R, B, L},
        EdgeSet{T, R, B, L}, EdgeSet{T, R, B, L}, EdgeSet{T, R, B, L}, EdgeSet{T, R, B, L}};
    return points[code_];
  }

  // The point joined to `e` by an arc inside the tile (tiles 1..8), or the
  // straight-through point for crossings and marked vertices. Precondition:
  // `e` is a connection point of this tile.
  constexpr Edge partner(Edge e) const {
    using enum Edge;
    switch (code_) {
      case 1: return e == L ? B : L;
      case 2: return e == B ? R : B;
      case 3: return e == R ? T : R;
      case 4: return e == T ? L : T;
      case 7:
        switch (e) {
          case T: return L;
          case L: return T;
          case B: return R;
          default: return B;
        }
      case 8:
        switch (e) {
          case T: return R;
          case R: return T;
          case B: return L;
          default: return B;
        }
      default: return opposite(e);
    }
  }

  // True when the point `e` lies on the over-strand of a crossing tile.
  constexpr bool is_over_point(Edge e) const {
    if (code_ == 9) return e == Edge::T || e == Edge::B;
    if (code_ == 10) return e == Edge::L || e == Edge::R;
    return false;
  }

  // Counter-clockwise quarter turns.
  constexpr Tile rotated(int quarter_turns = 1) const {
    constexpr std::array<std::uint8_t, kCount> once{0, 2, 3, 4, 1, 6, 5, 8, 7, 10, 9, 12, 11};
    int q = ((quarter_turns % 4) + 4) % 4;
    std::uint8_t c = code_;
    for (int i = 0; i < q; ++i) c = once[c];
    return Tile(c);
  }

  constexpr auto operator<=>(const Tile&) const = default;

 private:
  constexpr explicit Tile(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = 0;
};

// The unique tile with at most two connection points whose point set is
// `points`; nullopt when no such tile exists (e.g. three points).
std::optional<Tile> tile_with_points(EdgeSet points);

}  // namespace mgm
