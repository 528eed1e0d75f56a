#include "doctest.h"
#include "mgm/mosaic.hpp"
#include "mgm/strands.hpp"
#include "test_support.hpp"

using namespace mgm;
using mgm::testing::fixture;

TEST_SUITE("mosaic") {
  TEST_CASE("tile connection points agree with the reference table") {
    for (int c = 0; c < Tile::kCount; ++c) {
      unsigned mask = 0;
      for (Edge e : kAllEdges)
        if (Tile::from_code(c).connection_points().contains(e)) mask |= 1u << static_cast<int>(e);
      CHECK(mask == mgm::testing::point_mask(c));
    }
    CHECK_THROWS_AS(Tile::from_code(13), std::invalid_argument);
    CHECK_THROWS_AS(Tile::from_code(-1), std::invalid_argument);
  }

  TEST_CASE("a quarter turn moves connection points counter-clockwise") {
    for (int c = 0; c < Tile::kCount; ++c) {
      Tile t = Tile::from_code(c);
      CHECK(t.rotated().connection_points() == t.connection_points().rotated());
      CHECK(t.rotated(4) == t);
      for (Edge e : kAllEdges) {
        if (!t.connection_points().contains(e) || c == 0) continue;
        CHECK(t.rotated().partner(rotate_edge(e)) == rotate_edge(t.partner(e)));
      }
    }
    CHECK(Tile::from_code(1).rotated().code() == 2);
    CHECK(Tile::from_code(4).rotated().code() == 1);
    CHECK(Tile::from_code(9).rotated().code() == 10);
    CHECK(Tile::from_code(11).rotated().code() == 12);
  }

  TEST_CASE("crossing over-strands follow the codes") {
    CHECK(Tile::from_code(9).is_over_point(Edge::T));
    CHECK_FALSE(Tile::from_code(9).is_over_point(Edge::L));
    CHECK(Tile::from_code(10).is_over_point(Edge::R));
    CHECK_FALSE(Tile::from_code(11).is_over_point(Edge::T));
  }

  TEST_CASE("rotating a grid rotates positions and tiles") {
    Mosaic m = Mosaic::from_rows({{2, 1, 0}, {3, 4, 0}});
    Mosaic r = rotated(m);
    CHECK(r.rows() == 3);
    CHECK(r.cols() == 2);
    // (i, j) lands on (cols - 1 - j, i).
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) CHECK(r.at(m.cols() - 1 - j, i) == m.at(i, j).rotated());
    CHECK(rotated(m, 4) == m);
    CHECK(is_suitably_connected(r));
  }

  TEST_CASE("validation reports unmatched points in order") {
    CHECK(validate(fixture("trefoil_4")).suitably_connected);
    auto report = validate(fixture("broken_trefoil"));
    CHECK_FALSE(report.suitably_connected);
    REQUIRE(report.failures.size() == 2);
    CHECK(report.failures[0] == EdgeFailure{2, 2, Edge::R});
    CHECK(report.failures[1] == EdgeFailure{2, 3, Edge::B});
    // An arc pointing off the grid is a failure too.
    auto edge = validate(Mosaic::from_rows({{1}}));
    CHECK(edge.failures.size() == 2);
  }

  TEST_CASE("unmatched points always come in even numbers") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> g(9);
      for (int& c : g) c = static_cast<int>(rng() % 13);
      auto report = validate(Mosaic::from_codes(3, 3, g));
      CHECK(report.failures.size() % 2 == 0);
      CHECK(report.suitably_connected == report.failures.empty());
    }
  }

  TEST_CASE("counts of crossings and marked vertices") {
    CHECK(ch_index(fixture("trefoil_4")) == 3);
    CHECK(crossing_count(fixture("torus_4")) == 0);
    CHECK(marked_count(fixture("torus_4")) == 2);
    CHECK(ch_index(fixture("spun_trefoil_6")) == 8);
    CHECK(ch_index(fixture("spun_figure_eight_8")) == 10);
    CHECK(ch_index(fixture("circle")) == 0);
  }

  TEST_CASE("inject, crop and embed") {
    Mosaic m = fixture("trefoil_4");
    Mosaic big = inject(m);
    CHECK(big.size() == 5);
    CHECK(big.at(4, 4).code() == 0);
    CHECK(crop(big) == m);
    Mosaic placed = embed(m, 7, 6, 2, 1);
    CHECK(placed.at(2 + 1, 1 + 1) == m.at(1, 1));
    CHECK(crop(placed) == m);
    CHECK(crop(Mosaic(3, 3)) == Mosaic(1, 1));
    CHECK_THROWS(embed(m, 4, 4, 1, 0));
  }

  TEST_CASE("parse and serialize round trip") {
    Mosaic m = fixture("spun_trefoil_7");
    CHECK(parse_mosaic(serialize(m)) == m);
    CHECK(serialize(Mosaic::from_rows({{2, 1}, {3, 4}})) == "2 1\n3 4\n");
    CHECK(parse_mosaic("# comment\n\n2 1\n3 4\n") == Mosaic::from_rows({{2, 1}, {3, 4}}));
    auto blocks = parse_mosaic_blocks("2 1\n3 4\n\n0\n");
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[1] == Mosaic(1, 1));
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_mosaic("2 1\n3 13\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_mosaic("2 1\n3\n"), ParseError);
    CHECK_THROWS_AS(parse_mosaic(""), ParseError);
    CHECK_THROWS_AS(parse_mosaic("2 x\n"), ParseError);
  }

  TEST_CASE("twofold closures of a single crossing") {
    auto [a, b] = twofold_closures(Mosaic::from_rows({{9}}));
    CHECK(a.size() == 3);
    CHECK(is_suitably_connected(a));
    CHECK(is_suitably_connected(b));
    CHECK(a != b);
    CHECK(component_count(a) == 1);
    CHECK(component_count(b) == 1);
    // No boundary points: both closures are the same empty ring.
    auto [c, d] = twofold_closures(Mosaic::from_rows({{2, 1}, {3, 4}}));
    CHECK(c == d);
    CHECK_THROWS_AS(twofold_closures(Mosaic::from_rows({{5, 0}})), std::invalid_argument);
  }
}
