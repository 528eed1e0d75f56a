#include "doctest.h"
#include "mgm/render.hpp"
#include "test_support.hpp"

using namespace mgm;

TEST_SUITE("render") {
  TEST_CASE("ascii circle") {
    CHECK(render_ascii(Mosaic::from_rows({{2, 1}, {3, 4}})) ==
          "      \n"
          " .--. \n"
          " |  | \n"
          " |  | \n"
          " '--' \n"
          "      \n");
  }

  TEST_CASE("ascii marks crossings and markers") {
    CHECK(render_ascii(Mosaic::from_rows({{9, 10, 11, 12}})) ==
          " |  |  |  | \n"
          "-|-----=--I-\n"
          " |  |  |  | \n");
  }

  TEST_CASE("svg has one group per tile and is deterministic") {
    Mosaic m = mgm::testing::fixture("torus_4");
    std::string svg = render_svg(m);
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t tiles = 0;
    for (std::size_t p = 0; (p = svg.find("data-tile=", p)) != std::string::npos; ++p) ++tiles;
    CHECK(tiles == 16);
    CHECK(svg.find("data-tile=\"11\"") != std::string::npos);
    CHECK(svg == render_svg(m));
  }
}
