#include "doctest.h"
#include "mgm/kei.hpp"
#include "mgm/resolutions.hpp"
#include "test_support.hpp"

using namespace mgm;
using mgm::testing::fixture;

TEST_SUITE("resolutions") {
  TEST_CASE("splicing replaces marked vertices by double arcs") {
    Mosaic m = Mosaic::from_rows({{11, 12}});
    CHECK(splice(m, Direction::Plus) == Mosaic::from_rows({{8, 7}}));
    CHECK(splice(m, Direction::Minus) == Mosaic::from_rows({{7, 8}}));
    Mosaic t = fixture("trefoil_4");
    CHECK(splice(t, Direction::Plus) == t);
    CHECK(sign_char(Direction::Minus) == '-');
  }

  TEST_CASE("resolutions of the small surfaces") {
    CHECK(component_count(splice(fixture("torus_4"), Direction::Plus)) == 1);
    CHECK(component_count(splice(fixture("torus_4"), Direction::Minus)) == 1);
    CHECK(component_count(splice(fixture("spun_trefoil_6"), Direction::Plus)) == 2);
    CHECK(component_count(splice(fixture("spun_trefoil_6"), Direction::Minus)) == 2);
    CHECK(component_count(splice(fixture("spun_figure_eight_8"), Direction::Plus)) == 2);
  }

  TEST_CASE("trivial unlink checks") {
    auto circle = is_trivial_unlink(fixture("circle"));
    CHECK(circle.value == Truth::Yes);

    auto trefoil = is_trivial_unlink(fixture("trefoil_4"));
    CHECK(trefoil.value == Truth::No);
    CHECK(trefoil.evidence == "core-cyclic:3 gives 9 colorings > 3^1");

    Mosaic unknot = splice(fixture("spun_trefoil_6"), Direction::Minus);
    auto yes = is_trivial_unlink(unknot);
    CHECK(yes.value == Truth::Yes);
    CHECK(yes.evidence.find("crossingless after") == 0);

    TrivialityOptions none;
    none.node_budget = 0;
    CHECK(is_trivial_unlink(unknot, none).value == Truth::Unknown);

    TrivialityOptions z5;
    z5.certificates = {core_kei_cyclic(5)};
    z5.node_budget = 0;
    CHECK(is_trivial_unlink(fixture("trefoil_4"), z5).value == Truth::Unknown);

    CHECK_THROWS_AS(is_trivial_unlink(fixture("torus_4")), std::invalid_argument);
  }

  TEST_CASE("evidence never flips between yes and no across budgets") {
    Mosaic unknot = splice(fixture("spun_trefoil_6"), Direction::Plus);
    for (std::uint64_t budget : {0, 10, 100, 1000, 10000}) {
      TrivialityOptions o;
      o.node_budget = budget;
      CHECK(is_trivial_unlink(unknot, o).value != Truth::No);
      CHECK(is_trivial_unlink(fixture("trefoil_5"), o).value == Truth::No);
    }
  }

  TEST_CASE("admissibility") {
    CHECK(is_admissible(fixture("spun_trefoil_6")).value == Truth::Yes);
    CHECK(is_admissible(fixture("torus_4")).value == Truth::Yes);
    CHECK(is_admissible(fixture("projective_plane_4")).value == Truth::Yes);
    auto trefoil = is_admissible(fixture("trefoil_4"));
    CHECK(trefoil.value == Truth::No);
    CHECK(trefoil.evidence.find("L+: no (core-cyclic:3") == 0);
  }
}
