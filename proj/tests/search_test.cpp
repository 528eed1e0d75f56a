#include "doctest.h"
#include "mgm/kei.hpp"
#include "mgm/search.hpp"
#include "test_support.hpp"

using namespace mgm;
using mgm::testing::fixture;

namespace {

// Replays a trace step by step with the public move API.
void check_trace(const Mosaic& start, const std::vector<TraceStep>& trace) {
  const auto& cat = MoveCatalog::default_catalog();
  Mosaic cur = crop(start);
  for (const auto& s : trace) {
    Mosaic framed = embed(cur, s.frame_rows, s.frame_cols, s.top, s.left);
    cur = crop(apply(framed, s.move, cat));
    CHECK(cur == s.result);
  }
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("enumeration matches the brute-force filter") {
    for (int n : {1, 2, 3}) {
      for (bool marked : {false, true}) {
        CAPTURE(n);
        CAPTURE(marked);
        CHECK(enumerate(n, marked) == mgm::testing::oracle_enumerate(n, marked));
      }
    }
    CHECK(enumerate(2, false).size() == 2);
    CHECK(enumerate(3, false).size() == 22);
    CHECK(enumerate(3, true).size() == 26);
    CHECK_THROWS(enumerate(0, false));
  }

  TEST_CASE("enumeration does not depend on the worker count") {
    auto one = enumerate(4, false, 1);
    CHECK(one.size() == 2594);
    CHECK(enumerate(4, false, 3) == one);
  }

  TEST_CASE("lower bound from the ch-index") {
    CHECK(lower_bound(0) == 2);
    CHECK(lower_bound(1) == 3);
    CHECK(lower_bound(2) == 4);
    CHECK(lower_bound(4) == 4);
    CHECK(lower_bound(5) == 5);
    for (int ch = 7; ch <= 16; ++ch) CHECK(lower_bound(ch) == 6);
    CHECK(lower_bound(17) == 7);
    CHECK_THROWS(lower_bound(-1));
  }

  TEST_CASE("budget and exhaustion") {
    Mosaic m = fixture("trefoil_4");
    auto never = [](const Mosaic&) { return false; };
    SearchOptions o;
    o.node_budget = 0;
    auto r = search_equivalent(m, never, o);
    CHECK(r.status == SearchResult::Status::BudgetHit);
    CHECK(r.explored == 0);
    // A goal met by the start is found even without budget.
    r = search_equivalent(m, [](const Mosaic& x) { return ch_index(x) == 3; }, o);
    CHECK(r.status == SearchResult::Status::Found);
    CHECK(r.trace.empty());

    o.node_budget = 1000000;
    o.size_cap = 2;
    r = search_equivalent(fixture("circle"), never, o);
    CHECK(r.status == SearchResult::Status::Exhausted);
    o.size_cap = 3;
    CHECK_THROWS_AS(search_equivalent(m, never, o), std::invalid_argument);
  }

  TEST_CASE("found traces replay through the move API") {
    SearchOptions o;
    o.size_cap = 7;
    Mosaic m = fixture("spun_trefoil_7");
    auto r = search_equivalent(m, [](const Mosaic& x) { return x.size() < 7; }, o);
    REQUIRE(r.status == SearchResult::Status::Found);
    CHECK(r.found->size() == 6);
    check_trace(m, r.trace);
    CHECK(r.trace.back().result == *r.found);
  }

  TEST_CASE("search results do not depend on the worker count") {
    Mosaic m = fixture("trefoil_5");
    auto goal = [](const Mosaic& x) { return x.size() < 5; };
    SearchOptions a;
    a.size_cap = 5;
    SearchOptions b = a;
    b.workers = 4;
    auto ra = search_equivalent(m, goal, a), rb = search_equivalent(m, goal, b);
    CHECK(ra.found == rb.found);
    CHECK(ra.explored == rb.explored);
    CHECK(ra.discovered == rb.discovered);
    REQUIRE(ra.trace.size() == rb.trace.size());
    for (std::size_t i = 0; i < ra.trace.size(); ++i) CHECK(ra.trace[i].move == rb.trace[i].move);
  }

  TEST_CASE("cropped successors respect the cap") {
    for (const auto& s : cropped_successors(fixture("trefoil_4"), 5, MoveCatalog::default_catalog())) {
      CHECK(s.size() <= 5);
      CHECK(crop(s) == s);
      CHECK(coloring_count(s, core_kei_cyclic(3)) == 9);
    }
  }

  TEST_CASE("minimize reaches the mosaic number of small examples") {
    auto t = minimize(fixture("trefoil_5"));
    CHECK(t.status == BoundResult::Status::Exact);
    CHECK(t.lower == 4);
    CHECK(t.upper == 4);
    check_trace(fixture("trefoil_5"), t.trace);

    auto torus = minimize(fixture("torus_5"));
    CHECK(torus.status == BoundResult::Status::Exact);
    CHECK(torus.upper == 4);
    CHECK(coloring_count(torus.witness, core_kei_cyclic(3)) == 3);

    auto circle = minimize(inject(inject(fixture("circle"))));
    CHECK(circle.status == BoundResult::Status::Exact);
    CHECK(circle.upper == 2);
  }

  TEST_CASE("minimize reports a bounded range when it cannot shrink") {
    MinimizeOptions o;
    o.node_budget = 50;
    o.known_ch = 10;
    auto r = minimize(fixture("spun_figure_eight_8"), o);
    CHECK(r.status == BoundResult::Status::Bounded);
    CHECK(r.lower == 6);
    CHECK(r.upper == 8);
  }

  TEST_CASE("spectrum estimate") {
    Mosaic m = fixture("trefoil_4");
    Kei k = core_kei_cyclic(3);
    auto est = spectrum_estimate(m, k, 3, 5, 0);
    REQUIRE(est.entries.size() == 3);
    CHECK_FALSE(est.entries[0].reachable);
    CHECK(est.entries[1].reachable);
    CHECK(est.entries[1].polynomial() == deficiency_polynomial(m, k));
    CHECK(est.entries[2].diagrams == 1);
    auto more = spectrum_estimate(m, k, 4, 4, 200);
    CHECK(more.entries[0].diagrams > 1);
    for (std::size_t i = 0; i < more.entries[0].deficiencies.size(); ++i)
      CHECK(more.entries[0].deficiencies[i] <= est.entries[1].deficiencies[i]);
  }
}
