#include "mgm/resolutions.hpp"

#include <sstream>

namespace mgm {

char sign_char(Direction d) { return d == Direction::Plus ? '+' : '-'; }

Mosaic splice(const Mosaic& m, Direction d) {
  const Tile t7 = Tile::from_code(7), t8 = Tile::from_code(8);
  Mosaic out = m;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      int c = m.at(i, j).code();
      if (c == 11) out.set(i, j, d == Direction::Plus ? t8 : t7);
      if (c == 12) out.set(i, j, d == Direction::Plus ? t7 : t8);
    }
  }
  return out;
}

const char* to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "yes";
    case Truth::No: return "no";
    case Truth::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

TriState is_trivial_unlink(const Mosaic& m, const TrivialityOptions& options,
                           const MoveCatalog& catalog) {
  if (marked_count(m) > 0)
    throw std::invalid_argument("triviality check needs a diagram without marked vertices");
  const int comps = component_count(m);
  if (crossing_count(m) == 0)
    return {Truth::Yes, "crossingless diagram of " + std::to_string(comps) + " circle(s)"};

  std::vector<Kei> family = options.certificates;
  if (family.empty())
    for (int n : {3, 5, 7}) family.push_back(core_kei_cyclic(n));
  for (const auto& k : family) {
    std::uint64_t count = coloring_count(m, k);
    std::uint64_t trivial = power(k.size(), comps);
    if (count > trivial) {
      std::ostringstream ev;
      ev << k.name() << " gives " << count << " colorings > " << k.size() << "^" << comps;
      return {Truth::No, ev.str()};
    }
  }

  SearchOptions so;
  so.size_cap = crop(m).size() + options.size_slack;
  so.node_budget = options.node_budget;
  so.workers = options.workers;
  so.order = SearchOrder::Simplest;
  auto r = search_equivalent(m, [](const Mosaic& x) { return crossing_count(x) == 0; }, so, catalog);
  if (r.status == SearchResult::Status::Found) {
    std::ostringstream ev;
    ev << "crossingless after " << r.trace.size() << " moves:";
    for (const auto& s : r.trace) ev << " " << s.to_string(catalog) << ";";
    return {Truth::Yes, ev.str()};
  }
  std::ostringstream ev;
  ev << "search " << to_string(r.status) << " after " << r.explored << " nodes (cap "
     << so.size_cap << ")";
  return {Truth::Unknown, ev.str()};
}

TriState is_admissible(const Mosaic& m, const TrivialityOptions& options, const MoveCatalog& catalog) {
  TriState plus = is_trivial_unlink(splice(m, Direction::Plus), options, catalog);
  TriState minus = is_trivial_unlink(splice(m, Direction::Minus), options, catalog);
  std::string ev = "L+: " + std::string(to_string(plus.value)) + " (" + plus.evidence + "); L-: " +
                   to_string(minus.value) + " (" + minus.evidence + ")";
  Truth v = Truth::Yes;
  if (plus.value == Truth::No || minus.value == Truth::No)
    v = Truth::No;
  else if (plus.value == Truth::Unknown || minus.value == Truth::Unknown)
    v = Truth::Unknown;
  return {v, ev};
}

}  // namespace mgm
