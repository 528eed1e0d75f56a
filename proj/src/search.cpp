#include "mgm/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

namespace mgm {

namespace {

class Enumerator {
 public:
  Enumerator(int n, bool allow_marked) : n_(n), cells_(static_cast<std::size_t>(n) * n) {
    const int last = allow_marked ? 12 : 10;
    for (int c = 0; c <= last; ++c) {
      Tile t = Tile::from_code(c);
      EdgeSet p = t.connection_points();
      for (int key = 0; key < 16; ++key) {
        bool need_t = key & 1, need_l = key & 2, allow_r = key & 4, allow_b = key & 8;
        if (p.contains(Edge::T) != need_t || p.contains(Edge::L) != need_l) continue;
        if (p.contains(Edge::R) && !allow_r) continue;
        if (p.contains(Edge::B) && !allow_b) continue;
        candidates_[key].push_back(t);
      }
    }
  }

  // Fills cells [from, to) in every consistent way, starting from `prefix`.
  template <typename Sink>
  void run(const std::vector<Tile>& prefix, int to, Sink&& sink) {
    std::copy(prefix.begin(), prefix.end(), cells_.begin());
    dfs(static_cast<int>(prefix.size()), to, sink);
  }

 private:
  template <typename Sink>
  void dfs(int pos, int to, Sink& sink) {
    if (pos == to) {
      sink(cells_, pos);
      return;
    }
    int i = pos / n_, j = pos % n_;
    bool need_t = i > 0 && cells_[pos - n_].connection_points().contains(Edge::B);
    bool need_l = j > 0 && cells_[pos - 1].connection_points().contains(Edge::R);
    bool allow_r = j < n_ - 1, allow_b = i < n_ - 1;
    int key = need_t | need_l << 1 | allow_r << 2 | allow_b << 3;
    for (Tile t : candidates_[key]) {
      cells_[pos] = t;
      dfs(pos + 1, to, sink);
    }
  }

  int n_;
  std::vector<Tile> cells_;
  std::array<std::vector<Tile>, 16> candidates_;
};

}  // namespace

std::vector<Mosaic> enumerate(int n, bool allow_marked, int workers) {
  if (n < 1) throw std::invalid_argument("mosaic size must be positive");
  std::vector<std::vector<Tile>> prefixes;
  {
    Enumerator e(n, allow_marked);
    e.run({}, n, [&](const std::vector<Tile>& cells, int len) {
      prefixes.emplace_back(cells.begin(), cells.begin() + len);
    });
  }
  std::vector<std::vector<Mosaic>> parts(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Enumerator e(n, allow_marked);
    for (std::size_t k; (k = next.fetch_add(1)) < prefixes.size();) {
      e.run(prefixes[k], n * n, [&](const std::vector<Tile>& cells, int) {
        parts[k].emplace_back(n, n, cells);
      });
    }
  };
  workers = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<Mosaic> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

int lower_bound(int ch) {
  if (ch < 0) throw std::invalid_argument("ch-index must be non-negative");
  if (ch == 0) return 2;
  int n = 3;
  while ((n - 2) * (n - 2) < ch) ++n;
  if (ch >= 7) n = std::max(n, 6);
  return n;
}

const char* to_string(BoundResult::Status s) {
  return s == BoundResult::Status::Exact ? "exact" : "bounded";
}

BoundResult minimize(const Mosaic& m, const MinimizeOptions& options, const MoveCatalog& catalog) {
  BoundResult out;
  Mosaic cur = crop(m);
  int min_ch = ch_index(cur);
  out.upper = cur.size();
  for (;;) {
    SearchOptions so;
    so.size_cap = std::max(options.size_cap, out.upper);
    so.node_budget = options.node_budget;
    so.workers = options.workers;
    const int target = out.upper;
    auto r = search_equivalent(cur, [target](const Mosaic& x) { return x.size() < target; }, so, catalog);
    if (r.status != SearchResult::Status::Found) break;
    for (const auto& s : r.trace) min_ch = std::min(min_ch, ch_index(s.result));
    out.trace.insert(out.trace.end(), r.trace.begin(), r.trace.end());
    cur = *r.found;
    out.upper = cur.size();
  }
  out.witness = cur;

  const int ch = options.known_ch.value_or(min_ch);
  out.lower = lower_bound(ch);
  out.reason = "inner-tile bound from ch=" + std::to_string(ch);
  if (ch >= 7) out.reason += " with the ch>=7 bound";
  if (!options.known_ch) out.reason += " (smallest ch seen)";
  if (out.lower > out.upper) {
    // The observed ch-index was not minimal for the link type.
    out.reason += "; bound exceeds a realized size, so ch was not minimal; using the realized size";
    out.lower = out.upper;
  }
  out.status = out.lower == out.upper ? BoundResult::Status::Exact : BoundResult::Status::Bounded;
  return out;
}

DeficiencyPolynomial SpectrumEntry::polynomial() const {
  DeficiencyPolynomial p;
  for (int d : deficiencies) p.add(d);
  return p;
}

namespace {

std::vector<int> sorted_deficiencies(const Mosaic& m, const Kei& k) {
  std::vector<int> ds;
  for (const auto& c : colorings(m, k)) ds.push_back(deficiency(c, k));
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

SpectrumEstimate spectrum_estimate(const Mosaic& m, const Kei& k, int n_lo, int n_hi,
                                   std::uint64_t node_budget, int workers, const MoveCatalog& catalog) {
  SpectrumEstimate est;
  const Mosaic start = crop(m);
  for (int n = n_lo; n <= n_hi; ++n) {
    SpectrumEntry e;
    e.n = n;
    auto visit = [&](const Mosaic& x) {
      if (x.size() > n) return false;
      auto ds = sorted_deficiencies(x, k);
      if (!e.reachable) {
        e.deficiencies = std::move(ds);
        e.reachable = true;
      } else {
        for (std::size_t i = 0; i < ds.size() && i < e.deficiencies.size(); ++i)
          e.deficiencies[i] = std::min(e.deficiencies[i], ds[i]);
      }
      ++e.diagrams;
      return false;
    };
    // The visitor never accepts, so the search walks the whole budget.
    SearchOptions so;
    so.size_cap = std::max(n, start.size());
    so.node_budget = node_budget;
    so.workers = workers;
    search_equivalent(start, visit, so, catalog);
    est.entries.push_back(std::move(e));
  }
  return est;
}

}  // namespace mgm
