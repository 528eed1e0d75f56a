#include "mgm/search_equivalent.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>
#include <string_view>
#include <thread>
#include <tuple>

namespace mgm {

namespace {

// Nodes expanded per round; fixed so results do not depend on worker count.
constexpr std::size_t kBatch = 64;

// Shape bytes followed by tile codes packed two per byte.
std::string compact_key(const Mosaic& m) {
  auto cells = m.cells();
  std::string k(2 + (cells.size() + 1) / 2, '\0');
  k[0] = static_cast<char>(m.rows());
  k[1] = static_cast<char>(m.cols());
  for (std::size_t i = 0; i < cells.size(); ++i)
    k[2 + i / 2] |= static_cast<char>(cells[i].code() << (i % 2 ? 4 : 0));
  return k;
}

std::size_t key_length(const char* p) {
  return 2 + (static_cast<std::size_t>(p[0]) * static_cast<unsigned char>(p[1]) + 1) / 2;
}

Mosaic decode_key(std::string_view k) {
  const int rows = k[0], cols = k[1];
  std::vector<Tile> cells(static_cast<std::size_t>(rows) * cols);
  for (std::size_t i = 0; i < cells.size(); ++i)
    cells[i] = Tile::from_code((static_cast<unsigned char>(k[2 + i / 2]) >> (i % 2 ? 4 : 0)) & 15);
  return Mosaic(rows, cols, std::move(cells));
}

// Offsets at which a cropped extent of `len` sits inside its padded frame.
std::pair<int, std::vector<int>> frame_for(int len, int cap) {
  if (len + 2 <= cap) return {len + 2, {1}};
  if (len + 1 == cap) return {len + 1, {0, 1}};
  return {len, {0}};
}

// A move in compact form: variant index plus placement.
struct Step {
  std::int32_t variant = -1;
  std::int8_t row = 0, col = 0, frame_rows = 0, frame_cols = 0, top = 0, left = 0;

  auto tie() const { return std::tie(top, left, variant, row, col); }
};

struct Successor {
  std::string key;
  Mosaic mosaic;
  Step step;
};

std::vector<Successor> expand(const Mosaic& m, int cap, const MoveCatalog& catalog) {
  std::vector<Successor> out;
  const auto* base = catalog.variants().data();
  auto [frows, tops] = frame_for(m.rows(), cap);
  auto [fcols, lefts] = frame_for(m.cols(), cap);
  for (int top : tops) {
    for (int left : lefts) {
      Mosaic padded = embed(m, frows, fcols, top, left);
      catalog.for_each_match(padded, [&](const MoveCatalog::Variant& v, int i, int j) {
        Mosaic next = crop(apply_variant(padded, v, i, j));
        if (next == m) return;
        Step step{static_cast<std::int32_t>(&v - base),
                  static_cast<std::int8_t>(i),
                  static_cast<std::int8_t>(j),
                  static_cast<std::int8_t>(frows),
                  static_cast<std::int8_t>(fcols),
                  static_cast<std::int8_t>(top),
                  static_cast<std::int8_t>(left)};
        out.push_back({compact_key(next), std::move(next), step});
      });
    }
  }
  // First occurrence per key in a canonical order.
  std::sort(out.begin(), out.end(), [](const Successor& a, const Successor& b) {
    return a.key < b.key || (a.key == b.key && a.step.tie() < b.step.tie());
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Successor& a, const Successor& b) { return a.key == b.key; }),
            out.end());
  return out;
}

TraceStep to_trace_step(const Step& s, const MoveCatalog& catalog) {
  const auto& v = catalog.variants()[s.variant];
  return {{catalog.rules()[v.rule].name, s.row, s.col, v.rotation, v.binding},
          s.frame_rows,
          s.frame_cols,
          s.top,
          s.left,
          {}};
}

struct Node {
  std::uint64_t offset;  // key position in the arena
  std::int32_t parent;
  Step step;
};

// Discovered states: keys stored back to back in one arena, indexed by an
// open-addressing table of node numbers.
class StateStore {
 public:
  StateStore() : slots_(1024, -1) {}

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::string_view key(std::size_t i) const {
    const char* p = arena_.data() + nodes_[i].offset;
    return {p, key_length(p)};
  }

  // Adds the key unless present; returns whether it was new.
  bool insert(const std::string& k, std::int32_t parent, const Step& step) {
    if (2 * (nodes_.size() + 1) > slots_.size()) grow();
    std::size_t s = probe(k);
    if (slots_[s] >= 0) return false;
    slots_[s] = static_cast<std::int32_t>(nodes_.size());
    nodes_.push_back({arena_.size(), parent, step});
    arena_.append(k);
    return true;
  }

 private:
  std::size_t probe(std::string_view k) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = std::hash<std::string_view>{}(k) & mask;
    while (slots_[s] >= 0 && key(slots_[s]) != k) s = (s + 1) & mask;
    return s;
  }

  void grow() {
    std::vector<std::int32_t> old(slots_.size() * 2, -1);
    old.swap(slots_);
    for (std::int32_t idx : old)
      if (idx >= 0) slots_[probe(key(idx))] = idx;
  }

  std::string arena_;
  std::vector<Node> nodes_;
  std::vector<std::int32_t> slots_;
};

}  // namespace

std::string TraceStep::to_string(const MoveCatalog& catalog) const {
  std::vector<char> labels;
  if (const auto* r = catalog.find_rule(move.rule)) labels = r->labels();
  std::ostringstream out;
  out << move.to_string(labels) << " frame=" << frame_rows << "x" << frame_cols << "+" << top << ","
      << left;
  return out.str();
}

const char* to_string(SearchResult::Status s) {
  switch (s) {
    case SearchResult::Status::Found: return "found";
    case SearchResult::Status::Exhausted: return "exhausted";
    case SearchResult::Status::BudgetHit: return "budget_hit";
  }
  return "?";
}

std::vector<Mosaic> cropped_successors(const Mosaic& m, int size_cap, const MoveCatalog& catalog) {
  std::vector<Mosaic> out;
  for (auto& s : expand(crop(m), size_cap, catalog)) out.push_back(std::move(s.mosaic));
  std::sort(out.begin(), out.end(),
            [](const Mosaic& a, const Mosaic& b) { return serialize(a) < serialize(b); });
  return out;
}

SearchResult search_equivalent(const Mosaic& m, const Goal& goal, const SearchOptions& options,
                               const MoveCatalog& catalog) {
  const Mosaic start = crop(m);
  if (start.size() > options.size_cap)
    throw std::invalid_argument("size cap " + std::to_string(options.size_cap) +
                                " is below the mosaic size " + std::to_string(start.size()));

  SearchResult result;
  StateStore store;
  store.insert(compact_key(start), -1, {});
  result.discovered = 1;

  auto finish = [&](std::size_t idx, const Mosaic& found) {
    result.status = SearchResult::Status::Found;
    result.found = found;
    for (std::size_t k = idx; store.node(k).parent >= 0; k = store.node(k).parent) {
      result.trace.push_back(to_trace_step(store.node(k).step, catalog));
      result.trace.back().result = decode_key(store.key(k));
    }
    std::reverse(result.trace.begin(), result.trace.end());
    return result;
  };
  if (goal(start)) return finish(0, start);

  // Frontier ordering. Breadth: FIFO. Simplest: (ch, size, discovery index).
  std::deque<std::int32_t> fifo;
  using Rank = std::tuple<int, int, std::int32_t>;
  std::priority_queue<Rank, std::vector<Rank>, std::greater<>> heap;
  auto push = [&](std::int32_t idx, const Mosaic& x) {
    if (options.order == SearchOrder::Breadth)
      fifo.push_back(idx);
    else
      heap.emplace(ch_index(x), x.size(), idx);
  };
  auto frontier_empty = [&] { return options.order == SearchOrder::Breadth ? fifo.empty() : heap.empty(); };
  auto pop = [&] {
    std::int32_t idx;
    if (options.order == SearchOrder::Breadth) {
      idx = fifo.front();
      fifo.pop_front();
    } else {
      idx = std::get<2>(heap.top());
      heap.pop();
    }
    return idx;
  };
  push(0, start);

  const int workers = std::max(1, options.workers);
  while (!frontier_empty()) {
    if (result.explored >= options.node_budget) {
      result.status = SearchResult::Status::BudgetHit;
      return result;
    }
    std::vector<std::int32_t> batch;
    while (!frontier_empty() && batch.size() < kBatch &&
           result.explored + batch.size() < options.node_budget)
      batch.push_back(pop());
    result.explored += batch.size();

    std::vector<std::vector<Successor>> produced(batch.size());
    auto work = [&](int w) {
      for (std::size_t b = w; b < batch.size(); b += workers)
        produced[b] = expand(decode_key(store.key(batch[b])), options.size_cap, catalog);
    };
    if (workers == 1 || batch.size() == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
      work(0);
      for (auto& t : pool) t.join();
    }

    for (std::size_t b = 0; b < batch.size(); ++b) {
      for (auto& s : produced[b]) {
        if (!store.insert(s.key, batch[b], s.step)) continue;
        ++result.discovered;
        const std::size_t idx = store.size() - 1;
        if (goal(s.mosaic)) return finish(idx, s.mosaic);
        push(static_cast<std::int32_t>(idx), s.mosaic);
      }
    }
  }
  result.status = SearchResult::Status::Exhausted;
  return result;
}

}  // namespace mgm
