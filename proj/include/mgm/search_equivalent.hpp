#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mgm/mosaic.hpp"
#include "mgm/moves.hpp"

namespace mgm {

enum class SearchOrder {
  Breadth,
  // Fewest crossings and marked vertices first, then smallest size, then
  // discovery order. Useful when the goal is a simpler diagram.
  Simplest,
};

struct SearchOptions {
  int size_cap = 6;
  std::uint64_t node_budget = 100000;  // nodes expanded
  int workers = 1;
  SearchOrder order = SearchOrder::Breadth;
};

// One rewrite on the path from the start to the found mosaic. The previous
// (cropped) mosaic is placed at (top, left) inside an empty frame_rows x
// frame_cols grid, the move is applied there, and the result is cropped.
struct TraceStep {
  MoveApplication move;
  int frame_rows = 0;
  int frame_cols = 0;
  int top = 0;
  int left = 0;
  Mosaic result;

  std::string to_string(const MoveCatalog& catalog) const;
};

struct SearchResult {
  enum class Status { Found, Exhausted, BudgetHit };
  Status status = Status::Exhausted;
  std::optional<Mosaic> found;
  std::vector<TraceStep> trace;
  std::uint64_t explored = 0;  // nodes expanded
  std::uint64_t discovered = 0;
};

const char* to_string(SearchResult::Status s);

using Goal = std::function<bool(const Mosaic&)>;

// Search over mosaics reachable from m by catalog moves, without ever
// exceeding size_cap x size_cap. States are cropped mosaics. Deterministic
// for fixed options; the worker count does not change the result.
// `Exhausted` only means nothing satisfying the goal exists within the cap.
SearchResult search_equivalent(const Mosaic& m, const Goal& goal, const SearchOptions& options,
                               const MoveCatalog& catalog = MoveCatalog::default_catalog());

// Cropped one-step successors of a cropped mosaic within the cap, sorted by
// serialization. Exposed for testing.
std::vector<Mosaic> cropped_successors(const Mosaic& m, int size_cap, const MoveCatalog& catalog);

}  // namespace mgm
