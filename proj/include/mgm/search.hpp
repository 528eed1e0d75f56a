#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgm/kei.hpp"
#include "mgm/mosaic.hpp"
#include "mgm/moves.hpp"
#include "mgm/search_equivalent.hpp"

namespace mgm {

// Every suitably connected n x n mosaic over tiles 0..10 (0..12 with
// allow_marked), in lexicographic order of row-major codes. Workers split the
// work by first row; the output does not depend on the worker count.
std::vector<Mosaic> enumerate(int n, bool allow_marked, int workers = 1);

// Lower bound on the mosaic number from the ch-index: crossings and marked
// vertices must sit on inner tiles, and ch >= 7 forces size 6 or more.
int lower_bound(int ch);

struct BoundResult {
  enum class Status { Exact, Bounded };
  int lower = 0;
  int upper = 0;
  Status status = Status::Bounded;
  Mosaic witness;
  std::string reason;
  std::vector<TraceStep> trace;  // from the (cropped) input to the witness
};

const char* to_string(BoundResult::Status s);

struct MinimizeOptions {
  int size_cap = 0;  // 0: the input's own size
  std::uint64_t node_budget = 100000;  // per shrinking round
  int workers = 1;
  // Minimal ch-index of the link type when known; otherwise the smallest
  // ch-index seen along the reduction is used.
  std::optional<int> known_ch;
};

// Repeatedly searches for an equivalent mosaic of smaller size.
BoundResult minimize(const Mosaic& m, const MinimizeOptions& options = {},
                     const MoveCatalog& catalog = MoveCatalog::default_catalog());

struct SpectrumEntry {
  int n = 0;
  bool reachable = false;
  // Ascending; entry i bounds the i-th smallest deficiency over colorings.
  std::vector<int> deficiencies;
  std::uint64_t diagrams = 0;  // n-mosaics examined
  DeficiencyPolynomial polynomial() const;
};

struct SpectrumEstimate {
  std::vector<SpectrumEntry> entries;
};

// Upper bounds on minimal deficiencies over move-equivalent n-mosaics, for
// n in [n_lo, n_hi]. Colorings are matched through moves only as sorted
// deficiency multisets.
SpectrumEstimate spectrum_estimate(const Mosaic& m, const Kei& k, int n_lo, int n_hi,
                                   std::uint64_t node_budget, int workers = 1,
                                   const MoveCatalog& catalog = MoveCatalog::default_catalog());

}  // namespace mgm
