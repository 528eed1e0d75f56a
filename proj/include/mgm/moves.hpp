#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgm/mosaic.hpp"

namespace mgm {

// A pattern entry: a concrete tile, or a non-deterministic slot that stands
// for one of two tiles. Slots sharing a label are synchronized: they resolve
// to the same option index everywhere in the rule (both sides).
struct PatternCell {
  bool is_slot = false;
  Tile tile;
  char label = 0;
  std::array<Tile, 2> options{};

  Tile resolve(int option) const { return is_slot ? options[option] : tile; }
  bool operator==(const PatternCell&) const = default;
};

struct RewriteRule {
  std::string name;
  int rows = 0;
  int cols = 0;
  std::vector<PatternCell> lhs;
  std::vector<PatternCell> rhs;

  // Distinct slot labels in ascending order.
  std::vector<char> labels() const;
  // Number of slot bindings (2^labels).
  int binding_count() const { return 1 << labels().size(); }
  // Bit b of `binding` selects the option for labels()[b].
  Mosaic lhs_for(std::uint32_t binding) const;
  Mosaic rhs_for(std::uint32_t binding) const;
  RewriteRule reversed(std::string new_name) const;
};

class CatalogError : public std::invalid_argument {
 public:
  enum class Kind {
    Syntax,
    DimensionMismatch,
    UnsynchronizedLabel,
    BoundaryMismatch,
    Disconnected,
    DuplicateName
  };
  CatalogError(Kind kind, std::string rule, int line, const std::string& what);
  Kind kind() const { return kind_; }
  const std::string& rule() const { return rule_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  std::string rule_;
  int line_;
};

// Parses and structurally validates rules (in file order). Format:
//   MOVE <name> / SIZE <p> <q> / LHS + p rows / RHS + p rows, rules separated
//   by blank lines; tokens are codes 0..12 or slots "<A-Z>:<a>|<b>".
std::vector<RewriteRule> load_catalog(std::string_view text);
std::string_view default_catalog_text();

// Text form of a rule in catalog syntax.
std::string format_rule(const RewriteRule& r);

struct MoveApplication {
  std::string rule;
  int row = 0;
  int col = 0;
  int rotation = 0;
  std::uint32_t binding = 0;

  auto operator<=>(const MoveApplication&) const = default;
  // "P3 @(1,2) rot=1 bind=A:0"
  std::string to_string(const std::vector<char>& labels) const;
};

// Compiled catalog: the loaded rules, a reverse for every rule, and every
// rotation/binding expanded into concrete tile patterns. Variants whose
// (lhs, rhs) pair repeats an earlier one, and no-op variants, are dropped.
class MoveCatalog {
 public:
  struct Variant {
    int rule = 0;  // index into rules()
    int rotation = 0;
    std::uint32_t binding = 0;
    Mosaic lhs;
    Mosaic rhs;
  };

  explicit MoveCatalog(std::vector<RewriteRule> rules);
  static const MoveCatalog& default_catalog();

  // Loaded rules followed by their reverses, named "<name>~". A reverse is
  // dropped when all of its variants repeat earlier ones.
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t loaded_rule_count() const { return loaded_; }
  const std::vector<Variant>& variants() const { return variants_; }
  const RewriteRule* find_rule(std::string_view name) const;
  const Variant* find_variant(std::string_view rule, int rotation, std::uint32_t binding) const;

  // Visits every (variant, row, col) whose lhs matches m at that position.
  void for_each_match(const Mosaic& m,
                      const std::function<void(const Variant&, int, int)>& visit) const;

 private:
  std::vector<RewriteRule> rules_;
  std::size_t loaded_ = 0;
  std::vector<Variant> variants_;
  // Variants bucketed by the codes of their first two lhs cells.
  std::vector<std::vector<int>> buckets_;
  std::vector<int> shapes_;
};

// Complete list of applications whose result differs from m, sorted by
// (rule name, row, col, rotation, binding).
std::vector<MoveApplication> applicable_moves(const Mosaic& m, const MoveCatalog& catalog);

// Throws std::invalid_argument when the application does not match m.
Mosaic apply(const Mosaic& m, const MoveApplication& a, const MoveCatalog& catalog);

// Writes variant v's rhs over m at (row, col). No matching check.
Mosaic apply_variant(const Mosaic& m, const MoveCatalog::Variant& v, int row, int col);

// One step of the move relation: every single move result, inject(m) when it
// fits within size_cap, and crop(m). Excludes m itself; sorted by
// serialization, no duplicates.
std::vector<Mosaic> neighbors(const Mosaic& m, int size_cap, const MoveCatalog& catalog);

}  // namespace mgm
