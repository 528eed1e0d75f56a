#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgm/mosaic.hpp"
#include "mgm/strands.hpp"

namespace mgm {

using Element = std::uint16_t;

// Finite kei (involutory quandle): x*x = x, (x*y)*y = x,
// (x*y)*z = (x*z)*(y*z). Construct through validate_kei or core_kei.
class Kei {
 public:
  int size() const { return size_; }
  Element op(Element x, Element y) const { return table_[static_cast<std::size_t>(x) * size_ + y]; }
  const std::vector<Element>& table() const { return table_; }
  const std::string& name() const { return name_; }

  bool operator==(const Kei& other) const { return size_ == other.size_ && table_ == other.table_; }

 private:
  friend Kei validate_kei(const std::vector<std::vector<int>>& table, std::string name);
  Kei(int size, std::vector<Element> table, std::string name)
      : size_(size), table_(std::move(table)), name_(std::move(name)) {}

  int size_;
  std::vector<Element> table_;
  std::string name_;
};

class KeiError : public std::invalid_argument {
 public:
  enum class Kind { NotSquare, OutOfRange, Idempotence, Involution, Distributivity, NotAGroup };

  KeiError(Kind kind, std::vector<int> witness, const std::string& what)
      : std::invalid_argument(what), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const { return kind_; }
  // Elements exhibiting the violation: (x), (x,y) or (x,y,z).
  const std::vector<int>& witness() const { return witness_; }

 private:
  Kind kind_;
  std::vector<int> witness_;
};

// Checks shape and the three axioms in order; the reported witness is the
// lexicographically first violation of the first failing axiom.
Kei validate_kei(const std::vector<std::vector<int>>& table, std::string name = {});

// x*y = y x^-1 y over a finite group given by its multiplication table.
Kei core_kei(const std::vector<std::vector<int>>& group_table, std::string name = {});
// Core kei of Z_n: x*y = 2y - x mod n.
Kei core_kei_cyclic(int n);

// File format: first line k, then k rows of k entries (row x holds x*y).
Kei parse_kei(std::string_view text);
// "core-cyclic:<n>" or a path to a table file.
Kei load_kei_spec(const std::string& spec);

// Smallest subset containing `seed` closed under the operation; sorted.
std::vector<Element> subkei_generated(const Kei& k, const std::vector<Element>& seed);

// Arc colours indexed by arc id of trace(m).
struct Coloring {
  std::vector<Element> arc_colors;
  auto operator<=>(const Coloring&) const = default;
};

// All colourings of a suitably connected mosaic, in lexicographic order of
// arc colours. Crossing condition: under_b = under_a * over. At a marked
// vertex all incident arcs share one colour.
std::vector<Coloring> colorings(const Mosaic& m, const Kei& k);
std::vector<Coloring> colorings(const StrandStructure& s, const Kei& k);
std::uint64_t coloring_count(const Mosaic& m, const Kei& k);

// |generated subkei of the colours used| - |colours used|.
int deficiency(const Coloring& c, const Kei& k);

// Sum over colourings of u^deficiency, stored as coefficient by exponent.
class DeficiencyPolynomial {
 public:
  DeficiencyPolynomial() = default;
  explicit DeficiencyPolynomial(std::vector<std::uint64_t> coefficients);

  void add(int exponent, std::uint64_t count = 1);
  std::uint64_t coefficient(int exponent) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint64_t total() const;
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }

  // "5 + 20 u", "3 + u^2"; "0" when empty.
  std::string to_string() const;

  bool operator==(const DeficiencyPolynomial&) const = default;

 private:
  void trim();
  std::vector<std::uint64_t> coeffs_;
};

DeficiencyPolynomial deficiency_polynomial(const Mosaic& m, const Kei& k);
DeficiencyPolynomial deficiency_polynomial(const std::vector<Coloring>& cs, const Kei& k);

// Constant terms first, then linear, and so on.
std::strong_ordering compare_lex(const DeficiencyPolynomial& p, const DeficiencyPolynomial& q);

}  // namespace mgm
