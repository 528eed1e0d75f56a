#include "mgm/kei.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "mgm/detail/disjoint_set.hpp"

namespace mgm {

namespace {

std::string triple(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

Kei validate_kei(const std::vector<std::vector<int>>& table, std::string name) {
  const int k = static_cast<int>(table.size());
  if (k == 0) throw KeiError(KeiError::Kind::NotSquare, {}, "kei table is empty");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != k)
      throw KeiError(KeiError::Kind::NotSquare, {}, "kei table is not square");
  std::vector<Element> flat;
  flat.reserve(static_cast<std::size_t>(k) * k);
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      int v = table[x][y];
      if (v < 0 || v >= k)
        throw KeiError(KeiError::Kind::OutOfRange, {x, y},
                       "entry " + triple({x, y}) + " = " + std::to_string(v) + " out of range");
      flat.push_back(static_cast<Element>(v));
    }
  }
  auto op = [&](int x, int y) { return static_cast<int>(flat[static_cast<std::size_t>(x) * k + y]); };
  for (int x = 0; x < k; ++x)
    if (op(x, x) != x)
      throw KeiError(KeiError::Kind::Idempotence, {x},
                     "idempotence fails at x=" + std::to_string(x));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (op(op(x, y), y) != x)
        throw KeiError(KeiError::Kind::Involution, {x, y},
                       "involution fails at " + triple({x, y}));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      for (int z = 0; z < k; ++z)
        if (op(op(x, y), z) != op(op(x, z), op(y, z)))
          throw KeiError(KeiError::Kind::Distributivity, {x, y, z},
                         "right self-distributivity fails at " + triple({x, y, z}));
  return Kei(k, std::move(flat), std::move(name));
}

Kei core_kei(const std::vector<std::vector<int>>& g, std::string name) {
  const int n = static_cast<int>(g.size());
  auto not_group = [](const std::string& why) {
    return KeiError(KeiError::Kind::NotAGroup, {}, "not a group: " + why);
  };
  if (n == 0) throw not_group("empty table");
  for (const auto& row : g) {
    if (static_cast<int>(row.size()) != n) throw not_group("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw not_group("entry out of range");
  }
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g[c][x] == x && g[x][c] == x;
    if (ok) e = c;
  }
  if (e < 0) throw not_group("no identity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g[g[x][y]][z] != g[x][g[y][z]]) throw not_group("not associative");
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g[x][y] == e && g[y][x] == e) inv[x] = y;
    if (inv[x] < 0) throw not_group("element " + std::to_string(x) + " has no inverse");
  }
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = g[g[y][inv[x]]][y];
  return validate_kei(t, std::move(name));
}

Kei core_kei_cyclic(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n;
  return validate_kei(t, "core-cyclic:" + std::to_string(n));
}

Kei parse_kei(std::string_view text) {
  std::istringstream in{std::string(text)};
  int k = 0;
  if (!(in >> k) || k <= 0) throw KeiError(KeiError::Kind::NotSquare, {}, "missing kei size");
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (!(in >> t[x][y]))
        throw KeiError(KeiError::Kind::NotSquare, {x, y}, "kei table is truncated");
  return validate_kei(t);
}

Kei load_kei_spec(const std::string& spec) {
  const std::string prefix = "core-cyclic:";
  if (spec.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    int n = std::stoi(spec.substr(prefix.size()), &used);
    if (used != spec.size() - prefix.size()) throw std::invalid_argument("bad kei spec " + spec);
    return core_kei_cyclic(n);
  }
  std::ifstream f(spec);
  if (!f) throw std::runtime_error("cannot open kei file " + spec);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_kei(buf.str());
}

std::vector<Element> subkei_generated(const Kei& k, const std::vector<Element>& seed) {
  std::vector<char> in(k.size(), 0);
  std::vector<Element> members;
  for (Element x : seed) {
    if (x >= k.size()) throw std::out_of_range("seed element outside kei");
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  // Each new member is combined with every member (both argument orders).
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Element v : {k.op(members[i], members[j]), k.op(members[j], members[i])}) {
        if (!in[v]) {
          in[v] = 1;
          members.push_back(v);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

namespace {

// Backtracking over arc classes (arcs merged at marked vertices).
class ColoringSolver {
 public:
  ColoringSolver(const StrandStructure& s, const Kei& k) : s_(s), k_(k) {
    const int n = static_cast<int>(s.arcs.size());
    detail::DisjointSet ds(n);
    for (const auto& v : s.vertices)
      for (int a : v.arcs) ds.unite(v.arcs[0], a);
    cls_of_arc_.assign(n, -1);
    std::vector<int> cls_of_root(n, -1);
    for (int a = 0; a < n; ++a) {
      int r = ds.find(a);
      if (cls_of_root[r] < 0) cls_of_root[r] = classes_++;
      cls_of_arc_[a] = cls_of_root[r];
    }
    watch_.resize(classes_);
    for (std::size_t c = 0; c < s.crossings.size(); ++c) {
      const auto& x = s.crossings[c];
      cons_.push_back({cls_of_arc_[x.under_a], cls_of_arc_[x.over], cls_of_arc_[x.under_b]});
      for (int v : {cons_.back()[0], cons_.back()[1], cons_.back()[2]}) watch_[v].push_back(c);
    }
    value_.assign(classes_, -1);
  }

  void run(const std::function<void(const std::vector<int>&)>& emit) {
    emit_ = &emit;
    search(0);
  }

  const std::vector<int>& class_of_arc() const { return cls_of_arc_; }

 private:
  // Assigns and propagates; returns false on conflict. Trail records changes.
  bool assign(int cls, int v, std::vector<int>& trail) {
    std::vector<int> queue{cls};
    value_[cls] = v;
    trail.push_back(cls);
    while (!queue.empty()) {
      int c = queue.back();
      queue.pop_back();
      for (std::size_t ci : watch_[c]) {
        auto [ua, o, ub] = cons_[ci];
        if (value_[o] < 0) continue;
        auto force = [&](int target, int source) {
          int want = k_.op(static_cast<Element>(value_[source]), static_cast<Element>(value_[o]));
          if (value_[target] < 0) {
            value_[target] = want;
            trail.push_back(target);
            queue.push_back(target);
            return true;
          }
          return value_[target] == want;
        };
        if (value_[ua] >= 0) {
          if (!force(ub, ua)) return false;
        } else if (value_[ub] >= 0) {
          if (!force(ua, ub)) return false;
        }
      }
    }
    return true;
  }

  void search(int next) {
    while (next < classes_ && value_[next] >= 0) ++next;
    if (next == classes_) {
      (*emit_)(value_);
      return;
    }
    for (int v = 0; v < k_.size(); ++v) {
      std::vector<int> trail;
      if (assign(next, v, trail)) search(next + 1);
      for (int c : trail) value_[c] = -1;
    }
  }

  const StrandStructure& s_;
  const Kei& k_;
  int classes_ = 0;
  std::vector<int> cls_of_arc_;
  std::vector<std::array<int, 3>> cons_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<int> value_;
  const std::function<void(const std::vector<int>&)>* emit_ = nullptr;
};

}  // namespace

std::vector<Coloring> colorings(const StrandStructure& s, const Kei& k) {
  ColoringSolver solver(s, k);
  std::vector<Coloring> out;
  const auto& cls = solver.class_of_arc();
  solver.run([&](const std::vector<int>& values) {
    Coloring c;
    c.arc_colors.reserve(cls.size());
    for (int a : cls) c.arc_colors.push_back(static_cast<Element>(values[a]));
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coloring> colorings(const Mosaic& m, const Kei& k) { return colorings(trace(m), k); }

std::uint64_t coloring_count(const Mosaic& m, const Kei& k) {
  StrandStructure s = trace(m);
  ColoringSolver solver(s, k);
  std::uint64_t n = 0;
  solver.run([&](const std::vector<int>&) { ++n; });
  return n;
}

int deficiency(const Coloring& c, const Kei& k) {
  std::vector<Element> used = c.arc_colors;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  return static_cast<int>(subkei_generated(k, used).size() - used.size());
}

DeficiencyPolynomial::DeficiencyPolynomial(std::vector<std::uint64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void DeficiencyPolynomial::add(int exponent, std::uint64_t count) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (static_cast<int>(coeffs_.size()) <= exponent) coeffs_.resize(exponent + 1, 0);
  coeffs_[exponent] += count;
  trim();
}

std::uint64_t DeficiencyPolynomial::coefficient(int exponent) const {
  return exponent >= 0 && exponent < static_cast<int>(coeffs_.size()) ? coeffs_[exponent] : 0;
}

std::uint64_t DeficiencyPolynomial::total() const {
  std::uint64_t t = 0;
  for (auto c : coeffs_) t += c;
  return t;
}

void DeficiencyPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string DeficiencyPolynomial::to_string() const {
  std::string out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string power = e == 1 ? "u" : "u^" + std::to_string(e);
    if (e == 0)
      out += std::to_string(coeffs_[e]);
    else if (coeffs_[e] == 1)
      out += power;
    else
      out += std::to_string(coeffs_[e]) + " " + power;
  }
  return out.empty() ? "0" : out;
}

DeficiencyPolynomial deficiency_polynomial(const std::vector<Coloring>& cs, const Kei& k) {
  DeficiencyPolynomial p;
  for (const auto& c : cs) p.add(deficiency(c, k));
  return p;
}

DeficiencyPolynomial deficiency_polynomial(const Mosaic& m, const Kei& k) {
  return deficiency_polynomial(colorings(m, k), k);
}

std::strong_ordering compare_lex(const DeficiencyPolynomial& p, const DeficiencyPolynomial& q) {
  int top = std::max(p.degree(), q.degree());
  for (int e = 0; e <= top; ++e) {
    if (auto c = p.coefficient(e) <=> q.coefficient(e); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace mgm
