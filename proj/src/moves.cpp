#include "mgm/moves.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mgm {

std::vector<char> RewriteRule::labels() const {
  std::set<char> ls;
  for (const auto* side : {&lhs, &rhs})
    for (const auto& c : *side)
      if (c.is_slot) ls.insert(c.label);
  return {ls.begin(), ls.end()};
}

namespace {

Mosaic resolve_side(const RewriteRule& r, const std::vector<PatternCell>& side,
                    std::uint32_t binding) {
  auto ls = r.labels();
  std::vector<Tile> cells;
  cells.reserve(side.size());
  for (const auto& c : side) {
    int option = 0;
    if (c.is_slot) {
      auto b = std::find(ls.begin(), ls.end(), c.label) - ls.begin();
      option = static_cast<int>((binding >> b) & 1u);
    }
    cells.push_back(c.resolve(option));
  }
  return Mosaic(r.rows, r.cols, std::move(cells));
}

// Connection points on the outer boundary, as (cell, edge) in row-major order.
std::vector<std::pair<int, Edge>> boundary_profile(const Mosaic& m) {
  std::vector<std::pair<int, Edge>> out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      EdgeSet pts = m.at(i, j).connection_points();
      int cell = i * m.cols() + j;
      if (i == 0 && pts.contains(Edge::T)) out.emplace_back(cell, Edge::T);
      if (j == m.cols() - 1 && pts.contains(Edge::R)) out.emplace_back(cell, Edge::R);
      if (i == m.rows() - 1 && pts.contains(Edge::B)) out.emplace_back(cell, Edge::B);
      if (j == 0 && pts.contains(Edge::L)) out.emplace_back(cell, Edge::L);
    }
  }
  return out;
}

bool interior_connected(const Mosaic& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      EdgeSet pts = m.at(i, j).connection_points();
      if (j + 1 < m.cols() &&
          pts.contains(Edge::R) != m.at(i, j + 1).connection_points().contains(Edge::L))
        return false;
      if (i + 1 < m.rows() &&
          pts.contains(Edge::B) != m.at(i + 1, j).connection_points().contains(Edge::T))
        return false;
    }
  }
  return true;
}

std::string token(const PatternCell& c) {
  if (!c.is_slot) return std::to_string(c.tile.code());
  return std::string(1, c.label) + ":" + std::to_string(c.options[0].code()) + "|" +
         std::to_string(c.options[1].code());
}

}  // namespace

Mosaic RewriteRule::lhs_for(std::uint32_t binding) const { return resolve_side(*this, lhs, binding); }
Mosaic RewriteRule::rhs_for(std::uint32_t binding) const { return resolve_side(*this, rhs, binding); }

RewriteRule RewriteRule::reversed(std::string new_name) const {
  RewriteRule r = *this;
  r.name = std::move(new_name);
  std::swap(r.lhs, r.rhs);
  return r;
}

CatalogError::CatalogError(Kind kind, std::string rule, int line, const std::string& what)
    : std::invalid_argument((rule.empty() ? std::string() : "rule " + rule + ": ") + "line " +
                            std::to_string(line) + ": " + what),
      kind_(kind),
      rule_(std::move(rule)),
      line_(line) {}

namespace {

struct RawRule {
  std::string name;
  int line = 0;
  int rows = -1, cols = -1;
  std::vector<std::vector<PatternCell>> lhs_rows, rhs_rows;
};

PatternCell parse_token(const std::string& tok, const std::string& rule, int line) {
  auto bad = [&] { return CatalogError(CatalogError::Kind::Syntax, rule, line, "bad token '" + tok + "'"); };
  auto code_of = [&](const std::string& s) {
    if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), ::isdigit)) throw bad();
    auto t = Tile::try_from_code(std::stoi(s));
    if (!t) throw bad();
    return *t;
  };
  PatternCell c;
  if (tok.size() >= 2 && tok[1] == ':') {
    if (tok[0] < 'A' || tok[0] > 'Z') throw bad();
    auto bar = tok.find('|');
    if (bar == std::string::npos) throw bad();
    c.is_slot = true;
    c.label = tok[0];
    c.options = {code_of(tok.substr(2, bar - 2)), code_of(tok.substr(bar + 1))};
  } else {
    c.tile = code_of(tok);
  }
  return c;
}

void check_rule(const RewriteRule& r, int line) {
  using K = CatalogError::Kind;
  for (const auto* side : {&r.lhs, &r.rhs}) {
    const auto* other = side == &r.lhs ? &r.rhs : &r.lhs;
    for (const auto& c : *side) {
      if (!c.is_slot) continue;
      bool both = std::any_of(other->begin(), other->end(),
                              [&](const PatternCell& o) { return o.is_slot && o.label == c.label; });
      if (!both)
        throw CatalogError(K::UnsynchronizedLabel, r.name, line,
                           std::string("slot label ") + c.label + " appears on one side only");
    }
  }
  for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(r.binding_count()); ++b) {
    Mosaic l = r.lhs_for(b), rr = r.rhs_for(b);
    if (!interior_connected(l) || !interior_connected(rr))
      throw CatalogError(K::Disconnected, r.name, line,
                         "pattern is not suitably connected inside (binding " + std::to_string(b) + ")");
    if (boundary_profile(l) != boundary_profile(rr))
      throw CatalogError(K::BoundaryMismatch, r.name, line,
                         "lhs and rhs boundary connection points differ (binding " +
                             std::to_string(b) + ")");
  }
}

}  // namespace

std::vector<RewriteRule> load_catalog(std::string_view text) {
  using K = CatalogError::Kind;
  std::vector<RawRule> raws;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  enum class Section { None, Lhs, Rhs } section = Section::None;
  RawRule* cur = nullptr;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) {
      section = Section::None;
      continue;
    }
    if (toks[0][0] == '#') continue;
    const std::string name = cur ? cur->name : std::string();
    if (toks[0] == "MOVE") {
      if (toks.size() != 2) throw CatalogError(K::Syntax, name, line_no, "MOVE takes one name");
      raws.push_back({toks[1], line_no, -1, -1, {}, {}});
      cur = &raws.back();
      section = Section::None;
    } else if (toks[0] == "SIZE") {
      if (!cur || toks.size() != 3) throw CatalogError(K::Syntax, name, line_no, "bad SIZE line");
      try {
        cur->rows = std::stoi(toks[1]);
        cur->cols = std::stoi(toks[2]);
      } catch (const std::exception&) {
        throw CatalogError(K::Syntax, name, line_no, "bad SIZE line");
      }
      if (cur->rows <= 0 || cur->cols <= 0)
        throw CatalogError(K::Syntax, name, line_no, "SIZE must be positive");
    } else if (toks[0] == "LHS" || toks[0] == "RHS") {
      if (!cur) throw CatalogError(K::Syntax, name, line_no, toks[0] + " outside a MOVE");
      section = toks[0] == "LHS" ? Section::Lhs : Section::Rhs;
    } else {
      if (!cur || section == Section::None)
        throw CatalogError(K::Syntax, name, line_no, "unexpected line '" + line + "'");
      std::vector<PatternCell> row;
      for (const auto& t : toks) row.push_back(parse_token(t, cur->name, line_no));
      (section == Section::Lhs ? cur->lhs_rows : cur->rhs_rows).push_back(std::move(row));
    }
  }

  std::vector<RewriteRule> rules;
  std::set<std::string> names;
  for (const auto& raw : raws) {
    if (!names.insert(raw.name).second)
      throw CatalogError(K::DuplicateName, raw.name, raw.line, "duplicate rule name");
    if (raw.rows < 0) throw CatalogError(K::Syntax, raw.name, raw.line, "missing SIZE");
    if (raw.lhs_rows.empty() || raw.rhs_rows.empty())
      throw CatalogError(K::Syntax, raw.name, raw.line, "missing LHS or RHS");
    RewriteRule r;
    r.name = raw.name;
    r.rows = raw.rows;
    r.cols = raw.cols;
    for (const auto* side : {&raw.lhs_rows, &raw.rhs_rows}) {
      if (static_cast<int>(side->size()) != raw.rows)
        throw CatalogError(K::DimensionMismatch, raw.name, raw.line,
                           "expected " + std::to_string(raw.rows) + " rows, found " +
                               std::to_string(side->size()));
      for (const auto& row : *side)
        if (static_cast<int>(row.size()) != raw.cols)
          throw CatalogError(K::DimensionMismatch, raw.name, raw.line,
                             "expected " + std::to_string(raw.cols) + " columns, found " +
                                 std::to_string(row.size()));
      auto& dst = side == &raw.lhs_rows ? r.lhs : r.rhs;
      for (const auto& row : *side) dst.insert(dst.end(), row.begin(), row.end());
    }
    check_rule(r, raw.line);
    rules.push_back(std::move(r));
  }
  return rules;
}

std::string format_rule(const RewriteRule& r) {
  std::ostringstream out;
  out << "MOVE " << r.name << "\nSIZE " << r.rows << " " << r.cols << "\n";
  for (const auto* side : {&r.lhs, &r.rhs}) {
    out << (side == &r.lhs ? "LHS\n" : "RHS\n");
    for (int i = 0; i < r.rows; ++i) {
      for (int j = 0; j < r.cols; ++j) {
        if (j > 0) out << ' ';
        out << token((*side)[i * r.cols + j]);
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string MoveApplication::to_string(const std::vector<char>& labels) const {
  std::ostringstream out;
  out << rule << " @(" << row << "," << col << ") rot=" << rotation;
  if (!labels.empty()) {
    out << " bind=";
    for (std::size_t b = 0; b < labels.size(); ++b) {
      if (b > 0) out << ',';
      out << labels[b] << ':' << ((binding >> b) & 1u);
    }
  }
  return out.str();
}

namespace {

constexpr int kBucketCodes = Tile::kCount;

int shape_key(int rows, int cols) { return rows * 16 + cols; }

int cell_key(const Mosaic& m, int i, int j, int cols) {
  int a = m.at(i, j).code();
  int b = cols > 1 ? m.at(i, j + 1).code() : m.at(i + 1, j).code();
  return a * kBucketCodes + b;
}

}  // namespace

MoveCatalog::MoveCatalog(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  loaded_ = rules_.size();
  for (std::size_t r = 0; r < loaded_; ++r) rules_.push_back(rules_[r].reversed(rules_[r].name + "~"));

  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const auto& rule = rules_[r];
    for (int rot = 0; rot < 4; ++rot) {
      for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(rule.binding_count()); ++b) {
        Mosaic l = rotated(rule.lhs_for(b), rot);
        Mosaic rr = rotated(rule.rhs_for(b), rot);
        if (l == rr) continue;
        if (!seen.insert({serialize(l), serialize(rr)}).second) continue;
        variants_.push_back({static_cast<int>(r), rot, b, std::move(l), std::move(rr)});
      }
    }
  }
  // Drop generated reverse rules that contribute nothing.
  std::vector<int> used(rules_.size(), 0);
  for (const auto& v : variants_) used[v.rule] = 1;
  std::vector<int> remap(rules_.size(), -1);
  std::vector<RewriteRule> kept;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    if (r >= loaded_ && !used[r]) continue;
    remap[r] = static_cast<int>(kept.size());
    kept.push_back(std::move(rules_[r]));
  }
  rules_ = std::move(kept);
  for (auto& v : variants_) v.rule = remap[v.rule];

  buckets_.assign(16 * 16 * kBucketCodes * kBucketCodes, {});
  for (std::size_t k = 0; k < variants_.size(); ++k) {
    const auto& l = variants_[k].lhs;
    if (l.rows() >= 16 || l.cols() >= 16 || l.rows() * l.cols() < 2)
      throw std::invalid_argument("pattern shape unsupported");
    int key = shape_key(l.rows(), l.cols()) * kBucketCodes * kBucketCodes + cell_key(l, 0, 0, l.cols());
    buckets_[key].push_back(static_cast<int>(k));
    int shape = shape_key(l.rows(), l.cols());
    if (std::find(shapes_.begin(), shapes_.end(), shape) == shapes_.end()) shapes_.push_back(shape);
  }
  std::sort(shapes_.begin(), shapes_.end());
}

const MoveCatalog& MoveCatalog::default_catalog() {
  static const MoveCatalog catalog(load_catalog(default_catalog_text()));
  return catalog;
}

const RewriteRule* MoveCatalog::find_rule(std::string_view name) const {
  for (const auto& r : rules_)
    if (r.name == name) return &r;
  return nullptr;
}

const MoveCatalog::Variant* MoveCatalog::find_variant(std::string_view rule, int rotation,
                                                      std::uint32_t binding) const {
  for (const auto& v : variants_)
    if (rules_[v.rule].name == rule && v.rotation == rotation && v.binding == binding) return &v;
  return nullptr;
}

void MoveCatalog::for_each_match(const Mosaic& m,
                                 const std::function<void(const Variant&, int, int)>& visit) const {
  for (int shape : shapes_) {
    int pr = shape / 16, pc = shape % 16;
    for (int i = 0; i + pr <= m.rows(); ++i) {
      for (int j = 0; j + pc <= m.cols(); ++j) {
        int key = shape * kBucketCodes * kBucketCodes + cell_key(m, i, j, pc);
        for (int k : buckets_[key]) {
          const auto& l = variants_[k].lhs;
          bool match = true;
          for (int a = 0; a < pr && match; ++a)
            for (int b = 0; b < pc && match; ++b) match = m.at(i + a, j + b) == l.at(a, b);
          if (match) visit(variants_[k], i, j);
        }
      }
    }
  }
}

Mosaic apply_variant(const Mosaic& m, const MoveCatalog::Variant& v, int row, int col) {
  Mosaic out = m;
  for (int a = 0; a < v.rhs.rows(); ++a)
    for (int b = 0; b < v.rhs.cols(); ++b) out.set(row + a, col + b, v.rhs.at(a, b));
  return out;
}

std::vector<MoveApplication> applicable_moves(const Mosaic& m, const MoveCatalog& catalog) {
  std::vector<MoveApplication> out;
  catalog.for_each_match(m, [&](const MoveCatalog::Variant& v, int i, int j) {
    out.push_back({catalog.rules()[v.rule].name, i, j, v.rotation, v.binding});
  });
  std::sort(out.begin(), out.end());
  return out;
}

Mosaic apply(const Mosaic& m, const MoveApplication& a, const MoveCatalog& catalog) {
  const auto* v = catalog.find_variant(a.rule, a.rotation, a.binding);
  if (!v) throw std::invalid_argument("no such move variant: " + a.rule);
  bool fits = a.row >= 0 && a.col >= 0 && a.row + v->lhs.rows() <= m.rows() &&
              a.col + v->lhs.cols() <= m.cols();
  bool match = fits;
  for (int i = 0; match && i < v->lhs.rows(); ++i)
    for (int j = 0; match && j < v->lhs.cols(); ++j) match = m.at(a.row + i, a.col + j) == v->lhs.at(i, j);
  if (!match)
    throw std::invalid_argument("move " + a.rule + " does not match at (" + std::to_string(a.row) +
                                "," + std::to_string(a.col) + ")");
  return apply_variant(m, *v, a.row, a.col);
}

std::vector<Mosaic> neighbors(const Mosaic& m, int size_cap, const MoveCatalog& catalog) {
  std::map<std::string, Mosaic> out;
  auto add = [&](Mosaic x) {
    if (x == m) return;
    auto key = serialize(x);
    out.emplace(std::move(key), std::move(x));
  };
  catalog.for_each_match(m, [&](const MoveCatalog::Variant& v, int i, int j) {
    add(apply_variant(m, v, i, j));
  });
  if (m.size() + 1 <= size_cap) add(inject(m));
  add(crop(m));
  std::vector<Mosaic> result;
  result.reserve(out.size());
  for (auto& [k, x] : out) result.push_back(std::move(x));
  return result;
}

}  // namespace mgm
