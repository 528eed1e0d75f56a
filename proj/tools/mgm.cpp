// Command-line front end for the mosaic library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "mgm/kei.hpp"
#include "mgm/mosaic.hpp"
#include "mgm/moves.hpp"
#include "mgm/render.hpp"
#include "mgm/resolutions.hpp"
#include "mgm/search.hpp"
#include "mgm/search_equivalent.hpp"
#include "mgm/strands.hpp"

namespace {

using namespace mgm;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string kei = "core-cyclic:3";
  std::string catalog_path;
  std::string format = "human";
  std::string out_path;
  std::string style = "ascii";
  std::string n_range;
  std::string sign;
  std::uint64_t budget = 200000;
  std::uint64_t node_budget = 100000;
  int size_cap = 0;
  int workers = 1;
  int n = 0;
  bool marked = false;
};

struct Outcome {
  int status = 0;
  std::string text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mosaic load_mosaic(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_mosaic(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.what());
  }
}

const MoveCatalog& catalog_for(const Options& o) {
  if (o.catalog_path.empty()) return MoveCatalog::default_catalog();
  static std::map<std::string, MoveCatalog> cache;
  auto it = cache.find(o.catalog_path);
  if (it == cache.end()) {
    try {
      it = cache.emplace(o.catalog_path, MoveCatalog(load_catalog(read_file(o.catalog_path)))).first;
    } catch (const CatalogError& e) {
      throw InputError(o.catalog_path + ": " + e.what());
    }
  }
  return it->second;
}

Kei kei_for(const Options& o) {
  try {
    return load_kei_spec(o.kei);
  } catch (const std::invalid_argument& e) {
    throw InputError(o.kei + ": " + e.what());
  }
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InputError("bad range '" + s + "' (expected a..b)");
  }
}

bool machine(const Options& o) { return o.format == "machine"; }

std::string join_colors(const Coloring& c) {
  std::string s;
  for (std::size_t i = 0; i < c.arc_colors.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(c.arc_colors[i]);
  }
  return s;
}

// 1-based row and column.
std::string position(int row, int col) {
  return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

Outcome cmd_validate(const Options& o) {
  Mosaic m = load_mosaic(o.input);
  auto r = validate(m);
  std::ostringstream out;
  if (machine(o)) {
    out << "suitably_connected: " << (r.suitably_connected ? "true" : "false") << "\n";
    out << "failures: " << r.failures.size() << "\n";
    for (const auto& f : r.failures)
      out << "failure: " << f.row + 1 << " " << f.col + 1 << " " << edge_name(f.edge) << "\n";
  } else if (r.suitably_connected) {
    out << "valid: " << m.rows() << "x" << m.cols() << " mosaic is suitably connected\n";
  } else {
    out << "invalid: not suitably connected\n";
    for (const auto& f : r.failures)
      out << position(f.row, f.col) << " edge " << edge_name(f.edge) << " unmatched\n";
  }
  return {r.suitably_connected ? 0 : 1, out.str()};
}

void require_valid(const Mosaic& m, const std::string& path) {
  auto r = validate(m);
  if (r.suitably_connected) return;
  const auto& f = r.failures.front();
  throw InputError(path + ": not suitably connected: " + position(f.row, f.col) + " edge " +
                   edge_name(f.edge) + " unmatched");
}

Outcome cmd_render(const Options& o) {
  Mosaic m = load_mosaic(o.input);
  if (o.style == "svg") return {0, render_svg(m)};
  return {0, render_ascii(m)};
}

Outcome cmd_chindex(const Options& o) {
  Mosaic m = load_mosaic(o.input);
  std::ostringstream out;
  if (machine(o))
    out << "ch: " << ch_index(m) << "\ncrossings: " << crossing_count(m)
        << "\nmarked_vertices: " << marked_count(m) << "\n";
  else
    out << ch_index(m) << "\n";
  return {0, out.str()};
}

Outcome cmd_components(const Options& o) {
  Mosaic m = load_mosaic(o.input);
  require_valid(m, o.input);
  auto s = trace(m);
  std::ostringstream out;
  if (machine(o))
    out << "components: " << s.component_count << "\narcs: " << s.arcs.size() << "\n";
  else
    out << s.component_count << "\n";
  return {0, out.str()};
}

Outcome cmd_resolve(const Options& o) {
  if (o.sign != "+" && o.sign != "-") throw InputError("resolve needs + or -");
  Mosaic m = load_mosaic(o.input);
  require_valid(m, o.input);
  return {0, serialize(splice(m, o.sign == "+" ? Direction::Plus : Direction::Minus))};
}

Outcome cmd_admissible(const Options& o) {
  Mosaic m = load_mosaic(o.input);
  require_valid(m, o.input);
  TrivialityOptions t;
  t.node_budget = o.budget;
  t.workers = o.workers;
  auto r = is_admissible(m, t, catalog_for(o));
  std::ostringstream out;
  if (machine(o))
    out << "admissible: " << to_string(r.value) << "\nevidence: " << r.evidence << "\n";
  else
    out << "admissible: " << to_string(r.value) << "\n" << r.evidence << "\n";
  return {0, out.str()};
}

Outcome cmd_color(const Options& o) {
  Mosaic m = load_mosaic(o.input);
  require_valid(m, o.input);
  Kei k = kei_for(o);
  auto cs = colorings(m, k);
  auto poly = deficiency_polynomial(cs, k);
  std::ostringstream out;
  if (machine(o))
    out << "kei: " << k.name() << "\ncolorings: " << cs.size() << "\npolynomial: " << poly.to_string()
        << "\n";
  else
    out << cs.size() << " colorings; polynomial: " << poly.to_string() << "\n";
  return {0, out.str()};
}

Outcome cmd_deficiency(const Options& o) {
  Mosaic m = load_mosaic(o.input);
  require_valid(m, o.input);
  Kei k = kei_for(o);
  auto cs = colorings(m, k);
  std::ostringstream out;
  out << (machine(o) ? "kei: " : "kei ") << k.name() << "\n";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (machine(o))
      out << "coloring: " << deficiency(cs[i], k) << " | " << join_colors(cs[i]) << "\n";
    else
      out << "#" << i + 1 << " deficiency " << deficiency(cs[i], k) << ": " << join_colors(cs[i])
          << "\n";
  }
  out << "polynomial: " << deficiency_polynomial(cs, k).to_string() << "\n";
  return {0, out.str()};
}

Outcome cmd_minimize(const Options& o) {
  Mosaic m = load_mosaic(o.input);
  require_valid(m, o.input);
  MinimizeOptions mo;
  mo.size_cap = o.size_cap;
  mo.node_budget = o.node_budget;
  mo.workers = o.workers;
  const auto& cat = catalog_for(o);
  auto r = minimize(m, mo, cat);
  std::ostringstream out;
  if (machine(o)) {
    out << "status: " << to_string(r.status) << "\nlower: " << r.lower << "\nupper: " << r.upper
        << "\nreason: " << r.reason << "\nmoves: " << r.trace.size() << "\n";
    for (const auto& s : r.trace) out << "move: " << s.to_string(cat) << "\n";
    out << "witness:\n" << serialize(r.witness);
  } else {
    if (r.status == BoundResult::Status::Exact)
      out << "mosaic number " << r.upper << " (exact)\n";
    else
      out << "mosaic number between " << r.lower << " and " << r.upper << " (bounded)\n";
    out << "lower bound: " << r.reason << "\n";
    out << "witness after " << r.trace.size() << " moves:\n" << serialize(r.witness);
  }
  return {0, out.str()};
}

Outcome cmd_enumerate(const Options& o) {
  std::pair<int, int> range{o.n, o.n};
  if (!o.n_range.empty()) range = parse_range(o.n_range);
  if (range.first < 1 || range.second < range.first) throw InputError("need a size n >= 1");
  std::ostringstream out;
  for (int n = range.first; n <= range.second; ++n) {
    auto all = enumerate(n, o.marked, o.workers);
    if (machine(o)) out << "# n=" << n << " count=" << all.size() << "\n\n";
    for (const auto& m : all)
      out << "# ch=" << ch_index(m) << " comps=" << component_count(m) << "\n" << serialize(m) << "\n";
    if (!machine(o)) out << "# " << all.size() << " suitably connected " << n << "-mosaics\n";
  }
  return {0, out.str()};
}

std::string multiset(const std::vector<int>& ds) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ds.size();) {
    std::size_t j = i;
    while (j < ds.size() && ds[j] == ds[i]) ++j;
    if (i > 0) out << ' ';
    out << ds[i] << "x" << (j - i);
    i = j;
  }
  return out.str();
}

Outcome cmd_spectrum(const Options& o) {
  Mosaic m = load_mosaic(o.input);
  require_valid(m, o.input);
  Kei k = kei_for(o);
  auto [lo, hi] = o.n_range.empty() ? std::pair{crop(m).size(), crop(m).size()} : parse_range(o.n_range);
  auto est = spectrum_estimate(m, k, lo, hi, o.node_budget, o.workers, catalog_for(o));
  std::ostringstream out;
  out << (machine(o) ? "kei: " : "kei ") << k.name() << "\n";
  for (const auto& e : est.entries) {
    if (!e.reachable) {
      out << "n=" << e.n << (machine(o) ? " status: unreachable\n" : ": unreachable\n");
      continue;
    }
    if (machine(o))
      out << "n=" << e.n << " diagrams: " << e.diagrams << " deficiencies: " << multiset(e.deficiencies)
          << " polynomial: " << e.polynomial().to_string() << "\n";
    else
      out << "n=" << e.n << ": " << e.polynomial().to_string() << " (upper bounds from " << e.diagrams
          << " diagrams)\n";
  }
  return {0, out.str()};
}

Outcome cmd_catalog_check(const Options& o) {
  std::string text = o.catalog_path.empty() ? std::string(default_catalog_text()) : read_file(o.catalog_path);
  std::vector<RewriteRule> rules;
  try {
    rules = load_catalog(text);
  } catch (const CatalogError& e) {
    return {1, "invalid catalog: " + std::string(e.what()) + "\n"};
  }
  MoveCatalog cat(rules);
  std::map<int, int> per_rule;
  for (const auto& v : cat.variants()) ++per_rule[v.rule];
  std::ostringstream out;
  out << (machine(o) ? "rules: " : "") << rules.size() << (machine(o) ? "\n" : " rules, ")
      << (machine(o) ? "variants: " : "") << cat.variants().size() << (machine(o) ? "\n" : " variants\n");
  for (std::size_t r = 0; r < cat.rules().size(); ++r) {
    const auto& rule = cat.rules()[r];
    out << (machine(o) ? "rule: " : "  ") << rule.name << " " << rule.rows << "x" << rule.cols
        << " bindings=" << rule.binding_count() << " variants=" << per_rule[static_cast<int>(r)] << "\n";
  }
  return {0, out.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marked graph mosaics: validation, moves, resolutions and kei invariants"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "human or machine")
        ->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--out", o.out_path, "Write output to this file");
    return sub;
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Mosaic file")->required();
    return sub;
  };
  auto add_kei = [&](CLI::App* sub) {
    sub->add_option("--kei", o.kei, "Kei table file or core-cyclic:<n>");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--catalog", o.catalog_path, "Move catalog (default: built in)");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 256));
  };

  std::map<CLI::App*, Outcome (*)(const Options&)> verbs;
  auto verb = [&](const char* name, const char* help, Outcome (*fn)(const Options&)) {
    auto* sub = add_common(app.add_subcommand(name, help));
    verbs[sub] = fn;
    return sub;
  };

  add_input(verb("validate", "Check that every connection point is matched", cmd_validate));
  auto* render = add_input(verb("render", "Draw a mosaic", cmd_render));
  render->add_option("--style", o.style, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  add_input(verb("chindex", "Number of crossings plus marked vertices", cmd_chindex));
  add_input(verb("components", "Number of components", cmd_components));
  auto* resolve = verb("resolve", "Splice every marked vertex in one direction", cmd_resolve);
  resolve->add_option("sign", o.sign, "+ or -")->required()->check(CLI::IsMember({"+", "-"}));
  add_input(resolve);
  auto* adm = add_input(verb("admissible", "Check that both resolutions are trivial", cmd_admissible));
  adm->add_option("--budget", o.budget, "Search nodes per resolution");
  add_search(adm);
  auto* color = add_input(verb("color", "Count kei colorings", cmd_color));
  add_kei(color);
  auto* def = add_input(verb("deficiency", "List colorings with their deficiency", cmd_deficiency));
  add_kei(def);
  auto* mini = add_input(verb("minimize", "Bound the mosaic number", cmd_minimize));
  mini->add_option("--size-cap", o.size_cap, "Largest mosaic size the search may use");
  mini->add_option("--node-budget", o.node_budget, "Search nodes per shrinking round");
  add_search(mini);
  auto* en = verb("enumerate", "List all suitably connected n-mosaics", cmd_enumerate);
  en->add_option("-n,--n", o.n, "Mosaic size");
  en->add_option("--n-range", o.n_range, "Sizes a..b");
  en->add_flag("--marked", o.marked, "Allow marked vertices");
  en->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 256));
  auto* spec = add_input(verb("spectrum", "Bound minimal deficiencies over n-mosaics", cmd_spectrum));
  add_kei(spec);
  spec->add_option("--n-range", o.n_range, "Sizes a..b");
  spec->add_option("--node-budget", o.node_budget, "Search nodes per size");
  add_search(spec);
  auto* cc = verb("catalog-check", "Validate a move catalog", cmd_catalog_check);
  cc->add_option("--catalog", o.catalog_path, "Catalog file (default: built in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Outcome result;
  try {
    for (auto& [sub, fn] : verbs)
      if (sub->parsed()) result = fn(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  if (o.out_path.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(o.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << o.out_path << "\n";
      return 3;
    }
    out << result.text;
  }
  return result.status;
}
