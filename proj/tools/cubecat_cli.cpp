// cubecat: build cubes, list and compose morphisms, run the checks, print
// hom-set tables and export graphs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cubecat/catalog.hpp"
#include "cubecat/checks.hpp"
#include "cubecat/cubes.hpp"
#include "cubecat/errors.hpp"
#include "cubecat/io.hpp"
#include "cubecat/standard_cats.hpp"
#include "cubecat/twisted.hpp"

namespace {

using namespace cubecat;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Prints the message and, when the error carries a position into `input`,
/// the input with a caret under the offending character.
void diagnose(const std::string& what, const std::string& input, std::size_t position) {
  std::cerr << "error: " << what << "\n";
  if (position == std::string::npos || input.empty()) return;
  std::cerr << "  " << input << "\n  " << std::string(position, ' ') << "^\n";
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// ---- build ----------------------------------------------------------------

struct BuildOptions {
  std::string kind;
  int n = 0;
  std::string def = "nonrec";
  std::string out = "json";
  bool verify_iso = false;
};

int run_build(const BuildOptions& o) {
  const CubeKind kind = parse_cube_kind(o.kind);
  const int limit = o.out == "dot" ? 4 : 8;
  if (o.n < 0 || o.n > limit) {
    throw UsageError("--n must be between 0 and " + std::to_string(limit) + " for --out " + o.out);
  }
  const Graph g = o.def == "rec" ? cube_rec(kind, o.n) : cube_nonrec(kind, o.n).graph();
  if (o.verify_iso) {
    const Graph other = o.def == "rec" ? cube_nonrec(kind, o.n).graph() : cube_rec(kind, o.n);
    if (!graph_isomorphic(g, other)) {
      std::cerr << "rec and nonrec definitions are not isomorphic\n";
      return kCheckFailed;
    }
    std::cerr << "rec and nonrec definitions are isomorphic\n";
  }
  if (o.out == "dot") {
    std::cout << graph_to_dot(g, kind);
  } else {
    std::cout << graph_to_json(g).dump() << "\n";
  }
  return kOk;
}

// ---- homs -----------------------------------------------------------------

template <class Mor, class ToJson>
Json listing_json(const FiniteCategory<Mor>& cat, int m, int n, ToJson to_json) {
  Json out = Json::array();
  for (const auto& f : cat.homs(m, n)) out.push_back(to_json(f));
  return out;
}

Json hom_json(CategoryId id, int m, int n) {
  const auto as_string = [](const TernaryMorphism& t) { return Json(t.str()); };
  const auto as_bch = [](const BchMorphism& f) { return bch_to_json(f); };
  const auto as_graph = [](const GraphMorphism& f) { return graph_morphism_to_json(f); };
  switch (id) {
    case CategoryId::Bch:
      return listing_json(bch_category(), m, n, as_bch);
    case CategoryId::BchOp:
      return listing_json(bchop_category(), m, n, as_bch);
    case CategoryId::GraphCube:
      return listing_json(graphcube_category(), m, n, as_graph);
    case CategoryId::GraphMeet:
      return listing_json(graphmeet_category(), m, n, as_graph);
    case CategoryId::GraphDim:
      return listing_json(graphdim_category(), m, n, as_graph);
    case CategoryId::TwCube:
      return listing_json(twcube_category(), m, n, as_graph);
    case CategoryId::TwGraphDim:
      return listing_json(twgraphdim_category(), m, n, as_graph);
    case CategoryId::Ternary:
      return listing_json(ternary_category(), m, n, as_string);
    case CategoryId::Semi:
      return listing_json(semi_category(), m, n, as_string);
    case CategoryId::Untwisted:
      return listing_json(untwisted_category(), m, n, as_string);
  }
  return Json::array();
}

struct HomsOptions {
  std::string cat;
  int m = 0;
  int n = 0;
  std::string out = "text";
};

int run_homs(const HomsOptions& o) {
  const CategoryId id = parse_category_id(o.cat);
  if (o.out == "json") {
    hom_count(id, o.m, o.n);  // range and capacity check
    std::cout << hom_json(id, o.m, o.n).dump() << "\n";
  } else {
    for (const auto& line : hom_listing(id, o.m, o.n)) std::cout << line << "\n";
  }
  return kOk;
}

// ---- compose --------------------------------------------------------------

struct ComposeOptions {
  std::string cat;
  std::string g;
  std::string f;
  int domain = -1;
};

TernaryMorphism parse_ternary_arg(int m, const std::string& text) {
  try {
    return TernaryMorphism::parse(m, text);
  } catch (const ParseError& e) {
    diagnose(e.what(), text, e.position());
    throw UsageError("cannot parse '" + text + "'");
  }
}

BchMorphism parse_bch_arg(const std::string& text) {
  try {
    return bch_from_json(parse_json(text));
  } catch (const ParseError& e) {
    diagnose(e.what(), text, e.position());
    throw UsageError("cannot parse '" + text + "'");
  }
}

int run_compose(const ComposeOptions& o) {
  if (o.cat == "bch") {
    std::cout << bch_to_json(bch_compose(parse_bch_arg(o.g), parse_bch_arg(o.f))).dump() << "\n";
    return kOk;
  }
  if (o.cat != "ternary" && o.cat != "untwisted") {
    throw UsageError("compose supports --cat ternary, untwisted or bch");
  }
  const auto f_trits = parse_ternary_arg(kMaxDimension, o.f);
  const int k = o.domain >= 0 ? o.domain : f_trits.stars();
  const TernaryMorphism f = parse_ternary_arg(k, o.f);
  const TernaryMorphism g = parse_ternary_arg(f.n(), o.g);
  const TernaryMorphism gf = o.cat == "ternary" ? ternary_compose(g, f) : untwisted_ternary_compose(g, f);
  std::cout << gf.str() << "\n";
  return kOk;
}

// ---- check ----------------------------------------------------------------

struct CheckOptions {
  std::string suite = "all";
  int max_dim = 3;
};

int run_checks(const CheckOptions& o) {
  if (o.max_dim < 0 || o.max_dim > 4) throw UsageError("--max-dim must be between 0 and 4");
  const auto reports = run_suite(parse_suite(o.suite), o.max_dim);
  bool failed = false;
  bool capacity = false;
  for (const auto& r : reports) {
    std::cout << report_to_json(r).dump() << "\n";
    if (!r.passed) (r.capacity_exceeded ? capacity : failed) = true;
  }
  return failed ? kCheckFailed : capacity ? kCapacity : kOk;
}

// ---- table ----------------------------------------------------------------

struct TableOptions {
  std::string cat;
  int max_dim = 2;
  std::string out = "text";
};

int run_table(const TableOptions& o) {
  const CategoryId id = parse_category_id(o.cat);
  const auto table = hom_table(id, o.max_dim);
  if (o.out == "json") {
    std::cout << Json{{"category", to_string(id)}, {"max_dim", o.max_dim}, {"rows", table}}.dump() << "\n";
    return kOk;
  }
  for (std::size_t m = 0; m < table.size(); ++m) {
    std::cout << "m=" << m << ": [";
    for (std::size_t n = 0; n < table[m].size(); ++n) std::cout << (n ? ", " : "") << table[m][n];
    std::cout << "]\n";
  }
  return kOk;
}

// ---- export ---------------------------------------------------------------

struct ExportOptions {
  std::string in = "-";
  std::string out = "dot";
  std::string kind;
};

int run_export(const ExportOptions& o) {
  const std::string text = read_input(o.in);
  Graph g;
  try {
    g = graph_from_json(parse_json(text));
  } catch (const ParseError& e) {
    throw UsageError(std::string("invalid graph: ") + e.what());
  }
  if (o.out == "json") {
    std::cout << graph_to_json(g).dump() << "\n";
    return kOk;
  }
  std::optional<CubeKind> kind;
  if (!o.kind.empty()) kind = parse_cube_kind(o.kind);
  std::cout << graph_to_dot(g, kind);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cube categories: BCH cubes, twisted cubes and their graph presentations"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Print a standard or twisted cube graph");
  build_cmd->add_option("--kind", build.kind, "standard or twisted")->required()->check(CLI::IsMember({"standard", "twisted"}));
  build_cmd->add_option("--n", build.n, "Dimension")->required();
  build_cmd->add_option("--def", build.def, "Recursive or closed-form definition")->check(CLI::IsMember({"rec", "nonrec"}));
  build_cmd->add_option("--out", build.out, "Output format")->check(CLI::IsMember({"json", "dot"}));
  build_cmd->add_flag("--verify-iso", build.verify_iso, "Also build the other definition and compare");

  HomsOptions homs;
  auto* homs_cmd = app.add_subcommand("homs", "List hom(m, n) in canonical order");
  homs_cmd->add_option("--cat", homs.cat, "Category name")->required();
  homs_cmd->add_option("m", homs.m)->required();
  homs_cmd->add_option("n", homs.n)->required();
  homs_cmd->add_option("--out", homs.out, "Output format")->check(CLI::IsMember({"text", "json"}));

  ComposeOptions compose_opts;
  auto* compose_cmd = app.add_subcommand("compose", "Print g ∘ f");
  compose_cmd->add_option("--cat", compose_opts.cat, "ternary, untwisted or bch")->required();
  compose_cmd->add_option("g", compose_opts.g, "Outer arrow")->required();
  compose_cmd->add_option("f", compose_opts.f, "Inner arrow")->required();
  compose_cmd->add_option("--domain", compose_opts.domain, "Domain of a ternary f (default: its star count)");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run a check suite and print one JSON report per line");
  check_cmd->add_option("--suite", check.suite, "all, standard, twisted, laws, iso or mutation");
  check_cmd->add_option("--max-dim", check.max_dim, "Largest object (graph checks stop at 3)");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Print |hom(m, n)| for m, n <= max-dim");
  table_cmd->add_option("--cat", table.cat, "Category name")->required();
  table_cmd->add_option("--max-dim", table.max_dim, "Largest object");
  table_cmd->add_option("--out", table.out, "Output format")->check(CLI::IsMember({"text", "json"}));

  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "Re-emit a JSON graph as JSON or DOT");
  export_cmd->add_option("--in", exp.in, "Graph JSON file, or - for stdin");
  export_cmd->add_option("--out", exp.out, "Output format")->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("--kind", exp.kind, "Cube kind for DOT naming and layout")->check(CLI::IsMember({"standard", "twisted"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build_cmd) return run_build(build);
    if (*homs_cmd) return run_homs(homs);
    if (*compose_cmd) return run_compose(compose_opts);
    if (*check_cmd) return run_checks(check);
    if (*table_cmd) return run_table(table);
    if (*export_cmd) return run_export(exp);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
