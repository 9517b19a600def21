#include "starwalk/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "starwalk/io.hpp"
#include "starwalk/ordering.hpp"
#include "starwalk/spectra.hpp"
#include "starwalk/trees.hpp"
#include "starwalk/verify.hpp"
#include "starwalk/walks.hpp"

namespace starwalk {

namespace {

using detail::Json;

// Bad input rather than a failed computation; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Table };

// CLI11 drops environment values that fail validation, so parse by hand.
unsigned jobs_from_environment() {
  const char* raw = std::getenv("STARWALK_JOBS");
  if (!raw || !*raw) return 1;
  unsigned value = 0;
  const std::string_view s(raw);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    throw UsageError("STARWALK_JOBS must be a positive integer, got '" + std::string(s) + "'");
  }
  return value;
}

struct Common {
  Format format = Format::Table;
  unsigned jobs = 0;  // 0 until --jobs or STARWALK_JOBS fills it in
  std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"csv", Format::Csv}, {"table", Format::Table}};
  cmd->add_option("--format", c.format, "Output format: json, csv or table")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Worker threads (default from STARWALK_JOBS, else 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", c.output, "Write the report to this file instead of stdout");
}

struct TreeArgs {
  std::string tree;
  std::string edges;
};

struct LoadedTree {
  Graph graph;
  std::string label;
  std::optional<Partition> branches;
};

void add_tree_options(CLI::App* cmd, TreeArgs& t, const std::string& suffix = "",
                      const std::string& what = "") {
  auto* tree = cmd->add_option("--tree" + suffix, t.tree, "Starlike tree" + what + ", e.g. \"S(1,2,3)\"");
  auto* edges = cmd->add_option("--edges" + suffix, t.edges,
                                "Edge-list file" + what + " (one \"u v\" pair per line)");
  tree->excludes(edges);
}

LoadedTree load_tree(const TreeArgs& t, std::ostream& err) {
  if (t.tree.empty() == t.edges.empty()) {
    throw UsageError("give exactly one of --tree or --edges");
  }
  try {
    if (!t.tree.empty()) {
      const ParsedPartition parsed = parse_starlike_descriptor(t.tree);
      if (parsed.reordered) {
        err << "warning: branch lengths reordered to " << parsed.partition.descriptor() << "\n";
      }
      return {make_starlike(parsed.partition).graph, parsed.partition.descriptor(),
              parsed.partition};
    }
    std::ifstream in(t.edges);
    if (!in) throw UsageError("cannot open edge list '" + t.edges + "'");
    Graph g = parse_edge_list(in);
    return {std::move(g), t.edges, std::nullopt};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Space-aligned columns; the first row is the header.
class Table {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) line += "  ";
        line += r[i];
        if (i + 1 < r.size()) line.append(width[i] - r[i].size(), ' ');
      }
      out << line << "\n";
    }
  }

  void print_csv(std::ostream& out) const {
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_cell(r[i]);
      out << "\n";
    }
  }

 private:
  static std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }

  std::vector<std::vector<std::string>> rows_;
};

std::string fmt_double(double x, int digits = 15) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

Json edges_json(const Graph& g) {
  Json arr = Json::array();
  for (auto [u, v] : g.edges()) arr.push_back(Json::array({u, v}));
  return arr;
}

std::string edges_text(const Graph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

// ---- moments -------------------------------------------------------------

struct MomentsArgs {
  TreeArgs tree;
  int max_k = 50;
  bool all_walks = false;
  std::optional<Vertex> vertex;
};

int cmd_moments(const MomentsArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const LoadedTree t = load_tree(a.tree, err);
  if (a.vertex && !t.graph.contains(*a.vertex)) throw UsageError("--vertex out of range");
  const MomentSequence closed = closed_walk_counts(t.graph, a.max_k, c.jobs);
  std::optional<MomentSequence> all, at;
  if (a.all_walks) all = all_walk_counts(t.graph, a.max_k);
  if (a.vertex) at = closed_walk_counts_at(t.graph, *a.vertex, a.max_k);

  if (c.format == Format::Json) {
    Json j{{"tree", t.label},
           {"n", t.graph.vertex_count()},
           {"K", a.max_k},
           {"closed", detail::to_json(closed)}};
    if (all) j["all_walks"] = detail::to_json(*all);
    if (at) {
      j["vertex"] = *a.vertex;
      j["closed_at_vertex"] = detail::to_json(*at);
    }
    out << j.dump() << "\n";
    return 0;
  }
  Table table;
  std::vector<std::string> header{"k", "value"};
  if (all) header.push_back("all_walks");
  if (at) header.push_back("at_vertex_" + std::to_string(*a.vertex));
  table.row(header);
  for (int k = 0; k <= a.max_k; ++k) {
    const auto i = static_cast<std::size_t>(k);
    std::vector<std::string> r{std::to_string(k), to_decimal(closed[i])};
    if (all) r.push_back(to_decimal((*all)[i]));
    if (at) r.push_back(to_decimal((*at)[i]));
    table.row(std::move(r));
  }
  if (c.format == Format::Csv) table.print_csv(out);
  else table.print(out);
  return 0;
}

// ---- compare -------------------------------------------------------------

struct CompareArgs {
  TreeArgs a;
  TreeArgs b;
  bool certify = false;
  bool show_moments = false;
  int max_k = 50;
};

int cmd_compare(const CompareArgs& args, const Common& c, std::ostream& out, std::ostream& err) {
  const LoadedTree ta = load_tree(args.a, err);
  const LoadedTree tb = load_tree(args.b, err);
  if (orders_differ(ta.graph, tb.graph)) {
    err << "warning: the graphs have different orders, so M_0 already differs\n";
  }
  DominanceVerdict v;
  std::string method;
  const bool starlike = ta.branches && tb.branches && ta.branches->size() >= 3 &&
                        tb.branches->size() >= 3 && ta.branches->total() == tb.branches->total();
  if (starlike) {
    v = compare_starlike(*ta.branches, *tb.branches, args.certify, args.max_k);
    method = args.certify ? "shortlex+moments" : "shortlex";
  } else {
    v = moment_dominance(ta.graph, tb.graph, args.max_k);
    method = "moments";
  }

  if (c.format == Format::Json) {
    Json j{{"a", ta.label}, {"b", tb.label}, {"method", method}};
    const Json verdict = detail::to_json(v);
    for (const auto& [key, val] : verdict.items()) j[key] = val;
    if (args.show_moments) {
      j["moments_a"] = detail::to_json(closed_walk_counts(ta.graph, args.max_k));
      j["moments_b"] = detail::to_json(closed_walk_counts(tb.graph, args.max_k));
    }
    out << j.dump() << "\n";
    return 0;
  }
  Table table;
  table.row({"a", "b", "method", "relation", "K", "witness_strict", "witness_up", "witness_down",
             "certified"});
  table.row({ta.label, tb.label, method, std::string(to_string(v.relation)),
             std::to_string(v.horizon), opt_str(v.witness_strict), opt_str(v.witness_up),
             opt_str(v.witness_down), v.certified ? "yes" : "no"});
  if (c.format == Format::Csv) table.print_csv(out);
  else table.print(out);
  if (args.show_moments && c.format == Format::Table) {
    const auto ma = closed_walk_counts(ta.graph, args.max_k);
    const auto mb = closed_walk_counts(tb.graph, args.max_k);
    Table m;
    m.row({"k", "M_k(a)", "M_k(b)"});
    for (int k = 0; k <= args.max_k; ++k) {
      const auto i = static_cast<std::size_t>(k);
      m.row({std::to_string(k), to_decimal(ma[i]), to_decimal(mb[i])});
    }
    out << "\n";
    m.print(out);
  }
  return 0;
}

// ---- successor -----------------------------------------------------------

struct SuccessorArgs {
  std::string partition;
  int count = 1;
  int min_parts = 3;
};

int cmd_successor(const SuccessorArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  ParsedPartition parsed = [&] {
    try {
      return a.partition.find('(') != std::string::npos ? parse_starlike_descriptor(a.partition)
                                                        : parse_partition(a.partition);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (parsed.reordered) err << "warning: parts reordered to " << parsed.partition.to_string() << "\n";
  if (static_cast<int>(parsed.partition.size()) < a.min_parts) {
    throw UsageError("partition has fewer than " + std::to_string(a.min_parts) + " parts");
  }
  Json rows = Json::array();
  Table table;
  table.row({"from", "to", "case", "j", "p", "q", "f"});
  Partition current = parsed.partition;
  for (int i = 0; i < a.count; ++i) {
    auto next = shortlex_successor(current, a.min_parts);
    if (!next) break;
    const auto& [beta, sc] = *next;
    const bool two = sc.tag == SuccessorCase::Tag::CaseII;
    Json row{{"from", current.to_string()}, {"to", beta.to_string()},
             {"case", std::string(to_string(sc.tag))}};
    if (two) {
      row["j"] = sc.j;
      row["p"] = sc.p;
      row["q"] = sc.q;
      row["f"] = sc.f;
    }
    rows.push_back(std::move(row));
    table.row({current.to_string(), beta.to_string(), std::string(to_string(sc.tag)),
               two ? std::to_string(sc.j) : "-", two ? std::to_string(sc.p) : "-",
               two ? std::to_string(sc.q) : "-", two ? std::to_string(sc.f) : "-"});
    current = beta;
  }
  if (c.format == Format::Json) out << rows.dump() << "\n";
  else if (c.format == Format::Csv) table.print_csv(out);
  else {
    table.print(out);
    if (rows.size() < static_cast<std::size_t>(a.count)) {
      out << current.to_string() << " is the shortlex maximum\n";
    }
  }
  return 0;
}

// ---- spectra -------------------------------------------------------------

struct SpectraArgs {
  TreeArgs tree;
  double tol = 1e-10;
  bool charpoly = false;
};

int cmd_spectra(const SpectraArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const LoadedTree t = load_tree(a.tree, err);
  const Spectrum s = eigenvalues(t.graph, a.tol);
  const EstradaIndex ee = estrada_index(t.graph, a.tol);
  std::optional<double> radius;
  if (t.graph.edge_count() > 0 && t.graph.is_connected()) radius = spectral_radius(t.graph, a.tol);

  if (c.format == Format::Json) {
    Json j{{"tree", t.label},
           {"n", t.graph.vertex_count()},
           {"spectrum", detail::to_json(s)},
           {"spectral_radius", radius ? Json(*radius) : Json(nullptr)},
           {"estrada_index", Json{{"value", ee.value}, {"error_bound", ee.error_bound}}}};
    if (a.charpoly) j["charpoly"] = detail::to_json(charpoly(t.graph));
    out << j.dump() << "\n";
    return 0;
  }
  if (c.format == Format::Csv) {
    Table table;
    table.row({"i", "eigenvalue"});
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
      table.row({std::to_string(i + 1), fmt_double(s.eigenvalues[i], 17)});
    }
    table.print_csv(out);
    return 0;
  }
  Table table;
  table.row({"quantity", "value"});
  table.row({"tree", t.label});
  table.row({"n", std::to_string(t.graph.vertex_count())});
  table.row({"tol", fmt_double(a.tol, 3)});
  table.row({"spectral_radius", radius ? fmt_double(*radius) : "-"});
  table.row({"estrada_index", fmt_double(ee.value)});
  table.row({"estrada_error_bound", fmt_double(ee.error_bound, 3)});
  table.print(out);
  out << "\neigenvalues:";
  for (double x : s.eigenvalues) out << " " << fmt_double(x, 12);
  out << "\n";
  if (a.charpoly) out << "\ncharpoly: " << charpoly(t.graph).to_string('x') << "\n";
  return 0;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  Suite suite = Suite::Full;
  int n_max = 14;
  int max_k = 40;
};

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const std::vector<CheckReport> reports = run_suite(a.suite, a.n_max, a.max_k, c.jobs);
  const SuiteSummary summary = summarize(reports);

  if (c.format == Format::Json) {
    for (const auto& r : reports) out << detail::to_json(r).dump() << "\n";
    err << detail::to_json(summary).dump() << "\n";
  } else if (c.format == Format::Csv) {
    Table table;
    table.row({"name", "instance", "K", "holds", "first_strict_witness", "violation"});
    for (const auto& r : reports) {
      table.row({r.name, r.instance, std::to_string(r.horizon), r.holds ? "true" : "false",
                 opt_str(r.first_strict_witness),
                 r.violation ? r.violation->reason : std::string()});
    }
    table.print_csv(out);
  } else {
    // One line per check family.
    struct Family {
      std::size_t total = 0, holding = 0, vacuous = 0;
      std::optional<int> max_witness;
    };
    std::map<std::string, Family> families;
    for (const auto& r : reports) {
      Family& f = families[r.name];
      ++f.total;
      f.holding += r.holds ? 1 : 0;
      f.vacuous += r.vacuous ? 1 : 0;
      if (r.first_strict_witness) {
        f.max_witness = std::max(f.max_witness.value_or(0), *r.first_strict_witness);
      }
    }
    Table table;
    table.row({"check", "instances", "holding", "violations", "vacuous", "max_witness"});
    for (const auto& [name, f] : families) {
      table.row({name, std::to_string(f.total), std::to_string(f.holding),
                 std::to_string(f.total - f.holding), std::to_string(f.vacuous),
                 opt_str(f.max_witness)});
    }
    table.row({"total", std::to_string(summary.total), std::to_string(summary.holding),
               std::to_string(summary.violations), std::to_string(summary.vacuous),
               opt_str(summary.max_witness)});
    table.print(out);
    for (const auto& r : reports) {
      if (r.holds) continue;
      out << "VIOLATION " << r.name << " [" << r.instance << "]: " << r.violation->reason;
      if (r.violation->k >= 0) {
        out << " at k=" << r.violation->k << " (" << to_decimal(r.violation->lhs) << " > "
            << to_decimal(r.violation->rhs) << ")";
      }
      out << "\n";
    }
  }
  return summary.violations == 0 ? 0 : 1;
}

// ---- incomparable --------------------------------------------------------

struct IncomparableArgs {
  int n = 8;
  int max_k = 50;
  bool starlike = false;
};

int cmd_incomparable(const IncomparableArgs& a, const Common& c, std::ostream& out,
                     std::ostream&) {
  const auto pairs = a.starlike ? find_incomparable_starlike_pairs(a.n, a.max_k, c.jobs)
                                : find_incomparable_pairs(a.n, a.max_k, c.jobs);
  if (c.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& p : pairs) {
      arr.push_back(Json{{"first", edges_json(p.first)},
                         {"second", edges_json(p.second)},
                         {"k_up", p.k_up},
                         {"k_down", p.k_down}});
    }
    out << Json{{"n", a.n}, {"K", a.max_k}, {"starlike_only", a.starlike}, {"pairs", arr}}.dump()
        << "\n";
    return 0;
  }
  Table table;
  table.row({"index", "k_up", "k_down", "first", "second"});
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    table.row({std::to_string(i), std::to_string(pairs[i].k_up), std::to_string(pairs[i].k_down),
               edges_text(pairs[i].first), edges_text(pairs[i].second)});
  }
  if (c.format == Format::Csv) {
    table.print_csv(out);
  } else {
    table.print(out);
    out << pairs.size() << " incomparable pair(s) on " << a.n << " vertices through K=" << a.max_k
        << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact closed-walk counts, spectra and shortlex ordering of starlike trees"};
  app.name("starwalk");
  app.require_subcommand(1);

  Common common;

  MomentsArgs moments;
  auto* m = app.add_subcommand("moments", "Closed-walk counts M_k (and W_k, M_k(G,v))");
  add_tree_options(m, moments.tree);
  m->add_option("--max-k", moments.max_k, "Largest walk length")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  m->add_flag("--all-walks", moments.all_walks, "Also report all-walk counts W_k");
  m->add_option("--vertex", moments.vertex, "Also report M_k(G, v) for this vertex");
  add_common(m, common);

  CompareArgs compare;
  auto* cmp = app.add_subcommand("compare", "Compare two graphs by closed-walk counts");
  add_tree_options(cmp, compare.a, "-a", " A");
  add_tree_options(cmp, compare.b, "-b", " B");
  cmp->add_flag("--certify", compare.certify,
                "For starlike pairs, also check the moment sequences through --max-k");
  cmp->add_flag("--show-moments", compare.show_moments, "Include both moment sequences");
  cmp->add_option("--max-k", compare.max_k, "Horizon K")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  add_common(cmp, common);

  SuccessorArgs successor;
  auto* suc = app.add_subcommand("successor", "Shortlex successors of a partition");
  suc->add_option("partition", successor.partition, "Partition \"1,1,4\" or \"S(1,1,4)\"")
      ->required();
  suc->add_option("--count", successor.count, "Number of successive steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  suc->add_option("--min-parts", successor.min_parts, "Minimum number of parts")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  add_common(suc, common);

  SpectraArgs spectra;
  auto* sp = app.add_subcommand("spectra", "Eigenvalues, spectral radius and Estrada index");
  add_tree_options(sp, spectra.tree);
  sp->add_option("--tol", spectra.tol, "Absolute eigenvalue accuracy")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sp->add_flag("--charpoly", spectra.charpoly, "Also print the characteristic polynomial");
  add_common(sp, common);

  VerifyArgs verify;
  auto* ver = app.add_subcommand("verify", "Machine-check the lemmas and the ordering theorem");
  const std::map<std::string, Suite> suites{{"quick", Suite::Quick},
                                            {"identities", Suite::Identities},
                                            {"inequalities", Suite::Inequalities},
                                            {"theorem", Suite::Theorem},
                                            {"all-walks", Suite::AllWalks},
                                            {"full", Suite::Full}};
  ver->add_option("--suite", verify.suite, "quick, identities, inequalities, theorem, all-walks or full")
      ->transform(CLI::CheckedTransformer(suites, CLI::ignore_case))
      ->capture_default_str();
  ver->add_option("--n-max", verify.n_max, "Largest tree order in the starlike sweeps")
      ->check(CLI::Range(4, 30))
      ->capture_default_str();
  ver->add_option("--max-k", verify.max_k, "Horizon K")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  add_common(ver, common);

  IncomparableArgs incomparable;
  auto* inc = app.add_subcommand("incomparable", "Search for trees incomparable by closed walks");
  inc->add_option("--n", incomparable.n, "Tree order")
      ->check(CLI::Range(1, kMaxIncomparableSearchOrder))
      ->capture_default_str();
  inc->add_option("--max-k", incomparable.max_k, "Horizon K")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  inc->add_flag("--starlike", incomparable.starlike, "Restrict to starlike trees");
  add_common(inc, common);

  app.footer(
      "Defaults: --max-k 50 (verify: 40), --tol 1e-10, --n-max 14.\n"
      "The acceptance suite (ctest -R acceptance) reproduces the reference checks.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (common.jobs == 0) common.jobs = jobs_from_environment();
    if (*m) status = cmd_moments(moments, common, buffer, err);
    else if (*cmp) status = cmd_compare(compare, common, buffer, err);
    else if (*suc) status = cmd_successor(successor, common, buffer, err);
    else if (*sp) status = cmd_spectra(spectra, common, buffer, err);
    else if (*ver) status = cmd_verify(verify, common, buffer, err);
    else if (*inc) status = cmd_incomparable(incomparable, common, buffer, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (common.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(common.output);
    if (!file) {
      err << "error: cannot write '" << common.output << "'\n";
      return 2;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace starwalk
