// One PASS/FAIL line per acceptance criterion. Usage:
//   starwalk_acceptance [--criterion N]
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "starwalk/ordering.hpp"
#include "starwalk/polynomial.hpp"
#include "starwalk/spectra.hpp"
#include "starwalk/trees.hpp"
#include "starwalk/verify.hpp"
#include "starwalk/walks.hpp"

using namespace starwalk;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

unsigned env_jobs(unsigned fallback) {
  if (const char* s = std::getenv("STARWALK_JOBS")) {
    const int v = std::atoi(s);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return fallback;
}

std::string fmt(double x, int digits = 15) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

const std::vector<Partition>& reference_trees() {
  static const std::vector<Partition> trees{Partition({80, 90, 100}), Partition({85, 90, 95}),
                                            Partition({90, 90, 90})};
  return trees;
}

Outcome criterion1() {
  constexpr double kRadius = 2.12132034355964;
  constexpr double kEstrada = 616.507916871363;
  Outcome o{true, ""};
  double slowest = 0.0;
  for (const Partition& p : reference_trees()) {
    const auto t0 = Clock::now();
    const Graph g = make_starlike(p).graph;
    const double r = spectral_radius(g, 1e-12);
    // Dense eigenvalues at n = 271 are good to about 1e-12; 1e-10 keeps the
    // propagated Estrada bound near 2e-7.
    const EstradaIndex ee = estrada_index(g, 1e-10);
    const double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    const bool ok = std::abs(r - kRadius) <= 1e-10 && std::abs(ee.value - kEstrada) <= 1e-6 && dt < 10.0;
    o.pass = o.pass && ok;
    o.detail += p.descriptor() + " radius=" + fmt(r) + " EE=" + fmt(ee.value) + " (+-" +
                fmt(ee.error_bound, 2) + "); ";
  }
  o.detail += "slowest " + fmt(slowest, 3) + " s";
  return o;
}

Outcome criterion2() {
  // First strict witnesses from the independent Python walk counter.
  const std::map<std::pair<std::string, std::string>, int> expected{
      {{"S(80,90,100)", "S(85,90,95)"}, 164}, {{"S(85,90,95)", "S(90,90,90)"}, 174}};
  const auto t0 = Clock::now();
  const auto& t = reference_trees();
  Outcome o{true, ""};
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const bool lambda_less = compare_spectral_radii_exact(t[i], t[i + 1]) < 0;
    const DominanceVerdict v = compare_starlike(t[i], t[i + 1], true, 400);
    const int want = expected.at({t[i].descriptor(), t[i + 1].descriptor()});
    const bool ok = lambda_less && v.relation == Relation::StrictlyLess && v.witness_strict &&
                    *v.witness_strict == want;
    o.pass = o.pass && ok;
    o.detail += t[i].descriptor() + " < " + t[i + 1].descriptor() + " lambda1 " +
                (lambda_less ? "less" : "NOT less") + ", witness k=" +
                (v.witness_strict ? std::to_string(*v.witness_strict) : "none") + "; ";
  }
  const double dt = seconds_since(t0);
  o.pass = o.pass && dt < 60.0;
  o.detail += fmt(dt, 3) + " s";
  return o;
}

Outcome criterion3() {
  const unsigned jobs = env_jobs(4);
  const auto t0 = Clock::now();
  const auto reports = verify_theorem(14, 40, PairMode::All, jobs);
  const double dt = seconds_since(t0);
  const SuiteSummary s = summarize(reports);
  bool witnesses = true;
  for (const auto& r : reports) witnesses = witnesses && r.first_strict_witness.has_value();
  Outcome o;
  o.pass = s.violations == 0 && witnesses && dt < 300.0 && s.total > 0;
  o.detail = std::to_string(s.total) + " ordered pairs for n <= 14, " +
             std::to_string(s.violations) + " violations, max witness " +
             (s.max_witness ? std::to_string(*s.max_witness) : "-") + ", " + fmt(dt, 3) + " s at " +
             std::to_string(jobs) + " jobs";
  return o;
}

Outcome criterion4() {
  const auto reports = identity_suite(40, env_jobs(1));
  std::size_t canceling = 0, factor = 0, failed = 0;
  for (const auto& r : reports) {
    if (r.name == "moment_canceling") ++canceling;
    if (r.name == "factorization") ++factor;
    if (!r.holds) ++failed;
  }
  Outcome o;
  // 15 (a,b) pairs x 4 values of p+q; 6 x 6 x 4 (c,d,q).
  o.pass = failed == 0 && canceling == 60 && factor == 144;
  o.detail = std::to_string(canceling) + " moment-canceling identities, " + std::to_string(factor) +
             " factorizations, " + std::to_string(failed) + " failures";
  return o;
}

Outcome criterion5() {
  const auto reports = inequality_suite(40, env_jobs(1));
  // Family -> reports (sub-reports of case II are counted per inequality).
  std::map<std::string, std::vector<const CheckReport*>> families;
  for (const auto& r : reports) {
    if (r.vacuous) continue;
    families[r.name].push_back(&r);
    for (const auto& d : r.details) {
      if (r.name == "case2") families[d.name].push_back(&d);
    }
  }
  const std::vector<std::string> required{
      "li_feng",        "coalescence",          "path_difference",      "corollary_disjoint",
      "corollary_sequential", "case1",          "case3",                "case2",
      "case2/composed", "case2/total",          "case2/bound_attached", "case2/bound_extended",
      "case2/center"};
  Outcome o{true, ""};
  for (const auto& key : required) {
    const auto& list = families[key];
    std::size_t holding = 0;
    for (const CheckReport* r : list) {
      const bool strict_ok = !r->strict_required || r->first_strict_witness.has_value();
      if (r->holds && strict_ok) ++holding;
    }
    const bool ok = list.size() >= 20 && holding == list.size();
    o.pass = o.pass && ok;
    o.detail += key + " " + std::to_string(holding) + "/" + std::to_string(list.size()) + (ok ? "" : " (!)") + "; ";
  }
  std::size_t vacuous = 0;
  for (const auto& r : reports) vacuous += r.vacuous ? 1 : 0;
  o.detail += std::to_string(vacuous) + " vacuous coalescence instances excluded";
  return o;
}

Outcome criterion6() {
  std::size_t checked = 0, mismatches = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      const auto rows = closed_walk_counts_per_vertex(t, 8);
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        for (int k = 0; k <= 8; ++k) {
          ++checked;
          if (rows[v][static_cast<std::size_t>(k)] != brute_force_closed_walks(t, v, k)) ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0, std::to_string(checked) + " (tree, vertex, k) triples, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome criterion7() {
  const unsigned jobs = env_jobs(1);
  std::size_t total = 0;
  bool witnesses_ok = true;
  std::string first;
  for (int n = 1; n <= 10; ++n) {
    const auto pairs = find_incomparable_pairs(n, 50, jobs);
    for (const auto& p : pairs) {
      const auto a = closed_walk_counts(p.first, 50);
      const auto b = closed_walk_counts(p.second, 50);
      const auto ku = static_cast<std::size_t>(p.k_up);
      const auto kd = static_cast<std::size_t>(p.k_down);
      witnesses_ok = witnesses_ok && a[ku] < b[ku] && a[kd] > b[kd];
      if (first.empty()) {
        first = "n=" + std::to_string(n) + " k_up=" + std::to_string(p.k_up) +
                " k_down=" + std::to_string(p.k_down);
      }
    }
    total += pairs.size();
  }
  std::size_t starlike = 0;
  for (int n = 4; n <= 10; ++n) starlike += find_incomparable_starlike_pairs(n, 50, jobs).size();
  Outcome o;
  o.pass = total > 0 && witnesses_ok && starlike == 0;
  o.detail = std::to_string(total) + " incomparable free-tree pairs for n <= 10 (first: " + first +
             "), " + std::to_string(starlike) + " among starlike trees";
  return o;
}

Outcome criterion8() {
  const Partition p({2, 3, 4});
  const Graph g = make_starlike(p).graph;
  // Bracket lambda_1, then certify the bracket with a Sturm sequence.
  LargestRootBracket bracket = spectral_radius_bracket(g);
  bracket.refine_to_width(1e-14);
  const auto sturm = sturm_sequence(squarefree_part(charpoly(g)));
  const Dyadic far = Dyadic::integer(static_cast<long long>(g.vertex_count()));
  const bool certified = sturm_count(sturm, bracket.lower(), bracket.upper()) == 1 &&
                         sturm_count(sturm, bracket.upper(), far) == 0;
  const double lambda = bracket.estimate();

  const auto m = closed_walk_counts(g, 400);
  std::vector<double> root;
  for (int k = 1; k <= 200; ++k) {
    root.push_back(std::exp(std::log(m[static_cast<std::size_t>(2 * k)].convert_to<double>()) /
                            (2.0 * k)));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < root.size(); ++i) monotone = monotone && root[i] <= root[i - 1];
  const double err = root.back() - lambda;
  // Diagnostic only: lambda_1 and -lambda_1 both contribute to even moments.
  const double halved = std::exp(std::log(m[400].convert_to<double>() / 2.0) / 400.0);

  Outcome o;
  o.pass = certified && monotone && std::abs(err) < 1e-3;
  o.detail = "lambda1=" + fmt(lambda) + (certified ? " (Sturm-certified)" : " (NOT certified)") +
             ", M_400^(1/400)=" + fmt(root.back()) + ", error " + fmt(err, 3) + ", trend " +
             (monotone ? "monotone decreasing" : "not monotone") + " over k=1..200" +
             ", k=10/50/100: " + fmt(root[9], 8) + "/" + fmt(root[49], 8) + "/" + fmt(root[99], 8) +
             "; (M_400/2)^(1/400)=" + fmt(halved);
  return o;
}

Outcome criterion9() {
  const auto t0 = Clock::now();
  const auto reports = check_all_walks_analogue(12, 40, PairMode::Consecutive, env_jobs(1));
  const SuiteSummary s = summarize(reports);
  Outcome o;
  o.pass = s.violations == 0 && s.total > 0;
  std::string first;
  for (const auto& r : reports) {
    if (!r.holds && first.empty()) {
      first = "; first violation " + r.instance + " at k=" + std::to_string(r.violation->k) + " (" +
              r.violation->lhs.str() + " > " + r.violation->rhs.str() + ")";
    }
  }
  o.detail = std::to_string(s.total) + " consecutive pairs for n <= 12, " +
             std::to_string(s.violations) + " violations, max witness " +
             (s.max_witness ? std::to_string(*s.max_witness) : "-") + ", " +
             fmt(seconds_since(t0), 3) + " s" + first;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3,
                                                        criterion4, criterion5, criterion6,
                                                        criterion7, criterion8, criterion9};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: starwalk_acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (selected.empty()) {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }
  int failures = 0;
  for (int c : selected) {
    if (c < 1 || c > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << c << "\n";
      return 2;
    }
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(c - 1)]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "AC" << c << (o.pass ? " PASS" : " FAIL") << ": " << o.detail << " ["
              << fmt(seconds_since(t0), 3) << " s]" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
