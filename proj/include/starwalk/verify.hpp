#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starwalk/bigint.hpp"
#include "starwalk/graph.hpp"
#include "starwalk/partition.hpp"
#include "starwalk/walks.hpp"

namespace starwalk {

struct Violation {
  /// Index where lhs <= rhs (or lhs == rhs) fails; -1 when the failure is
  /// not tied to one index, e.g. a missing strict witness.
  int k = -1;
  BigInt lhs;
  BigInt rhs;
  std::string reason;
};

/// Result of one machine check. Inequality checks are oriented so that the
/// claim reads lhs_k <= rhs_k for every k <= horizon.
struct CheckReport {
  std::string name;
  std::string instance;
  int horizon = 0;
  bool holds = true;
  std::optional<int> first_strict_witness;
  std::optional<Violation> violation;
  /// Set when a conditional statement's hypotheses failed within the horizon.
  bool vacuous = false;
  /// Whether a strict witness was demanded for `holds`.
  bool strict_required = false;
  /// Once lhs_k < rhs_k at an even k0, it stayed strict at every even k in
  /// [k0, horizon]. Observed, never assumed.
  bool strict_persistent = true;
  std::vector<CheckReport> details;
};

enum class PairMode { Consecutive, All };

/// lhs_k <= rhs_k for k <= min horizon. With require_strict the report only
/// holds if some k has lhs_k < rhs_k.
CheckReport check_inequality(std::string name, std::string instance, const MomentSequence& lhs,
                             const MomentSequence& rhs, bool require_strict);

/// lhs_k == rhs_k for every k.
CheckReport check_equality(std::string name, std::string instance, const MomentSequence& lhs,
                           const MomentSequence& rhs);

/// True if g has a simple path with `edges` edges starting at u.
bool has_path_from(const Graph& g, Vertex u, int edges);

/// G(u;p,q) < G(u;p-1,q+1). Throws std::invalid_argument unless p >= q+2,
/// q >= 0, and g is connected with an edge.
CheckReport check_li_feng(const Graph& g, Vertex u, int p, int q, int max_k);

/// S(..., a_{k-1}, a_k) < S(..., a_{k-1}+1, a_k-1) realized as a G(u;p,q)
/// pair, with the choice of G and u checked against the two starlike trees.
/// Throws std::invalid_argument unless k >= 3 and a_{k-1} <= a_k - 2.
CheckReport check_case1(const Partition& alpha, int max_k);

/// S(a_1,...,a_k) < S(1,...,1,n-k) with k ones. Throws
/// std::invalid_argument for k < 3 or alpha = (1,...,1).
CheckReport check_case3(const Partition& alpha, int max_k);

/// Coalescence monotonicity. The hypotheses H1 <= H2 and
/// M_k(H1,v1) <= M_k(H2,v2) are checked first; if either fails the report
/// is vacuous. A strict witness is required when either hypothesis is
/// strict.
CheckReport check_coalescence_lemma(const Graph& g, Vertex u, const Graph& h1, Vertex v1,
                                    const Graph& h2, Vertex v2, int max_k);

/// M_k(G) + M_k(P_{c+d+1}) - M_k(P_{c+1}) <= M_k(G(u=v)P_{d+1}). The path
/// premise is validated by search from u; a strict witness is required
/// when G has an edge outside the path.
CheckReport check_path_difference(const Graph& g, Vertex u, int c, int d, int max_k);

enum class CorollaryShape { Disjoint, Sequential };

/// Summed path-difference bound for several attached paths, given as
/// (c_i, d_i) pairs. Disjoint attaches every path at u; Sequential attaches
/// path i at the far leaf of path i-1, starting from u.
CheckReport check_corollary(CorollaryShape shape, const Graph& g, Vertex u,
                            const std::vector<std::pair<int, int>>& cd, int max_k);

/// M_k(S(a, b+1 x pq)) - M_k(S(a+1 x pq, b)) == (pq-1)(M_k(P_{b+1}) - M_k(P_{a+1})).
CheckReport check_moment_canceling(int a, int b, int pq, int max_k);

/// Expanded factorization of P(S(c, d x q)) against the direct charpoly.
CheckReport check_factorization(int c, int d, int q);

/// f = (p+q-1)(b-a) + b - p.
long long case2_f(int a, int b, int p, int q);

/// The Case II step with a = a_j, b = a_k - 1, p parts equal to b and q
/// parts equal to b+1 after `prefix`. Details hold the total-moment
/// inequality, the center-rooted inequality, the composed inequality (for a
/// nonempty prefix) and the two intermediate bounds. The case b = a+1,
/// q = 1 is routed to check_li_feng.
CheckReport check_case2(int a, int b, int p, int q, const std::vector<int>& prefix, int max_k);

/// Starlike sweep over n = 4..n_max: S(alpha) < S(beta) for shortlex
/// neighbours or for every pair alpha < beta.
std::vector<CheckReport> verify_theorem(int n_max, int max_k, PairMode pairs, unsigned jobs = 1);

/// The same sweep with all-walk counts W_k.
std::vector<CheckReport> check_all_walks_analogue(int n_max, int max_k,
                                                  PairMode pairs = PairMode::Consecutive,
                                                  unsigned jobs = 1);

/// P_n < S(1,1,n-3) < S(1,2,n-4) < ... < S(1, floor((n-2)/2), ceil((n-2)/2)).
CheckReport check_initial_chain(int n, int max_k);

/// Parameterized instances of every lemma, corollary and proposition.
std::vector<CheckReport> inequality_suite(int max_k, unsigned jobs = 1);

/// Moment-canceling identities and charpoly factorizations.
std::vector<CheckReport> identity_suite(int max_k, unsigned jobs = 1);

enum class Suite { Quick, Identities, Inequalities, Theorem, AllWalks, Full };

/// Reports sorted by (name, instance), independent of `jobs`.
std::vector<CheckReport> run_suite(Suite suite, int n_max, int max_k, unsigned jobs = 1);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t holding = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  std::optional<int> max_witness;
};

SuiteSummary summarize(const std::vector<CheckReport>& reports);

void sort_reports(std::vector<CheckReport>& reports);

}  // namespace starwalk
