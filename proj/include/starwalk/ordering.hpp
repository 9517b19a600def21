#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "starwalk/graph.hpp"
#include "starwalk/partition.hpp"
#include "starwalk/walks.hpp"

namespace starwalk {

enum class Relation {
  StrictlyLess,
  Equal,
  StrictlyGreater,
  Incomparable,
  WeaklyLessUndecided,
  WeaklyGreaterUndecided,
};

std::string_view to_string(Relation r);
Relation mirror(Relation r);

/// Outcome of comparing two moment sequences through a finite horizon.
///
/// witness_up is the first k with a_k < b_k, witness_down the first k with
/// a_k > b_k. witness_strict is the witness of a strict verdict.
/// `certified` is set when the verdict holds for every k, not just k <= K:
/// ties through K >= n (the characteristic polynomials then coincide), or a
/// starlike verdict backed by the shortlex theorem.
struct DominanceVerdict {
  Relation relation = Relation::Equal;
  int horizon = 0;
  std::optional<int> witness_strict;
  std::optional<int> witness_up;
  std::optional<int> witness_down;
  bool certified = false;
};

/// Compares two exact sequences index by index through their common length.
/// A tie through the horizon is reported as Equal; strict verdicts need
/// one-sided witnesses; crossings are Incomparable.
DominanceVerdict compare_moments(const MomentSequence& a, const MomentSequence& b);

/// G vs H by closed-walk counts through K. Throws std::invalid_argument for
/// K < 2.
DominanceVerdict moment_dominance(const Graph& g, const Graph& h, int max_k);

/// Graphs with different vertex counts already differ at k = 0.
inline bool orders_differ(const Graph& g, const Graph& h) {
  return g.vertex_count() != h.vertex_count();
}

/// Verdict for S(alpha) vs S(beta) read off shortlex order. With `certify`
/// the moment sequences are also compared through max_k and any
/// disagreement throws std::logic_error. Throws std::invalid_argument when
/// the sums differ or either partition has fewer than 3 parts.
DominanceVerdict compare_starlike(const Partition& alpha, const Partition& beta, bool certify,
                                  int max_k);

struct IncomparablePair {
  Graph first;
  Graph second;
  /// First k with M_k(first) < M_k(second), and first k with the reverse.
  int k_up = 0;
  int k_down = 0;
};

/// All unordered pairs of the given graphs whose closed-walk counts cross
/// within max_k.
std::vector<IncomparablePair> find_incomparable_pairs(const std::vector<Graph>& graphs, int max_k,
                                                      unsigned jobs = 1);

/// Over all free trees on n vertices (1 <= n <= 10).
std::vector<IncomparablePair> find_incomparable_pairs(int n, int max_k, unsigned jobs = 1);

/// Over the starlike trees with k >= 3 branches on n vertices.
std::vector<IncomparablePair> find_incomparable_starlike_pairs(int n, int max_k,
                                                               unsigned jobs = 1);

inline constexpr int kMaxIncomparableSearchOrder = 10;

}  // namespace starwalk
