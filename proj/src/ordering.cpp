#include "starwalk/ordering.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "starwalk/parallel.hpp"
#include "starwalk/trees.hpp"

namespace starwalk {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::StrictlyLess: return "StrictlyLess";
    case Relation::Equal: return "Equal";
    case Relation::StrictlyGreater: return "StrictlyGreater";
    case Relation::Incomparable: return "Incomparable";
    case Relation::WeaklyLessUndecided: return "WeaklyLessUndecided";
    case Relation::WeaklyGreaterUndecided: return "WeaklyGreaterUndecided";
  }
  return "?";
}

Relation mirror(Relation r) {
  switch (r) {
    case Relation::StrictlyLess: return Relation::StrictlyGreater;
    case Relation::StrictlyGreater: return Relation::StrictlyLess;
    case Relation::WeaklyLessUndecided: return Relation::WeaklyGreaterUndecided;
    case Relation::WeaklyGreaterUndecided: return Relation::WeaklyLessUndecided;
    default: return r;
  }
}

DominanceVerdict compare_moments(const MomentSequence& a, const MomentSequence& b) {
  DominanceVerdict v;
  const std::size_t len = std::min(a.values.size(), b.values.size());
  v.horizon = static_cast<int>(len) - 1;
  for (std::size_t k = 0; k < len; ++k) {
    const int c = a.values[k].compare(b.values[k]);
    if (c < 0 && !v.witness_up) v.witness_up = static_cast<int>(k);
    if (c > 0 && !v.witness_down) v.witness_down = static_cast<int>(k);
    if (v.witness_up && v.witness_down) break;
  }
  if (v.witness_up && v.witness_down) {
    v.relation = Relation::Incomparable;
    // A crossing within the horizon is final.
    v.certified = true;
  } else if (v.witness_up) {
    v.relation = Relation::StrictlyLess;
    v.witness_strict = v.witness_up;
  } else if (v.witness_down) {
    v.relation = Relation::StrictlyGreater;
    v.witness_strict = v.witness_down;
  } else {
    v.relation = Relation::Equal;
  }
  return v;
}

DominanceVerdict moment_dominance(const Graph& g, const Graph& h, int max_k) {
  if (max_k < 2) throw std::invalid_argument("dominance horizon must be at least 2");
  DominanceVerdict v = compare_moments(closed_walk_counts(g, max_k), closed_walk_counts(h, max_k));
  if (v.relation == Relation::Equal) {
    // M_0..M_n fix the characteristic polynomial, hence every later moment.
    v.certified = static_cast<std::size_t>(max_k) >= g.vertex_count();
  }
  return v;
}

DominanceVerdict compare_starlike(const Partition& alpha, const Partition& beta, bool certify,
                                  int max_k) {
  if (alpha.total() != beta.total()) {
    throw std::invalid_argument("starlike comparison needs partitions of the same number: " +
                                alpha.to_string() + " vs " + beta.to_string());
  }
  if (alpha.size() < 3 || beta.size() < 3) {
    throw std::invalid_argument("starlike comparison needs at least 3 branches");
  }
  DominanceVerdict v;
  v.horizon = max_k;
  v.certified = true;
  const auto order = shortlex_compare(alpha, beta);
  v.relation = order < 0   ? Relation::StrictlyLess
               : order > 0 ? Relation::StrictlyGreater
                           : Relation::Equal;
  if (!certify) return v;

  const DominanceVerdict measured =
      moment_dominance(make_starlike(alpha).graph, make_starlike(beta).graph, max_k);
  // A strict verdict may still show a tie if K is below the first witness.
  const bool consistent =
      measured.relation == v.relation ||
      (v.relation != Relation::Equal && measured.relation == Relation::Equal);
  if (!consistent) {
    throw std::logic_error("moment counts through K=" + std::to_string(max_k) + " give " +
                           std::string(to_string(measured.relation)) + " for " +
                           alpha.descriptor() + " vs " + beta.descriptor() +
                           " but shortlex order gives " + std::string(to_string(v.relation)));
  }
  v.witness_strict = measured.witness_strict;
  v.witness_up = measured.witness_up;
  v.witness_down = measured.witness_down;
  return v;
}

std::vector<IncomparablePair> find_incomparable_pairs(const std::vector<Graph>& graphs, int max_k,
                                                      unsigned jobs) {
  if (max_k < 2) throw std::invalid_argument("dominance horizon must be at least 2");
  const auto moments = parallel_map(graphs.size(), jobs, [&](std::size_t i) {
    return closed_walk_counts(graphs[i], max_k);
  });
  std::vector<IncomparablePair> out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      const DominanceVerdict v = compare_moments(moments[i], moments[j]);
      if (v.relation == Relation::Incomparable) {
        out.push_back({graphs[i], graphs[j], *v.witness_up, *v.witness_down});
      }
    }
  }
  return out;
}

std::vector<IncomparablePair> find_incomparable_pairs(int n, int max_k, unsigned jobs) {
  if (n < 1 || n > kMaxIncomparableSearchOrder) {
    throw std::out_of_range("incomparable pair search supports 1 <= n <= " +
                            std::to_string(kMaxIncomparableSearchOrder));
  }
  return find_incomparable_pairs(enumerate_free_trees(n), max_k, jobs);
}

std::vector<IncomparablePair> find_incomparable_starlike_pairs(int n, int max_k, unsigned jobs) {
  std::vector<Graph> trees;
  if (n >= 4) {
    for (const Partition& p : enumerate_shortlex(n - 1, 3)) trees.push_back(make_starlike(p).graph);
  }
  return find_incomparable_pairs(trees, max_k, jobs);
}

}  // namespace starwalk
