#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starwalk/bigint.hpp"
#include "starwalk/graph.hpp"

namespace starwalk {

enum class WalkKind { ClosedTotal, ClosedAtVertex, AllWalks };

std::string_view to_string(WalkKind kind);

/// Exact walk counts indexed by length k = 0..horizon().
struct MomentSequence {
  WalkKind kind = WalkKind::ClosedTotal;
  std::vector<BigInt> values;

  int horizon() const noexcept { return static_cast<int>(values.size()) - 1; }
  const BigInt& operator[](std::size_t k) const { return values.at(k); }

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

/// M_k(G) = trace(A^k) for k = 0..max_k, by propagating the indicator vector
/// of every start vertex through the adjacency lists. Start vertices are
/// split across `jobs` threads; the result does not depend on `jobs`.
MomentSequence closed_walk_counts(const Graph& g, int max_k, unsigned jobs = 1);

/// M_k(G, v) = (A^k)_{vv}. Throws std::invalid_argument for a bad vertex.
MomentSequence closed_walk_counts_at(const Graph& g, Vertex v, int max_k);

/// M_k(G, v) for every vertex at once; row v is closed_walk_counts_at(g, v).
std::vector<MomentSequence> closed_walk_counts_per_vertex(const Graph& g, int max_k,
                                                          unsigned jobs = 1);

/// W_k(G) = sum of all entries of A^k.
MomentSequence all_walk_counts(const Graph& g, int max_k);

/// Counts explicit vertex sequences v = w_0, ..., w_k = v. Intended as an
/// oracle; limited to n <= 8 and k <= 10 (std::out_of_range otherwise).
std::uint64_t brute_force_closed_walks(const Graph& g, Vertex v, int k);

inline constexpr std::size_t kBruteForceMaxVertices = 8;
inline constexpr int kBruteForceMaxLength = 10;

}  // namespace starwalk
