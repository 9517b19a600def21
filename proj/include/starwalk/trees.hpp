#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starwalk/graph.hpp"
#include "starwalk/partition.hpp"

namespace starwalk {

/// Path on n vertices numbered 0..n-1 along the path.
Graph make_path(std::size_t n);

/// Starlike tree S(a_1,...,a_k). The center is vertex 0; branch i occupies
/// a consecutive block of ids, nearest-to-center first, branches in
/// nondecreasing length order.
struct StarlikeTree {
  Partition branches;
  Vertex center = 0;
  Graph graph;

  /// Id of the vertex at distance `depth` (1-based) along branch `branch`.
  Vertex branch_vertex(std::size_t branch, int depth) const;
};

/// For k <= 2 the result is the path realization with the center at
/// distance a_1 from an end.
StarlikeTree make_starlike(const Partition& branches);

/// G(u=v)H: vertices of g keep their ids, vertices of h other than v follow
/// in increasing order, and v is identified with u.
Graph coalescence(const Graph& g, Vertex u, const Graph& h, Vertex v);

/// Id that vertex `w` of h receives inside coalescence(g, u, h, v).
Vertex coalesced_id(const Graph& g, Vertex u, const Graph& h, Vertex v, Vertex w);

/// Attaches a pendent path with `length` new vertices at u.
Graph attach_path(const Graph& g, Vertex u, int length);

/// G(u;p,q): pendent paths of lengths p and q attached at u.
Graph attach_two_paths(const Graph& g, Vertex u, int p, int q);

/// Canonical string of a free tree (AHU encoding rooted at the center or
/// the lexicographically smaller of the two bicentral rootings). Two trees
/// are isomorphic iff their canonical forms are equal. Throws
/// std::invalid_argument for non-trees.
std::string tree_canonical_form(const Graph& tree);

bool trees_isomorphic(const Graph& a, const Graph& b);

/// Branch lengths if `tree` is a starlike tree with k >= 3 branches.
std::optional<Partition> starlike_branches(const Graph& tree);

/// One representative per isomorphism class of trees on n vertices,
/// ordered by canonical form. Supports 1 <= n <= 12; throws
/// std::out_of_range otherwise.
std::vector<Graph> enumerate_free_trees(int n);

inline constexpr int kMaxFreeTreeOrder = 12;

}  // namespace starwalk
