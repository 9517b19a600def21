#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace starwalk {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with sorted neighbor lists. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Throws std::invalid_argument on out-of-range ids, loops or repeated edges.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool contains(Vertex v) const noexcept { return v < adjacency_.size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degree_sequence() const;

  bool is_connected() const;
  bool is_forest() const;
  bool is_tree() const { return is_connected() && is_forest(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace starwalk
