#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "starwalk/trees.hpp"

using namespace starwalk;

namespace {

Graph graph_of(std::size_t n, std::vector<Edge> edges) {
  return Graph::from_edges(n, edges);
}

// Rooted encoding minimized over every root; slower than the library's
// center-based form but shares no code with it.
std::string min_root_encoding(const Graph& t) {
  std::function<std::string(Vertex, Vertex)> enc = [&](Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(v)) {
      if (w != parent) kids.push_back(enc(w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (Vertex r = 0; r < t.vertex_count(); ++r) {
    std::string s = enc(r, r);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

Graph from_pruefer(const std::vector<int>& seq, int n) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) ++degree[static_cast<std::size_t>(x)];
  std::vector<Edge> edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(x));
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(x)];
        break;
      }
    }
  }
  std::vector<Vertex> rest;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) rest.push_back(static_cast<Vertex>(v));
  }
  edges.emplace_back(rest[0], rest[1]);
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

// Number of isomorphism classes of labelled trees on n vertices.
std::size_t pruefer_class_count(int n) {
  if (n <= 2) return 1;
  std::set<std::string> classes;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    classes.insert(min_root_encoding(from_pruefer(seq, n)));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return classes.size();
}

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("paths") {
  const Graph p4 = make_path(4);
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.is_tree());
  CHECK(p4.degree_sequence() == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(make_path(1).edge_count() == 0);
  CHECK(make_path(1).is_tree());
}

TEST_CASE("starlike trees") {
  const StarlikeTree s = make_starlike(Partition({1, 2, 3}));
  CHECK(s.graph.vertex_count() == 7);
  CHECK(s.graph.is_tree());
  CHECK(s.graph.degree(s.center) == 3);
  CHECK(s.branch_vertex(0, 1) == 1);
  CHECK(s.branch_vertex(2, 3) == 6);
  CHECK(s.graph.degree(s.branch_vertex(2, 3)) == 1);
  CHECK(s.graph.adjacent(s.center, s.branch_vertex(1, 1)));
  CHECK(s.graph.adjacent(s.branch_vertex(1, 1), s.branch_vertex(1, 2)));
  CHECK_THROWS(s.branch_vertex(0, 2));

  for (int n = 4; n <= 12; ++n) {
    for (const Partition& p : enumerate_shortlex(n - 1, 3)) {
      const Graph& g = make_starlike(p).graph;
      CHECK(g.vertex_count() == static_cast<std::size_t>(n));
      CHECK(g.is_tree());
      auto back = starlike_branches(g);
      REQUIRE(back);
      CHECK(*back == p);
    }
  }
  // Two branches realize a path, centered a_1 from one end.
  const StarlikeTree two = make_starlike(Partition({2, 3}));
  CHECK(trees_isomorphic(two.graph, make_path(6)));
  CHECK_FALSE(starlike_branches(make_path(6)));
}

TEST_CASE("coalescence and pendent paths") {
  const Graph p3 = make_path(3);
  // P3 glued to P3 at the middle vertices is S(1,1,1,1).
  const Graph star = coalescence(p3, 1, p3, 1);
  CHECK(star.vertex_count() == 5);
  CHECK(trees_isomorphic(star, make_starlike(Partition({1, 1, 1, 1})).graph));
  CHECK(coalesced_id(p3, 1, p3, 1, 1) == 1);
  CHECK(coalesced_id(p3, 1, p3, 1, 0) == 3);
  CHECK(coalesced_id(p3, 1, p3, 1, 2) == 4);

  // Ends glued give a longer path.
  CHECK(trees_isomorphic(coalescence(p3, 2, make_path(4), 0), make_path(6)));

  const Graph extended = attach_path(p3, 2, 3);
  CHECK(extended == make_path(6));
  CHECK(extended.degree(5) == 1);
  CHECK(attach_path(p3, 1, 0) == p3);

  const Graph g = attach_two_paths(make_path(1), 0, 2, 3);
  CHECK(trees_isomorphic(g, make_path(6)));
  const Graph h = attach_two_paths(make_path(2), 0, 1, 2);
  CHECK(trees_isomorphic(h, make_starlike(Partition({1, 1, 2})).graph));
  CHECK_THROWS_AS(attach_path(p3, 7, 1), std::invalid_argument);
}

TEST_CASE("free tree counts") {
  const std::vector<std::size_t> known{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto trees = enumerate_free_trees(n);
    CHECK(trees.size() == known[static_cast<std::size_t>(n - 1)]);
  }
  CHECK_THROWS_AS(enumerate_free_trees(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_free_trees(13), std::out_of_range);
}

TEST_CASE("free tree enumeration agrees with Pruefer classes") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const auto trees = enumerate_free_trees(n);
    CHECK(trees.size() == pruefer_class_count(n));
    std::set<std::string> seen;
    for (const Graph& t : trees) {
      CHECK(t.vertex_count() == static_cast<std::size_t>(n));
      CHECK(t.is_tree());
      seen.insert(min_root_encoding(t));
    }
    CHECK(seen.size() == trees.size());
  }
}

TEST_CASE("canonical form matches brute-force isomorphism") {
  for (int n = 2; n <= 7; ++n) {
    const auto trees = enumerate_free_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      for (std::size_t j = 0; j < trees.size(); ++j) {
        CHECK(trees_isomorphic(trees[i], trees[j]) ==
              brute_force_isomorphic(trees[i], trees[j]));
      }
    }
  }
  // Relabelling does not change the form.
  const Graph a = graph_of(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  const Graph b = graph_of(5, {{4, 3}, {3, 0}, {3, 2}, {2, 1}});
  CHECK(tree_canonical_form(a) == tree_canonical_form(b));
  CHECK_THROWS_AS(tree_canonical_form(graph_of(3, {{0, 1}})), std::invalid_argument);
}
