#include "starwalk/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace starwalk {

Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph::from_edges(n, edges);
}

Vertex StarlikeTree::branch_vertex(std::size_t branch, int depth) const {
  if (branch >= branches.size() || depth < 1 || depth > branches[branch]) {
    throw std::out_of_range("branch vertex out of range");
  }
  Vertex first = 1;
  for (std::size_t i = 0; i < branch; ++i) first += static_cast<Vertex>(branches[i]);
  return first + static_cast<Vertex>(depth - 1);
}

StarlikeTree make_starlike(const Partition& branches) {
  const auto n = static_cast<std::size_t>(1 + branches.total());
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  Vertex next = 1;
  for (int len : branches.parts()) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return StarlikeTree{branches, 0, Graph::from_edges(n, edges)};
}

Vertex coalesced_id(const Graph& g, Vertex u, const Graph& h, Vertex v, Vertex w) {
  if (!g.contains(u) || !h.contains(v) || !h.contains(w)) {
    throw std::invalid_argument("coalescence vertex out of range");
  }
  if (w == v) return u;
  const auto base = static_cast<Vertex>(g.vertex_count());
  return base + (w < v ? w : w - 1);
}

Graph coalescence(const Graph& g, Vertex u, const Graph& h, Vertex v) {
  if (!g.contains(u)) throw std::invalid_argument("coalescence: vertex u not in g");
  if (!h.contains(v)) throw std::invalid_argument("coalescence: vertex v not in h");
  std::vector<Edge> edges = g.edges();
  for (auto [a, b] : h.edges()) {
    edges.emplace_back(coalesced_id(g, u, h, v, a), coalesced_id(g, u, h, v, b));
  }
  return Graph::from_edges(g.vertex_count() + h.vertex_count() - 1, edges);
}

Graph attach_path(const Graph& g, Vertex u, int length) {
  if (!g.contains(u)) throw std::invalid_argument("attach_path: vertex out of range");
  if (length < 0) throw std::invalid_argument("attach_path: negative length");
  if (length == 0) return g;
  return coalescence(g, u, make_path(static_cast<std::size_t>(length) + 1), 0);
}

Graph attach_two_paths(const Graph& g, Vertex u, int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("attach_two_paths: negative length");
  return attach_path(attach_path(g, u, p), u, q);
}

namespace {

std::string rooted_code(const Graph& t, Vertex root) {
  // Iterative post-order so long paths do not recurse deeply.
  const std::size_t n = t.vertex_count();
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, root);
  order.reserve(n);
  std::vector<Vertex> stack{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (Vertex y : t.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    std::string c = "(";
    for (auto& k : kids) c += k;
    c += ')';
    code[*it] = std::move(c);
    if (*it != root) child_codes[parent[*it]].push_back(code[*it]);
  }
  return code[root];
}

std::vector<Vertex> tree_centers(const Graph& t) {
  const std::size_t n = t.vertex_count();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (Vertex v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<std::size_t> deg = t.degree_sequence();
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (!tree.is_tree()) throw std::invalid_argument("canonical form requires a tree");
  if (tree.vertex_count() == 0) return {};
  std::string best;
  for (Vertex c : tree_centers(tree)) {
    std::string code = rooted_code(tree, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

bool trees_isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         tree_canonical_form(a) == tree_canonical_form(b);
}

std::optional<Partition> starlike_branches(const Graph& tree) {
  if (!tree.is_tree()) return std::nullopt;
  std::optional<Vertex> center;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) >= 3) {
      if (center) return std::nullopt;
      center = v;
    }
  }
  if (!center) return std::nullopt;
  std::vector<int> lengths;
  for (Vertex first : tree.neighbors(*center)) {
    int len = 1;
    Vertex prev = *center;
    Vertex cur = first;
    while (tree.degree(cur) == 2) {
      const auto nb = tree.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

std::vector<Graph> enumerate_free_trees(int n) {
  if (n < 1 || n > kMaxFreeTreeOrder) {
    throw std::out_of_range("enumerate_free_trees supports 1 <= n <= " +
                            std::to_string(kMaxFreeTreeOrder));
  }
  std::map<std::string, Graph> level{{tree_canonical_form(Graph(1)), Graph(1)}};
  for (int order = 2; order <= n; ++order) {
    std::map<std::string, Graph> next;
    for (const auto& [code, tree] : level) {
      for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        Graph grown = attach_path(tree, v, 1);
        std::string c = tree_canonical_form(grown);
        next.try_emplace(std::move(c), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [code, tree] : level) out.push_back(std::move(tree));
  return out;
}

}  // namespace starwalk
