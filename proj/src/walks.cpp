#include "starwalk/walks.hpp"

#include <stdexcept>
#include <string>

#include "starwalk/parallel.hpp"

namespace starwalk {

std::string_view to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::ClosedTotal: return "closed_total";
    case WalkKind::ClosedAtVertex: return "closed_at_vertex";
    case WalkKind::AllWalks: return "all_walks";
  }
  return "?";
}

namespace {

// Flat neighbor arrays; the inner loop touches nothing else.
struct Csr {
  std::vector<std::size_t> offset;
  std::vector<Vertex> target;

  explicit Csr(const Graph& g) : offset(g.vertex_count() + 1, 0) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      offset[u + 1] = offset[u] + g.degree(u);
      for (Vertex w : g.neighbors(u)) target.push_back(w);
    }
  }
  std::size_t size() const { return offset.size() - 1; }
};

void check_horizon(int max_k) {
  if (max_k < 0) throw std::invalid_argument("walk horizon must be nonnegative");
}

// One step x <- A x.
void step(const Csr& csr, const std::vector<BigInt>& cur, std::vector<BigInt>& next) {
  const std::size_t n = csr.size();
  for (std::size_t u = 0; u < n; ++u) {
    BigInt& acc = next[u];
    acc = 0;
    for (std::size_t e = csr.offset[u]; e < csr.offset[u + 1]; ++e) {
      const BigInt& x = cur[csr.target[e]];
      if (!x.is_zero()) acc += x;
    }
  }
}

MomentSequence closed_at(const Csr& csr, Vertex v, int max_k) {
  MomentSequence out{WalkKind::ClosedAtVertex, {}};
  out.values.reserve(static_cast<std::size_t>(max_k) + 1);
  std::vector<BigInt> cur(csr.size()), next(csr.size());
  cur[v] = 1;
  out.values.push_back(1);
  for (int k = 1; k <= max_k; ++k) {
    step(csr, cur, next);
    cur.swap(next);
    out.values.push_back(cur[v]);
  }
  return out;
}

}  // namespace

MomentSequence closed_walk_counts_at(const Graph& g, Vertex v, int max_k) {
  check_horizon(max_k);
  if (!g.contains(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  }
  return closed_at(Csr(g), v, max_k);
}

std::vector<MomentSequence> closed_walk_counts_per_vertex(const Graph& g, int max_k,
                                                          unsigned jobs) {
  check_horizon(max_k);
  const Csr csr(g);
  return parallel_map(g.vertex_count(), jobs, [&](std::size_t v) {
    return closed_at(csr, static_cast<Vertex>(v), max_k);
  });
}

MomentSequence closed_walk_counts(const Graph& g, int max_k, unsigned jobs) {
  check_horizon(max_k);
  MomentSequence out{WalkKind::ClosedTotal,
                     std::vector<BigInt>(static_cast<std::size_t>(max_k) + 1)};
  for (const auto& row : closed_walk_counts_per_vertex(g, max_k, jobs)) {
    for (std::size_t k = 0; k < row.values.size(); ++k) out.values[k] += row.values[k];
  }
  return out;
}

MomentSequence all_walk_counts(const Graph& g, int max_k) {
  check_horizon(max_k);
  const Csr csr(g);
  MomentSequence out{WalkKind::AllWalks, {}};
  out.values.reserve(static_cast<std::size_t>(max_k) + 1);
  std::vector<BigInt> cur(csr.size(), BigInt(1)), next(csr.size());
  auto total = [&] {
    BigInt s = 0;
    for (const auto& x : cur) s += x;
    return s;
  };
  out.values.push_back(total());
  for (int k = 1; k <= max_k; ++k) {
    step(csr, cur, next);
    cur.swap(next);
    out.values.push_back(total());
  }
  return out;
}

namespace {

std::uint64_t count_walks_to(const Graph& g, Vertex cur, Vertex target, int left) {
  if (left == 0) return cur == target ? 1 : 0;
  std::uint64_t total = 0;
  for (Vertex w : g.neighbors(cur)) total += count_walks_to(g, w, target, left - 1);
  return total;
}

}  // namespace

std::uint64_t brute_force_closed_walks(const Graph& g, Vertex v, int k) {
  if (g.vertex_count() > kBruteForceMaxVertices || k < 0 || k > kBruteForceMaxLength) {
    throw std::out_of_range("brute force walk enumeration limited to n <= 8, 0 <= k <= 10");
  }
  if (!g.contains(v)) throw std::out_of_range("vertex not in graph");
  return count_walks_to(g, v, v, k);
}

}  // namespace starwalk
