#include "starwalk/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "starwalk/trees.hpp"

namespace starwalk {

IntPolynomial path_charpoly(int n) {
  if (n < -1) throw std::invalid_argument("path_charpoly needs n >= -1");
  if (n == -1) return {};
  IntPolynomial prev;                         // P_{-1}
  IntPolynomial cur = IntPolynomial::constant(1);  // P_0
  for (int i = 1; i <= n; ++i) {
    IntPolynomial next = cur.times_power_of_x(1) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {

IntPolynomial forest_charpoly(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // with[v] = P(T_v), without[v] = P(T_v - v) for the subtree T_v below v.
  std::vector<IntPolynomial> with(n), without(n);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> parent(n);
  IntPolynomial result = IntPolynomial::constant(1);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> order;
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    parent[root] = root;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          stack.push_back(w);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Vertex v = *it;
      std::vector<Vertex> kids;
      for (Vertex w : g.neighbors(v)) {
        if (parent[w] == v) kids.push_back(w);
      }
      // Prefix and suffix products of the children's P(T_c).
      const std::size_t m = kids.size();
      std::vector<IntPolynomial> prefix(m + 1), suffix(m + 1);
      prefix[0] = IntPolynomial::constant(1);
      for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * with[kids[i]];
      suffix[m] = IntPolynomial::constant(1);
      for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * with[kids[i]];
      // Cutting each edge v-c in turn: P(T_v) = x prod P(T_c) - sum_c P(T_c - c) prod_{c' != c} P(T_c').
      IntPolynomial w = prefix[m].times_power_of_x(1);
      for (std::size_t i = 0; i < m; ++i) w -= without[kids[i]] * (prefix[i] * suffix[i + 1]);
      without[v] = std::move(prefix[m]);
      with[v] = std::move(w);
      for (Vertex c : kids) {
        with[c] = {};
        without[c] = {};
      }
    }
    result *= with[root];
  }
  return result;
}

}  // namespace

IntPolynomial charpoly_from_moments(const MomentSequence& moments, int vertex_count) {
  if (vertex_count < 0 || moments.horizon() < vertex_count) {
    throw std::invalid_argument("need closed-walk counts M_0..M_n");
  }
  // e_k: elementary symmetric functions of the eigenvalues.
  std::vector<BigInt> e(static_cast<std::size_t>(vertex_count) + 1);
  e[0] = 1;
  for (int k = 1; k <= vertex_count; ++k) {
    BigInt s = 0;
    for (int i = 1; i <= k; ++i) {
      const BigInt term = e[static_cast<std::size_t>(k - i)] * moments[static_cast<std::size_t>(i)];
      if (i % 2 == 1) s += term;
      else s -= term;
    }
    e[static_cast<std::size_t>(k)] = s / k;
  }
  std::vector<BigInt> coeffs(static_cast<std::size_t>(vertex_count) + 1);
  for (int k = 0; k <= vertex_count; ++k) {
    BigInt c = e[static_cast<std::size_t>(k)];
    if (k % 2 == 1) c = -c;
    coeffs[static_cast<std::size_t>(vertex_count - k)] = std::move(c);
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial charpoly(const Graph& g) {
  if (g.is_forest()) return forest_charpoly(g);
  const int n = static_cast<int>(g.vertex_count());
  return charpoly_from_moments(closed_walk_counts(g, n), n);
}

FactoredCharpoly starlike_charpoly_factored(int c, int d, int q) {
  if (q < 2) throw std::invalid_argument("factorization needs q >= 2");
  if (c < 1 || d < 1) throw std::invalid_argument("factorization needs c, d >= 1");
  FactoredCharpoly out;
  out.base = path_charpoly(d);
  out.exponent = q - 1;
  out.cofactor = path_charpoly(c + d + 1) -
                 BigInt(q - 1) * (path_charpoly(c) * path_charpoly(d - 1));
  return out;
}

Spectrum eigenvalues(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  const double achievable = 16.0 * std::numeric_limits<double>::epsilon() *
                            static_cast<double>(std::max<Eigen::Index>(n, 1)) *
                            static_cast<double>(std::max<std::size_t>(max_degree, 1));
  if (tol < achievable) {
    throw std::invalid_argument("tolerance below double-precision accuracy for this graph");
  }
  Spectrum out{{}, tol};
  if (n == 0) return out;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + n);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

LargestRootBracket spectral_radius_bracket(const Graph& g) {
  if (g.edge_count() == 0 || !g.is_connected()) {
    throw std::invalid_argument("spectral radius needs a connected graph with an edge");
  }
  return LargestRootBracket(charpoly(g));
}

double spectral_radius(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  LargestRootBracket bracket = spectral_radius_bracket(g);
  // Refining past tol is cheap once the root is isolated; go to double precision.
  bracket.refine_to_width(std::min(tol, 1e-15));
  return bracket.estimate();
}

std::strong_ordering compare_spectral_radii_exact(const Partition& alpha, const Partition& beta) {
  const IntPolynomial pa = charpoly(make_starlike(alpha).graph);
  const IntPolynomial pb = charpoly(make_starlike(beta).graph);
  return compare_largest_roots(pa, pb);
}

EstradaIndex estrada_index(const Graph& g, double tol) {
  const Spectrum s = eigenvalues(g, tol);
  EstradaIndex out;
  // Sum smallest terms first.
  for (auto it = s.eigenvalues.rbegin(); it != s.eigenvalues.rend(); ++it) out.value += std::exp(*it);
  const double top = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.front();
  out.error_bound = static_cast<double>(g.vertex_count()) * std::exp(top) * tol;
  return out;
}

}  // namespace starwalk
