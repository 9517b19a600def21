#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "starwalk/spectra.hpp"
#include "starwalk/trees.hpp"

using namespace starwalk;

namespace {

// Cofactor expansion of det(xI - A) over polynomial entries; feasible for
// the small graphs used here.
IntPolynomial determinant_oracle(const std::vector<std::vector<IntPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPolynomial{1};
  IntPolynomial total;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<IntPolynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<IntPolynomial> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const IntPolynomial term = m[0][col] * determinant_oracle(minor);
    total = (col % 2 == 0) ? total + term : total - term;
  }
  return total;
}

IntPolynomial charpoly_oracle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = IntPolynomial{0, 1};
    for (Vertex w : g.neighbors(static_cast<Vertex>(i))) m[i][w] = IntPolynomial{-1};
  }
  return determinant_oracle(m);
}

}  // namespace

TEST_CASE("path polynomials") {
  CHECK(path_charpoly(-1).is_zero());
  CHECK(path_charpoly(0) == IntPolynomial{1});
  CHECK(path_charpoly(1) == IntPolynomial{0, 1});
  CHECK(path_charpoly(3) == IntPolynomial{0, -2, 0, 1});
  CHECK(charpoly(make_path(5)) == path_charpoly(5));
  CHECK_THROWS_AS(path_charpoly(-2), std::invalid_argument);
}

TEST_CASE("charpoly agrees with cofactor expansion") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) CHECK(charpoly(t) == charpoly_oracle(t));
  }
  const Graph c5 = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(charpoly(c5) == charpoly_oracle(c5));
  const Graph k4 = Graph::from_edges(
      4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(charpoly(k4) == IntPolynomial{-3, -8, -6, 0, 1});
}

TEST_CASE("Newton identities reproduce the charpoly") {
  for (const Graph& t : enumerate_free_trees(9)) {
    const int n = static_cast<int>(t.vertex_count());
    CHECK(charpoly_from_moments(closed_walk_counts(t, n), n) == charpoly(t));
  }
  CHECK_THROWS_AS(charpoly_from_moments(closed_walk_counts(make_path(4), 2), 4),
                  std::invalid_argument);
}

TEST_CASE("starlike factorization grid") {
  for (int c = 1; c <= 6; ++c) {
    for (int d = 1; d <= 6; ++d) {
      for (int q = 2; q <= 5; ++q) {
        std::vector<int> parts(static_cast<std::size_t>(q), d);
        parts.push_back(c);
        const Graph g = make_starlike(Partition::from_unsorted(parts)).graph;
        const FactoredCharpoly f = starlike_charpoly_factored(c, d, q);
        CHECK(f.base == path_charpoly(d));
        CHECK(f.exponent == q - 1);
        CHECK(f.expand() == charpoly(g));
      }
    }
  }
  CHECK_THROWS_AS(starlike_charpoly_factored(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(starlike_charpoly_factored(0, 1, 2), std::invalid_argument);
}

TEST_CASE("spectral radius values") {
  CHECK(spectral_radius(make_path(2), 1e-12) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spectral_radius(make_starlike(Partition({1, 1, 1})).graph, 1e-12) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(spectral_radius(make_starlike(Partition({2, 3, 4})).graph, 1e-13) ==
        doctest::Approx(2.064160090485828).epsilon(1e-13));
  for (int n = 2; n <= 20; ++n) {
    const double expected = 2.0 * std::cos(M_PI / (n + 1));
    CHECK(std::abs(spectral_radius(make_path(static_cast<std::size_t>(n)), 1e-12) - expected) <
          1e-11);
  }
  CHECK_THROWS_AS(spectral_radius(make_path(1), 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(make_path(3), 0.0), std::invalid_argument);
}

TEST_CASE("spectral radius agrees with the dense eigensolver") {
  for (const Graph& t : enumerate_free_trees(10)) {
    const auto spec = eigenvalues(t, 1e-9);
    CHECK(std::abs(spectral_radius(t, 1e-12) - spec.eigenvalues.front()) < 1e-9);
    for (std::size_t i = 0; i + 1 < spec.eigenvalues.size(); ++i) {
      CHECK(spec.eigenvalues[i] >= spec.eigenvalues[i + 1]);
    }
    // Tree spectra are symmetric about zero.
    const auto& e = spec.eigenvalues;
    for (std::size_t i = 0; i < e.size(); ++i) CHECK(std::abs(e[i] + e[e.size() - 1 - i]) < 1e-9);
  }
  CHECK_THROWS_AS(eigenvalues(make_path(4), 1e-20), std::invalid_argument);
}

TEST_CASE("starlike radius bounds") {
  // With k branches, lambda_1 < k / sqrt(k - 1).
  for (int n = 5; n <= 16; ++n) {
    for (const Partition& p : enumerate_shortlex(n - 1, 3)) {
      const double k = static_cast<double>(p.size());
      const double r = spectral_radius(make_starlike(p).graph, 1e-12);
      CHECK(r < k / std::sqrt(k - 1.0));
      CHECK(r >= std::sqrt(k) - 1e-12);  // equality for the plain star
    }
  }
  double previous = 0.0;
  for (int t = 1; t <= 30; ++t) {
    const double r = spectral_radius(make_starlike(Partition({t, t, t})).graph, 1e-12);
    CHECK(r > previous);
    previous = r;
  }
}

TEST_CASE("exact spectral radius comparison") {
  CHECK(compare_spectral_radii_exact(Partition({1, 1, 4}), Partition({1, 2, 3})) < 0);
  CHECK(compare_spectral_radii_exact(Partition({1, 2, 3}), Partition({2, 2, 2})) < 0);
  CHECK(compare_spectral_radii_exact(Partition({2, 2, 2}), Partition({2, 2, 2})) == 0);
  for (int n = 6; n <= 12; ++n) {
    const auto all = enumerate_shortlex(n - 1, 3);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      // Moment dominance forces lambda_1 to be weakly increasing.
      const auto order = compare_spectral_radii_exact(all[i], all[i + 1]);
      CHECK(order <= 0);
      const double gap = spectral_radius(make_starlike(all[i + 1]).graph, 1e-12) -
                         spectral_radius(make_starlike(all[i]).graph, 1e-12);
      if (gap > 1e-9) CHECK(order < 0);
      if (std::abs(gap) < 1e-11) CHECK(order == 0);
    }
  }
}

TEST_CASE("Estrada index") {
  const auto ee = estrada_index(make_path(2), 1e-12);
  CHECK(ee.value == doctest::Approx(2.0 * std::cosh(1.0)).epsilon(1e-12));
  CHECK(ee.error_bound > 0.0);
  CHECK(ee.error_bound < 1e-10);
}
