#pragma once

#include <compare>
#include <vector>

#include "starwalk/graph.hpp"
#include "starwalk/partition.hpp"
#include "starwalk/polynomial.hpp"
#include "starwalk/walks.hpp"

namespace starwalk {

/// Characteristic polynomial of the path P_n, from
/// P_n = x P_{n-1} - P_{n-2} with P_0 = 1 and P_{-1} = 0. Accepts n >= -1.
IntPolynomial path_charpoly(int n);

/// det(xI - A(G)). Forests use the cut-edge recurrence
/// P(G) = P(G - uv) - P(G - u - v) bottom-up over each rooted component;
/// other graphs fall back to Newton's identities on exact closed-walk counts.
IntPolynomial charpoly(const Graph& g);

/// Monic characteristic polynomial of an n-vertex graph from its closed-walk
/// counts M_0..M_n (Newton's identities).
IntPolynomial charpoly_from_moments(const MomentSequence& moments, int vertex_count);

/// P(S(c, d x q)) = P_d^(q-1) * (P_{c+d+1} - (q-1) P_c P_{d-1}).
struct FactoredCharpoly {
  IntPolynomial base;      // P_d
  int exponent = 0;        // q - 1
  IntPolynomial cofactor;  // P_{c+d+1} - (q-1) P_c P_{d-1}

  IntPolynomial expand() const { return base.pow(static_cast<unsigned>(exponent)) * cofactor; }
};

/// Throws std::invalid_argument unless q >= 2 and c, d >= 1.
FactoredCharpoly starlike_charpoly_factored(int c, int d, int q);

/// Adjacency eigenvalues in descending order.
struct Spectrum {
  std::vector<double> eigenvalues;
  double tol = 0.0;
};

/// Dense symmetric eigensolver (Eigen). Throws std::invalid_argument when tol
/// is not positive or is tighter than double precision can deliver for this
/// graph (about n * max_degree * 2^-52).
Spectrum eigenvalues(const Graph& g, double tol);

/// Largest eigenvalue to absolute accuracy tol, by exact bisection on the
/// characteristic polynomial. Throws std::invalid_argument unless g is
/// connected with at least one edge and tol > 0.
double spectral_radius(const Graph& g, double tol);

/// Exact bracket around the largest eigenvalue of g.
LargestRootBracket spectral_radius_bracket(const Graph& g);

/// Exact order of lambda_1(S(alpha)) and lambda_1(S(beta)).
std::strong_ordering compare_spectral_radii_exact(const Partition& alpha, const Partition& beta);

struct EstradaIndex {
  double value = 0.0;
  /// Propagated bound n * e^lambda_1 * tol.
  double error_bound = 0.0;
};

/// Sum of e^lambda_i over the spectrum.
EstradaIndex estrada_index(const Graph& g, double tol);

}  // namespace starwalk
