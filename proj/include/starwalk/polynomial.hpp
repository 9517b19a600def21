#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "starwalk/bigint.hpp"

namespace starwalk {

/// Univariate polynomial with exact integer coefficients, ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long long> ascending);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, int degree);
  /// The polynomial x.
  static IntPolynomial variable() { return monomial(1, 1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  BigInt coefficient(int i) const;
  const BigInt& leading() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
  IntPolynomial operator-() const;

  IntPolynomial pow(unsigned exponent) const;
  IntPolynomial derivative() const;
  /// Multiplies by x^shift.
  IntPolynomial times_power_of_x(int shift) const;
  /// Greatest common divisor of the coefficients (nonnegative).
  BigInt content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive() const;

  std::string to_string(char variable = 'x') const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct PolynomialDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Division by a polynomial whose leading coefficient is +-1; exact over
/// the integers. Throws std::invalid_argument otherwise.
PolynomialDivision divide_by_unit_leading(const IntPolynomial& a, const IntPolynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b, with the multiplier's sign made
/// positive so that sign sequences are preserved.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (zero if both are zero).
IntPolynomial polynomial_gcd(IntPolynomial a, IntPolynomial b);

/// p / gcd(p, p'), primitive.
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Exact dyadic rational numerator / 2^scale.
struct Dyadic {
  BigInt numerator;
  unsigned scale = 0;

  static Dyadic integer(BigInt value) { return Dyadic{std::move(value), 0}; }
  /// Nearest dyadic with the given scale (round to nearest).
  static Dyadic from_double(double value, unsigned scale);
  double to_double() const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return (a <=> b) == 0; }
};

Dyadic midpoint(const Dyadic& a, const Dyadic& b);

/// Sign (-1, 0, 1) of p at an exact dyadic point.
int sign_at(const IntPolynomial& p, const Dyadic& x);

/// Integer polynomial R with R(z) = 2^(scale*deg) * p(x + z / 2^scale); its
/// positive roots correspond to the roots of p above x.
IntPolynomial taylor_shift(const IntPolynomial& p, const Dyadic& x);

std::size_t sign_variations(std::span<const BigInt> coefficients);

/// Number of roots of p strictly greater than x, counted with multiplicity,
/// via Descartes' rule of signs. Exact only when every root of p is real
/// (true for characteristic polynomials of symmetric matrices).
std::size_t count_roots_above(const IntPolynomial& p, const Dyadic& x);

/// Canonical Sturm sequence p, p', -rem(...), ... with primitive scaling.
std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p);

/// Number of distinct real roots in (lo, hi] from a Sturm sequence.
std::size_t sturm_count(std::span<const IntPolynomial> sequence, const Dyadic& lo,
                        const Dyadic& hi);

/// Encloses the largest root r of a real-rooted polynomial in (lower, upper].
/// Bisection uses Descartes counts until r is the only root above `lower`,
/// then sign tests at midpoints.
class LargestRootBracket {
 public:
  /// Throws std::invalid_argument for constant polynomials.
  explicit LargestRootBracket(IntPolynomial p);

  const IntPolynomial& polynomial() const noexcept { return p_; }
  const Dyadic& lower() const noexcept { return lower_; }
  const Dyadic& upper() const noexcept { return upper_; }
  /// True once the root is known exactly (lower == upper == r).
  bool exact() const noexcept { return exact_; }
  /// True once r is the only root of p above lower().
  bool isolated() const noexcept { return roots_above_lower_ == 1; }
  /// Upper minus lower as a double.
  double width() const;

  void bisect();
  void refine_to_width(double width);
  double estimate() const;

 private:
  IntPolynomial p_;
  Dyadic lower_;
  Dyadic upper_;
  std::size_t roots_above_lower_ = 0;
  int leading_sign_ = 1;
  bool exact_ = false;
};

/// Exact comparison of the largest roots of two real-rooted polynomials.
std::strong_ordering compare_largest_roots(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace starwalk
