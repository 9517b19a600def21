#include "starwalk/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace starwalk {

namespace mp = boost::multiprecision;

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::times_power_of_x(int shift) const {
  if (shift < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(shift));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) g = mp::gcd(g, mp::abs(c));
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  IntPolynomial out = *this;
  if (g != 1) {
    for (auto& c : out.coeffs_) c /= g;
  }
  return out;
}

std::string IntPolynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    const BigInt mag = mp::abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += variable;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

PolynomialDivision divide_by_unit_leading(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero() || mp::abs(b.leading()) != 1) {
    throw std::invalid_argument("divisor must have leading coefficient +-1");
  }
  const int db = b.degree();
  if (a.degree() < db) return {IntPolynomial{}, a};
  std::vector<BigInt> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const auto bc = b.coefficients();
  const bool flip = b.leading() < 0;
  for (int i = a.degree(); i >= db; --i) {
    BigInt t = rem[static_cast<std::size_t>(i)];
    if (t.is_zero()) continue;
    if (flip) t = -t;
    quot[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  const BigInt lc = mp::abs(b.leading());
  const int sign = b.leading() < 0 ? -1 : 1;
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const auto bc = b.coefficients();
  for (int top = a.degree(); top >= db; --top) {
    BigInt t = r[static_cast<std::size_t>(top)];
    if (sign < 0) t = -t;
    // r <- |lc| r - sign(lc) lead(r) x^(top-db) b; the multiplier stays positive.
    for (auto& c : r) c *= lc;
    if (!t.is_zero()) {
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(top - db + j)] -= t * bc[static_cast<std::size_t>(j)];
    }
    r.pop_back();
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial polynomial_gcd(IntPolynomial a, IntPolynomial b) {
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.primitive();
  const IntPolynomial g = polynomial_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive();
  // g is primitive and divides the primitive part of p, so by Gauss's lemma
  // the quotient has integer coefficients and long division stays exact.
  const IntPolynomial pp = p.primitive();
  const int dg = g.degree();
  std::vector<BigInt> rem(pp.coefficients().begin(), pp.coefficients().end());
  std::vector<BigInt> quot(static_cast<std::size_t>(pp.degree() - dg) + 1);
  const BigInt& lc = g.leading();
  const auto gc = g.coefficients();
  for (int top = pp.degree(); top >= dg; --top) {
    const BigInt t = rem[static_cast<std::size_t>(top)] / lc;
    quot[static_cast<std::size_t>(top - dg)] = t;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(top - dg + j)] -= t * gc[static_cast<std::size_t>(j)];
  }
  return IntPolynomial(std::move(quot)).primitive();
}

// --- dyadic points ------------------------------------------------------------

Dyadic Dyadic::from_double(double value, unsigned scale) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite dyadic");
  return Dyadic{BigInt(std::nearbyint(std::ldexp(value, static_cast<int>(scale)))), scale};
}

double Dyadic::to_double() const {
  BigInt mag = mp::abs(numerator);
  int scale_left = static_cast<int>(scale);
  if (!mag.is_zero()) {
    const auto bits = static_cast<int>(mp::msb(mag));
    if (bits > 62) {
      mag >>= (bits - 62);
      scale_left -= bits - 62;
    }
  }
  const double v = std::ldexp(mag.convert_to<double>(), -scale_left);
  return numerator < 0 ? -v : v;
}

std::string Dyadic::to_string() const {
  return numerator.str() + "/2^" + std::to_string(scale);
}

namespace {
std::strong_ordering three_way(const BigInt& a, const BigInt& b) {
  const int c = a.compare(b);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}
}  // namespace

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.scale == b.scale) return three_way(a.numerator, b.numerator);
  if (a.scale < b.scale) return three_way(a.numerator << (b.scale - a.scale), b.numerator);
  return three_way(a.numerator, b.numerator << (a.scale - b.scale));
}

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  const unsigned s = std::max(a.scale, b.scale);
  BigInt sum = (a.numerator << (s - a.scale)) + (b.numerator << (s - b.scale));
  return Dyadic{std::move(sum), s + 1};
}

int sign_at(const IntPolynomial& p, const Dyadic& x) {
  if (p.is_zero()) return 0;
  const auto c = p.coefficients();
  const int d = p.degree();
  BigInt acc = c[static_cast<std::size_t>(d)];
  for (int i = d - 1; i >= 0; --i) {
    acc *= x.numerator;
    const BigInt& ci = c[static_cast<std::size_t>(i)];
    if (!ci.is_zero()) acc += ci << (x.scale * static_cast<unsigned>(d - i));
  }
  return acc.sign();
}

IntPolynomial taylor_shift(const IntPolynomial& p, const Dyadic& x) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  std::vector<BigInt> a(p.coefficients().begin(), p.coefficients().end());
  for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i)] <<= x.scale * static_cast<unsigned>(d - i);
  if (!x.numerator.is_zero()) {
    for (int i = 0; i < d; ++i) {
      for (int j = d - 1; j >= i; --j) {
        a[static_cast<std::size_t>(j)] += x.numerator * a[static_cast<std::size_t>(j + 1)];
      }
    }
  }
  return IntPolynomial(std::move(a));
}

std::size_t sign_variations(std::span<const BigInt> coefficients) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : coefficients) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t count_roots_above(const IntPolynomial& p, const Dyadic& x) {
  const IntPolynomial shifted = taylor_shift(p, x);
  return sign_variations(shifted.coefficients());
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    IntPolynomial r = -pseudo_remainder(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    const BigInt g = r.content();
    if (g != 1) {
      std::vector<BigInt> scaled(r.coefficients().begin(), r.coefficients().end());
      for (auto& c : scaled) c /= g;
      r = IntPolynomial(std::move(scaled));
    }
    seq.push_back(std::move(r));
  }
  return seq;
}

std::size_t sturm_count(std::span<const IntPolynomial> sequence, const Dyadic& lo,
                        const Dyadic& hi) {
  auto variations_at = [&](const Dyadic& x) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& s : sequence) {
      const int v = sign_at(s, x);
      if (v == 0) continue;
      if (last != 0 && v != last) ++changes;
      last = v;
    }
    return changes;
  };
  const std::size_t a = variations_at(lo);
  const std::size_t b = variations_at(hi);
  return a >= b ? a - b : 0;
}

// --- largest root ---------------------------------------------------------------

LargestRootBracket::LargestRootBracket(IntPolynomial p) : p_(std::move(p)) {
  if (p_.degree() < 1) throw std::invalid_argument("largest root of a constant polynomial");
  // Fujiwara bound: every root r has |r| <= 2 max_i |c_{d-i} / c_d|^(1/i).
  // With bit lengths, |c_{d-i} / c_d| < 2^(len_{d-i} - len_d + 1).
  const auto bits = [](const BigInt& x) -> long long {
    return x == 0 ? 0 : static_cast<long long>(mp::msb(mp::abs(x))) + 1;
  };
  const int d = p_.degree();
  const long long lead_bits = bits(p_.leading());
  long long exponent = 0;
  for (int i = 1; i <= d; ++i) {
    const BigInt& c = p_.coefficient(d - i);
    if (c == 0) continue;
    const long long b = bits(c) - lead_bits + 1;
    const long long e = b <= 0 ? 0 : (b + i - 1) / i;
    exponent = std::max(exponent, e);
  }
  const BigInt power = BigInt(1) << static_cast<unsigned>(exponent + 1);
  lower_ = Dyadic::integer(-power);
  upper_ = Dyadic::integer(power);
  roots_above_lower_ = static_cast<std::size_t>(p_.degree());
  leading_sign_ = p_.leading().sign();
  if (roots_above_lower_ == 1 && sign_at(p_, upper_) == 0) {
    lower_ = upper_;
    exact_ = true;
  }
}

double LargestRootBracket::width() const {
  if (exact_) return 0.0;
  const unsigned s = std::max(lower_.scale, upper_.scale);
  Dyadic diff{(upper_.numerator << (s - upper_.scale)) - (lower_.numerator << (s - lower_.scale)), s};
  return diff.to_double();
}

void LargestRootBracket::bisect() {
  if (exact_) return;
  Dyadic mid = midpoint(lower_, upper_);
  if (isolated()) {
    const int s = sign_at(p_, mid);
    if (s == 0) {
      lower_ = upper_ = std::move(mid);
      exact_ = true;
    } else if (s == leading_sign_) {
      upper_ = std::move(mid);
    } else {
      lower_ = std::move(mid);
    }
    return;
  }
  const std::size_t above = count_roots_above(p_, mid);
  if (above >= 1) {
    lower_ = std::move(mid);
    roots_above_lower_ = above;
    // The upper end is never a root unless the bracket is exact.
    return;
  }
  if (sign_at(p_, mid) == 0) {
    lower_ = upper_ = std::move(mid);
    exact_ = true;
    return;
  }
  upper_ = std::move(mid);
}

void LargestRootBracket::refine_to_width(double w) {
  while (!exact_ && width() > w) bisect();
}

double LargestRootBracket::estimate() const {
  if (exact_) return lower_.to_double();
  return midpoint(lower_, upper_).to_double();
}

namespace {

// r_a < r_b given brackets where a non-exact root lies strictly inside (lo, hi).
bool certainly_below(const LargestRootBracket& a, const LargestRootBracket& b) {
  const auto c = a.upper() <=> b.lower();
  return c < 0 || (c == 0 && !(a.exact() && b.exact()));
}

}  // namespace

std::strong_ordering compare_largest_roots(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.primitive() == b.primitive()) return std::strong_ordering::equal;
  LargestRootBracket ra(a), rb(b);
  bool common_checked = false;
  constexpr double kCommonRootWidth = 0x1p-256;
  while (true) {
    if (ra.exact() && rb.exact()) return ra.lower() <=> rb.lower();
    if (certainly_below(ra, rb)) return std::strong_ordering::less;
    if (certainly_below(rb, ra)) return std::strong_ordering::greater;
    if (!common_checked && ra.width() < kCommonRootWidth && rb.width() < kCommonRootWidth) {
      common_checked = true;
      if (!ra.isolated() || !rb.isolated()) {
        // Repeated largest root: continue on the squarefree parts, whose
        // largest roots are the same and simple.
        ra = LargestRootBracket(squarefree_part(ra.polynomial()));
        rb = LargestRootBracket(squarefree_part(rb.polynomial()));
        ra.refine_to_width(kCommonRootWidth);
        rb.refine_to_width(kCommonRootWidth);
      }
      const IntPolynomial g = polynomial_gcd(ra.polynomial(), rb.polynomial());
      if (g.degree() >= 1) {
        // Each bracket holds exactly one root of its polynomial above the
        // lower end; a root of g above both lower ends is that root for both.
        const Dyadic& lo = std::max(ra.lower(), rb.lower());
        if (!ra.exact() && !rb.exact() && count_roots_above(g, lo) >= 1) {
          return std::strong_ordering::equal;
        }
      }
      continue;
    }
    if (ra.width() >= rb.width() && !ra.exact()) ra.bisect();
    else if (!rb.exact()) rb.bisect();
    else ra.bisect();
  }
}

}  // namespace starwalk
