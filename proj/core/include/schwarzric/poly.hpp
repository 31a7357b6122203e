#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schwarzric/bigrat.hpp"

namespace schwarzric {

/// Polynomial degree with deg(0) = -inf, so that deg(p*q) = deg p + deg q holds for all p, q.
class Degree {
 public:
  constexpr Degree(int d) : d_(d) {}  // NOLINT
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !d_.has_value(); }
  int value() const { return d_.value(); }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(*a.d_ + *b.d_);
  }
  friend constexpr bool operator==(Degree a, Degree b) = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return !a.is_neg_inf() <=> !b.is_neg_inf();
    return *a.d_ <=> *b.d_;
  }

 private:
  constexpr Degree() = default;
  std::optional<int> d_;
};

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
/// the last stored coefficient is nonzero and the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  Poly(BigRat c);  // NOLINT: constants promote
  Poly(int c) : Poly(BigRat(c)) {}  // NOLINT
  explicit Poly(std::vector<BigRat> ascending);

  /// The monomial c*x^k.
  static Poly monomial(BigRat c, unsigned k);
  /// x - root.
  static Poly linear(const BigRat& root);
  static Poly x() { return monomial(BigRat(1), 1); }

  const std::vector<BigRat>& coeffs() const { return c_; }
  Degree degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const BigRat& leading() const;
  BigRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRat(0); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const BigRat& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRat& s) { return a *= s; }
  friend Poly operator*(const BigRat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  /// Exact division; the caller guarantees d | *this.
  Poly exact_div(const Poly& d) const { return divmod(d).first; }

  Poly derivative() const;
  BigRat evaluate(const BigRat& x) const;
  Poly pow(unsigned e) const;
  Poly monic() const;
  /// p(x + shift).
  Poly taylor_shift(const BigRat& shift) const;
  /// x^deg * p(1/x).
  Poly reversed() const;
  /// Content-free integer representative as a primitive integer polynomial with positive leading term.
  std::vector<BigInt> primitive_integer_coeffs() const;

  /// Human readable form, e.g. "2*y^2 - 3/2*y + 1". Parseable by the expression parser.
  std::string str(std::string_view var = "y") const;

 private:
  void trim();
  std::vector<BigRat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Rational roots with multiplicities, ascending by root. Irreducible factors
/// of degree >= 2 are reported through the second member (their product).
struct RationalRootSplit {
  std::vector<std::pair<BigRat, int>> roots;
  Poly cofactor;  // monic; 1 when p splits completely over Q
};
RationalRootSplit rational_roots(const Poly& p);

}  // namespace schwarzric
