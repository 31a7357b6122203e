#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schwarzric/poly.hpp"

namespace schwarzric {

/// Rational function num/den over Q in canonical form: gcd(num, den) = 1 and
/// den monic. Canonical form makes operator== structural equality.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(BigRat c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RatFunc(int c) : RatFunc(BigRat(c)) {}              // NOLINT
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}    // NOLINT
  /// Throws DivisionByZero when den is zero.
  RatFunc(Poly num, Poly den);

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The constant value; requires is_constant().
  BigRat constant_value() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  RatFunc inverse() const;
  RatFunc pow(unsigned e) const;
  RatFunc derivative() const;
  /// Throws PoleEvaluation when den(q) = 0.
  BigRat evaluate(const BigRat& q) const;
  /// this(g(x)).
  RatFunc compose(const RatFunc& g) const;

  /// Order of vanishing at infinity: deg den - deg num (positive means zero at infinity).
  /// Undefined for the zero function; throws InvalidArgument.
  int order_at_infinity() const;

  /// "num" or "(num)/(den)"; parseable by the expression parser.
  std::string str(std::string_view var = "y") const;

 private:
  Poly num_;
  Poly den_;
};

/// Truncated Laurent expansion sum_k coeffs[k] * t^(valuation + k), where t = x - c
/// at a finite point or t = 1/x at infinity.
struct LaurentSeries {
  int valuation = 0;
  std::vector<BigRat> coeffs;

  /// Coefficient of t^e (0 outside the stored window below the valuation).
  BigRat at(int e) const;
};

/// First `count` terms of the Laurent expansion of a nonzero r at x = c.
LaurentSeries laurent_at(const RatFunc& r, const BigRat& c, int count);
/// First `count` terms of the expansion of a nonzero r in t = 1/x.
LaurentSeries laurent_at_infinity(const RatFunc& r, int count);

struct PartialFractionTerm {
  BigRat pole;
  int order = 1;
  BigRat coefficient;

  friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

/// r = polynomial_part + sum coefficient / (x - pole)^order.
struct PartialFractions {
  Poly polynomial_part;
  std::vector<PartialFractionTerm> terms;  // ascending by pole, then order

  RatFunc recombine() const;
};

/// Throws NotSplitOverRationals when the denominator has an irreducible factor of degree >= 2.
PartialFractions partial_fractions(const RatFunc& r);

/// Rational poles of r with their orders; throws NotSplitOverRationals as above.
std::vector<std::pair<BigRat, int>> rational_poles(const RatFunc& r);

}  // namespace schwarzric
