#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schwarzric/ratfunc.hpp"

namespace schwarzric {

/// Truncated Puiseux series sum a_i w^(lambda_i) in a formal variable w with
/// coefficients in Q(y). Exponents are strictly descending. When a cutoff c is
/// present, every exponent >= c is known exactly and everything below c is
/// unknown (not zero); without a cutoff the series is exact.
class PuiseuxSeries {
 public:
  struct Term {
    BigRat exponent;
    RatFunc coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  PuiseuxSeries() = default;  // exact zero
  /// Terms in any order; like exponents are merged and zero coefficients dropped.
  static PuiseuxSeries exact(std::vector<Term> terms);
  static PuiseuxSeries truncated(std::vector<Term> terms, BigRat cutoff);
  static PuiseuxSeries monomial(RatFunc coeff, BigRat exponent);
  static PuiseuxSeries constant(RatFunc coeff) { return monomial(std::move(coeff), BigRat(0)); }

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<BigRat>& cutoff() const { return cutoff_; }
  bool is_exact() const { return !cutoff_.has_value(); }
  bool is_exact_zero() const { return terms_.empty() && !cutoff_; }

  /// Least common denominator of all exponents and the cutoff.
  BigInt exponent_denominator() const;
  std::optional<BigRat> leading_exponent() const;
  /// Whether the coefficient of w^e is determined.
  bool is_known(const BigRat& e) const { return !cutoff_ || e >= *cutoff_; }
  /// Coefficient of w^e; throws InvalidArgument when e lies below the cutoff.
  RatFunc coefficient(const BigRat& e) const;

  /// Multiplies by w^k.
  PuiseuxSeries shifted(const BigRat& k) const;
  /// sum lambda_i a_i w^lambda_i.
  PuiseuxSeries exponent_weighted() const;
  /// sum (d a_i / dy) w^lambda_i.
  PuiseuxSeries coefficient_derivative() const;
  /// Drops known terms below c and lowers precision to c (no-op if already coarser).
  PuiseuxSeries truncate(const BigRat& c) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const RatFunc& c, const PuiseuxSeries& s);
  friend bool operator==(const PuiseuxSeries&, const PuiseuxSeries&) = default;

  /// "(a)·w^{p/q} + ... + O(w^{c})"; exact zero renders as "0".
  std::string str() const;

 private:
  std::vector<Term> terms_;
  std::optional<BigRat> cutoff_;
};

/// Differential context: the series U standing for y''/y'^2, so that y'' = U w^2
/// with w = y'. The coefficient derivation is d/dy and kills constants.
struct SeriesContext {
  PuiseuxSeries U;
};

/// D(sum a_i w^l_i) = sum (d a_i/dy) w^(l_i + 1) + w * (sum l_i a_i w^l_i) * U.
PuiseuxSeries derive(const PuiseuxSeries& s, const SeriesContext& ctx);

/// E(U) = D(U)/w + 1/2 U^2 + R w^0, with D taken in the context of U itself.
PuiseuxSeries residual(const PuiseuxSeries& U, const RatFunc& R);

struct ConstraintReport {
  enum class Kind {
    PositiveExponentObstruction,  // lambda0 > 0
    ZeroExponentConstraint,       // lambda0 = 0
    NegativeExponentObstruction,  // lambda0 < 0
  };

  Kind kind = Kind::ZeroExponentConstraint;
  BigRat lambda0;
  RatFunc a0;
  RatFunc R;
  /// Residual of the demonstration series U = a0 w^lambda0 + O(w^truncation).
  PuiseuxSeries residual_series;

  /// Exponent and coefficient of the term that cannot cancel (obstruction kinds).
  BigRat obstruction_exponent;
  RatFunc obstruction_coefficient;
  /// (lambda0 + 1/2) a0^2, computed directly; equals obstruction_coefficient for lambda0 > 0.
  RatFunc leading_balance;

  /// d a0/dy + 1/2 a0^2 + R (zero-exponent kind).
  RatFunc constraint_residual;
  bool constraint_satisfied = false;
  /// a0/2 and whether it solves du/dy + u^2 + 1/2 R = 0.
  RatFunc half_a0;
  bool half_a0_solves_riccati = false;
};

std::string_view to_string(ConstraintReport::Kind k);

/// Leading-term analysis of E(U) for U with leading term a0 w^lambda0.
/// Throws ZeroLeadingCoefficient for a0 = 0 and InvalidArgument when the
/// truncation does not lie below min(lambda0, 0).
ConstraintReport leading_constraints(const BigRat& lambda0, const RatFunc& a0, const RatFunc& R,
                                     const BigRat& truncation = BigRat(-5));

}  // namespace schwarzric
