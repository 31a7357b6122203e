#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "schwarzric/ratfunc.hpp"

namespace schwarzric {

/// Angle parameters (alpha, beta, gamma) of a triangle with angles pi/alpha, pi/beta, pi/gamma.
/// Each slot is a nonzero rational or infinity.
class TriangleParams {
 public:
  /// Throws ZeroParameter if any slot is 0.
  TriangleParams(ExtRational alpha, ExtRational beta, ExtRational gamma);

  /// Comma separated, e.g. "2,3,7" or "1,inf,inf" or "5/2,3,3".
  static TriangleParams parse(std::string_view text);

  const ExtRational& alpha() const { return slots_[0]; }
  const ExtRational& beta() const { return slots_[1]; }
  const ExtRational& gamma() const { return slots_[2]; }
  const std::array<ExtRational, 3>& slots() const { return slots_; }

  /// (1/alpha, 1/beta, 1/gamma) with 1/inf = 0.
  std::array<BigRat, 3> inverses() const;
  /// Every slot lies in {2, 3, ...} or is infinite.
  bool is_integer_triple() const;
  /// 1/alpha + 1/beta + 1/gamma < 1.
  bool is_hyperbolic() const;

  std::string str() const;  // "(2, 3, 7)"

  friend bool operator==(const TriangleParams&, const TriangleParams&) = default;

 private:
  std::array<ExtRational, 3> slots_;
};

/// y -> (a*y + b)/(c*y + d).
struct Moebius {
  BigRat a{1}, b{0}, c{0}, d{1};

  /// "a,b,c,d".
  static Moebius parse(std::string_view text);
  static Moebius identity() { return {}; }

  BigRat determinant() const { return a * d - b * c; }
  RatFunc as_ratfunc() const;
  /// Throws SingularMoebius when the determinant vanishes.
  Moebius inverse() const;
  /// (*this) after `inner`: y -> this(inner(y)).
  Moebius after(const Moebius& inner) const;
  std::string str() const;
};

/// The Schwarzian equation S_t(y) + (y')^2 R(y) = 0, represented by R.
struct SchwarzianEquation {
  RatFunc R;

  std::string str() const;
  /// The equation cleared of y' denominators: y'*y''' - 3/2*(y'')^2 + (y')^4 * R(y) = 0.
  std::string differential_polynomial() const;
};

/// (g''/g')' - 1/2 (g''/g')^2. Throws ConstantInput when g' = 0.
RatFunc schwarzian_of(const RatFunc& g);

/// The triangular-form coefficient R_{alpha,beta,gamma}.
RatFunc build_triangular_R(const TriangleParams& p);
/// Same family parametrized directly by the inverse squares alpha^-2, beta^-2, gamma^-2.
RatFunc triangular_R_from_inverse_squares(const BigRat& inv_alpha2, const BigRat& inv_beta2,
                                          const BigRat& inv_gamma2);

struct TriangularRecognition {
  enum class Status { Triangular, SymbolicInverseSquare, NotTriangular };

  Status status = Status::NotTriangular;
  /// alpha^-2, beta^-2, gamma^-2; meaningful unless status is NotTriangular.
  std::array<BigRat, 3> inverse_squares;
  /// Nonnegative representatives of (alpha, beta, gamma); present only for Triangular.
  std::optional<TriangleParams> params;
  std::string reason;
};

std::string_view to_string(TriangularRecognition::Status s);

/// Inverts build_triangular_R up to the sign of each parameter.
TriangularRecognition recognize_triangular(const RatFunc& R);

/// Coefficient R~ such that z = m(y) solves the equation for R~ whenever y solves it for R.
RatFunc moebius_pullback(const RatFunc& R, const Moebius& m);

/// S(g) + g'^2 R(g), as a function of t.
RatFunc schwarzian_residual(const RatFunc& g, const RatFunc& R);
/// True iff g(t) solves the Schwarzian equation for R identically.
bool check_solution(const RatFunc& g, const RatFunc& R);

}  // namespace schwarzric
