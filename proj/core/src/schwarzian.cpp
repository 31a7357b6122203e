#include "schwarzric/schwarzian.hpp"

#include <sstream>
#include <vector>

#include "schwarzric/error.hpp"

namespace schwarzric {

namespace {

constexpr const char* kModule = "schwarzian";

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(',', start);
    auto piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(piece);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

BigRat limit_coefficient(const RatFunc& R, const BigRat& c, int power) {
  if (R.is_zero()) return BigRat(0);
  return laurent_at(R, c, power + 1).at(-power);
}

}  // namespace

TriangleParams::TriangleParams(ExtRational alpha, ExtRational beta, ExtRational gamma)
    : slots_{std::move(alpha), std::move(beta), std::move(gamma)} {
  static constexpr const char* names[] = {"alpha", "beta", "gamma"};
  for (int i = 0; i < 3; ++i) {
    if (!slots_[i].is_infinite() && slots_[i].value().is_zero())
      throw Error(ErrorKind::ZeroParameter, kModule, std::string(names[i]) + " = 0 has no inverse");
  }
}

TriangleParams TriangleParams::parse(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3)
    throw Error(ErrorKind::InvalidArgument, kModule,
                "expected three comma-separated parameters, got '" + std::string(text) + "'");
  return TriangleParams(ExtRational::parse(parts[0]), ExtRational::parse(parts[1]), ExtRational::parse(parts[2]));
}

std::array<BigRat, 3> TriangleParams::inverses() const {
  return {slots_[0].inverse(), slots_[1].inverse(), slots_[2].inverse()};
}

bool TriangleParams::is_integer_triple() const {
  for (const auto& s : slots_) {
    if (s.is_infinite()) continue;
    if (!s.value().is_integer() || s.value() < BigRat(2)) return false;
  }
  return true;
}

bool TriangleParams::is_hyperbolic() const {
  const auto inv = inverses();
  return inv[0] + inv[1] + inv[2] < BigRat(1);
}

std::string TriangleParams::str() const {
  return "(" + slots_[0].str() + ", " + slots_[1].str() + ", " + slots_[2].str() + ")";
}

Moebius Moebius::parse(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 4)
    throw Error(ErrorKind::InvalidArgument, kModule, "expected a,b,c,d for a Moebius map, got '" + std::string(text) + "'");
  Moebius m{BigRat::parse(parts[0]), BigRat::parse(parts[1]), BigRat::parse(parts[2]), BigRat::parse(parts[3])};
  if (m.determinant().is_zero()) throw Error(ErrorKind::SingularMoebius, kModule, "ad - bc = 0 for " + m.str());
  return m;
}

RatFunc Moebius::as_ratfunc() const {
  return RatFunc(Poly(std::vector<BigRat>{b, a}), Poly(std::vector<BigRat>{d, c}));
}

Moebius Moebius::inverse() const {
  if (determinant().is_zero()) throw Error(ErrorKind::SingularMoebius, kModule, "ad - bc = 0 for " + str());
  return Moebius{d, -b, -c, a};
}

Moebius Moebius::after(const Moebius& inner) const {
  return Moebius{a * inner.a + b * inner.c, a * inner.b + b * inner.d, c * inner.a + d * inner.c,
                 c * inner.b + d * inner.d};
}

std::string Moebius::str() const {
  return "(" + a.str() + "*y + " + b.str() + ")/(" + c.str() + "*y + " + d.str() + ")";
}

std::string SchwarzianEquation::str() const {
  if (R.is_zero()) return "S_t(y) = 0";
  return "S_t(y) + (y')^2 * (" + R.str("y") + ") = 0";
}

std::string SchwarzianEquation::differential_polynomial() const {
  if (R.is_zero()) return "y'*y''' - 3/2*(y'')^2 = 0";
  return "y'*y''' - 3/2*(y'')^2 + (y')^4 * (" + R.str("y") + ") = 0";
}

RatFunc schwarzian_of(const RatFunc& g) {
  const RatFunc g1 = g.derivative();
  if (g1.is_zero()) throw Error(ErrorKind::ConstantInput, kModule, "Schwarzian of a constant function");
  const RatFunc h = g1.derivative() / g1;
  return h.derivative() - BigRat(1, 2) * h * h;
}

RatFunc triangular_R_from_inverse_squares(const BigRat& ia2, const BigRat& ib2, const BigRat& ig2) {
  // 1/2 * ( (1-b)/y^2 + (1-g)/(y-1)^2 + (b+g-a-1)/(y(y-1)) ) over the common denominator y^2 (y-1)^2.
  const Poly y = Poly::x();
  const Poly ym1 = Poly::linear(BigRat(1));
  const Poly num = (BigRat(1) - ib2) * (ym1 * ym1) + (BigRat(1) - ig2) * (y * y) + (ib2 + ig2 - ia2 - BigRat(1)) * (y * ym1);
  return RatFunc(num * BigRat(1, 2), (y * ym1).pow(2));
}

RatFunc build_triangular_R(const TriangleParams& p) {
  const auto inv = p.inverses();
  return triangular_R_from_inverse_squares(inv[0] * inv[0], inv[1] * inv[1], inv[2] * inv[2]);
}

std::string_view to_string(TriangularRecognition::Status s) {
  switch (s) {
    case TriangularRecognition::Status::Triangular: return "Triangular";
    case TriangularRecognition::Status::SymbolicInverseSquare: return "SymbolicInverseSquare";
    case TriangularRecognition::Status::NotTriangular: return "NotTriangular";
  }
  return "Unknown";
}

TriangularRecognition recognize_triangular(const RatFunc& R) {
  TriangularRecognition out;
  if (!R.is_zero()) {
    std::vector<std::pair<BigRat, int>> poles;
    try {
      poles = rational_poles(R);
    } catch (const Error&) {
      out.reason = "denominator " + R.den().str() + " does not split over Q";
      return out;
    }
    for (const auto& [c, order] : poles) {
      if (c != BigRat(0) && c != BigRat(1)) {
        out.reason = "pole at y = " + c.str() + " outside {0, 1}";
        return out;
      }
      if (order > 2) {
        out.reason = "pole of order " + std::to_string(order) + " at y = " + c.str();
        return out;
      }
    }
    if (R.order_at_infinity() < 2) {
      out.reason = "R does not vanish to order 2 at infinity";
      return out;
    }
  }
  const BigRat at0 = limit_coefficient(R, BigRat(0), 2);
  const BigRat at1 = limit_coefficient(R, BigRat(1), 2);
  const BigRat at_inf = R.is_zero() ? BigRat(0) : laurent_at_infinity(R, 1).at(2);
  const BigRat ib2 = BigRat(1) - BigRat(2) * at0;
  const BigRat ig2 = BigRat(1) - BigRat(2) * at1;
  const BigRat ia2 = BigRat(1) - BigRat(2) * at_inf;
  if (triangular_R_from_inverse_squares(ia2, ib2, ig2) != R) {
    out.reason = "local data does not rebuild R in triangular form";
    return out;
  }
  out.inverse_squares = {ia2, ib2, ig2};

  std::array<ExtRational, 3> slots;
  for (int i = 0; i < 3; ++i) {
    const BigRat& s = out.inverse_squares[i];
    if (s.is_zero()) {
      slots[i] = ExtRational::infinity();
      continue;
    }
    const auto root = s.sqrt();
    if (!root) {
      out.status = TriangularRecognition::Status::SymbolicInverseSquare;
      out.reason = "inverse square " + s.str() + " is not the square of a rational";
      return out;
    }
    slots[i] = ExtRational(root->inverse());
  }
  out.status = TriangularRecognition::Status::Triangular;
  out.params = TriangleParams(slots[0], slots[1], slots[2]);
  return out;
}

RatFunc moebius_pullback(const RatFunc& R, const Moebius& m) {
  const Moebius inv = m.inverse();
  const RatFunc inv_f = inv.as_ratfunc();
  const RatFunc dinv = inv_f.derivative();
  if (R.is_zero()) return R;
  return R.compose(inv_f) * dinv * dinv;
}

RatFunc schwarzian_residual(const RatFunc& g, const RatFunc& R) {
  const RatFunc s = schwarzian_of(g);
  if (R.is_zero()) return s;
  const RatFunc g1 = g.derivative();
  return s + g1 * g1 * R.compose(g);
}

bool check_solution(const RatFunc& g, const RatFunc& R) { return schwarzian_residual(g, R).is_zero(); }

}  // namespace schwarzric
