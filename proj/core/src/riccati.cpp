#include "schwarzric/riccati.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schwarzric/error.hpp"

namespace schwarzric {

namespace {

constexpr const char* kModule = "riccati";

// Null space of an m x n matrix over Q, one basis vector per free column.
std::vector<std::vector<BigRat>> null_space(std::vector<std::vector<BigRat>> m, std::size_t n) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const BigRat inv = m[row][col].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const BigRat f = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<BigRat>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRat> v(n);
    v[free] = BigRat(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Poly lcm(const Poly& a, const Poly& b) { return (a * b).exact_div(gcd(a, b)).monic(); }

// Square-root series of a Laurent series with even valuation; s[k] multiplies t^(val/2 + k).
std::optional<std::vector<BigRat>> sqrt_series(const LaurentSeries& r, int count) {
  const auto lead = r.coeffs.front().sqrt();
  if (!lead) return std::nullopt;
  std::vector<BigRat> s{*lead};
  const BigRat two_a_inv = (BigRat(2) * *lead).inverse();
  for (int k = 1; k < count; ++k) {
    BigRat acc = r.at(r.valuation + k);
    for (int i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s.push_back(acc * two_a_inv);
  }
  return s;
}

BigRat coefficient_of_square(const std::vector<BigRat>& s, int k) {
  BigRat acc;
  for (int i = 0; i <= k; ++i) {
    const int j = k - i;
    if (i < static_cast<int>(s.size()) && j < static_cast<int>(s.size())) acc += s[i] * s[j];
  }
  return acc;
}

void add_quadratic_options(LocalData& ld, const BigRat& b, bool at_infinity) {
  const BigRat disc = BigRat(1) + BigRat(4) * b;
  const auto root = disc.sqrt();
  if (!root) {
    ld.status = LocalData::Status::IrrationalLocalExponent;
    ld.note = "indicial discriminant 1 + 4b = " + disc.str() + " is not a rational square";
    return;
  }
  (void)at_infinity;
  const BigRat half(1, 2);
  ld.options.push_back({1, RatFunc(), half + half * *root});
  if (!root->is_zero()) ld.options.push_back({-1, RatFunc(), half - half * *root});
}

LocalData local_data_at_pole(const RatFunc& r, const BigRat& c, int order) {
  LocalData ld;
  ld.point = "y = " + c.str();
  ld.pole = c;
  ld.order = order;
  if (order == 1) {
    ld.options.push_back({1, RatFunc(), BigRat(1)});
    return ld;
  }
  if (order == 2) {
    add_quadratic_options(ld, laurent_at(r, c, 1).at(-2), false);
    return ld;
  }
  if (order % 2 == 1) {
    ld.status = LocalData::Status::OddOrderObstruction;
    ld.note = "pole of odd order " + std::to_string(order) + " > 1";
    return ld;
  }
  const int nu = order / 2;
  const LaurentSeries ser = laurent_at(r, c, nu + 1);
  const auto s = sqrt_series(ser, nu - 1);
  if (!s) {
    ld.status = LocalData::Status::IrrationalLocalExponent;
    ld.note = "leading coefficient " + ser.coeffs.front().str() + " is not a rational square";
    return ld;
  }
  // [sqrt r]_c = sum_{k=0}^{nu-2} s_k (y-c)^(k-nu).
  RatFunc part;
  for (int k = 0; k + 2 <= nu; ++k)
    part += RatFunc(Poly((*s)[k]), Poly::linear(c).pow(static_cast<unsigned>(nu - k)));
  const BigRat b = ser.at(-nu - 1) - coefficient_of_square(*s, nu - 1);
  const BigRat& a = (*s)[0];
  const BigRat half(1, 2);
  ld.options.push_back({1, part, half * (b / a + BigRat(nu))});
  ld.options.push_back({-1, -part, half * (-b / a + BigRat(nu))});
  return ld;
}

LocalData local_data_at_infinity(const RatFunc& r) {
  LocalData ld;
  ld.point = "inf";
  if (r.is_zero()) {
    ld.order = 0;
    ld.note = "r = 0";
    ld.options.push_back({1, RatFunc(), BigRat(0)});
    ld.options.push_back({-1, RatFunc(), BigRat(1)});
    return ld;
  }
  const int o = r.order_at_infinity();
  ld.order = o;
  if (o > 2) {
    ld.options.push_back({1, RatFunc(), BigRat(0)});
    ld.options.push_back({-1, RatFunc(), BigRat(1)});
    return ld;
  }
  if (o == 2) {
    add_quadratic_options(ld, laurent_at_infinity(r, 1).at(2), true);
    return ld;
  }
  if (o % 2 != 0) {
    ld.status = LocalData::Status::OddOrderObstruction;
    ld.note = "odd order " + std::to_string(o) + " < 2 at infinity";
    return ld;
  }
  const int nu = -o / 2;
  const LaurentSeries ser = laurent_at_infinity(r, nu + 2);
  const auto s = sqrt_series(ser, nu + 1);
  if (!s) {
    ld.status = LocalData::Status::IrrationalLocalExponent;
    ld.note = "leading coefficient " + ser.coeffs.front().str() + " is not a rational square";
    return ld;
  }
  // [sqrt r]_inf = sum_{k=0}^{nu} s_k y^(nu-k).
  Poly part;
  for (int k = 0; k <= nu; ++k) part += Poly::monomial((*s)[k], static_cast<unsigned>(nu - k));
  const BigRat b = ser.at(-nu + 1) - coefficient_of_square(*s, nu + 1);
  const BigRat& a = (*s)[0];
  const BigRat half(1, 2);
  ld.options.push_back({1, RatFunc(part), half * (b / a - BigRat(nu))});
  ld.options.push_back({-1, RatFunc(-part), half * (-b / a - BigRat(nu))});
  return ld;
}

// Kernel of P -> P'' + 2 omega P' + (omega' + omega^2 - r) P on polynomials of degree <= d.
std::vector<Poly> polynomial_kernel(const RatFunc& omega, const RatFunc& r, int d) {
  const RatFunc t = omega.derivative() + omega * omega - r;
  const Poly den = lcm(omega.den(), t.den());
  const Poly w_num = omega.num() * den.exact_div(omega.den()) * BigRat(2);
  const Poly t_num = t.num() * den.exact_div(t.den());
  std::vector<Poly> images;
  std::size_t rows = 0;
  for (int i = 0; i <= d; ++i) {
    const Poly mono = Poly::monomial(BigRat(1), static_cast<unsigned>(i));
    Poly img = mono.derivative().derivative() * den + w_num * mono.derivative() + t_num * mono;
    rows = std::max(rows, img.coeffs().size());
    images.push_back(std::move(img));
  }
  std::vector<std::vector<BigRat>> m(rows, std::vector<BigRat>(d + 1));
  for (int i = 0; i <= d; ++i)
    for (std::size_t k = 0; k < images[i].coeffs().size(); ++k) m[k][i] = images[i].coeffs()[k];
  std::vector<Poly> out;
  for (auto& v : null_space(std::move(m), static_cast<std::size_t>(d + 1))) out.push_back(Poly(std::move(v)).monic());
  return out;
}

}  // namespace

std::string RiccatiEq::str() const {
  if (R.is_zero()) return "du/dy + u^2 = 0";
  return "du/dy + u^2 + " + half_R().str("y") + " = 0";
}

std::string LinearODE2::str() const {
  if (r.is_zero()) return "v'' = 0";
  return "v'' + (" + r.str("y") + ")*v = 0";
}

RiccatiEq associate_riccati(const RatFunc& R) { return RiccatiEq{R}; }

LinearODE2 to_linear_ode(const RiccatiEq& e) { return LinearODE2{e.half_R()}; }

RatFunc riccati_residual(const RiccatiEq& e, const RatFunc& u) { return u.derivative() + u * u + e.half_R(); }

RatFunc half_riccati_residual(const RatFunc& R, const RatFunc& a) {
  return a.derivative() + RatFunc(BigRat(1, 2)) * a * a + R;
}

RatFunc linear_residual(const LinearODE2& ode, const RatFunc& v) { return v.derivative().derivative() + ode.r * v; }

std::optional<RatFunc> reconstruct_linear_solution(const RatFunc& u) {
  if (u.is_zero()) return RatFunc(1);
  PartialFractions pf;
  try {
    pf = partial_fractions(u);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!pf.polynomial_part.is_zero()) return std::nullopt;
  Poly num(1), den(1);
  for (const auto& t : pf.terms) {
    if (t.order != 1 || !t.coefficient.is_integer()) return std::nullopt;
    const long e = t.coefficient.numerator().get_si();
    const Poly f = Poly::linear(t.pole).pow(static_cast<unsigned>(e < 0 ? -e : e));
    if (e > 0) num *= f; else den *= f;
  }
  return RatFunc(num, den);
}

std::string_view to_string(LocalData::Status s) {
  switch (s) {
    case LocalData::Status::Ok: return "Ok";
    case LocalData::Status::IrrationalLocalExponent: return "IrrationalLocalExponent";
    case LocalData::Status::OddOrderObstruction: return "OddOrderObstruction";
  }
  return "Unknown";
}

std::string_view to_string(CandidateRecord::Status s) {
  switch (s) {
    case CandidateRecord::Status::DegreeNotNonnegativeInteger: return "DegreeNotNonnegativeInteger";
    case CandidateRecord::Status::DegreeAboveCap: return "DegreeAboveCap";
    case CandidateRecord::Status::NoPolynomial: return "NoPolynomial";
    case CandidateRecord::Status::Solution: return "Solution";
    case CandidateRecord::Status::Family: return "Family";
  }
  return "Unknown";
}

std::string_view to_string(ConsistencyReport::Status s) {
  return s == ConsistencyReport::Status::Consistent ? "CONSISTENT" : "CONTRADICTION";
}

std::string SolutionFamily::str() const {
  std::ostringstream os;
  os << "u = " << (omega.is_zero() ? std::string("") : omega.str("y") + " + ") << "P'/P, P in span{";
  for (std::size_t i = 0; i < basis.size(); ++i) os << (i ? ", " : "") << basis[i].str("y");
  os << "}";
  return os.str();
}

OracleResult rational_solutions(const RiccatiEq& e, const OracleOptions& opts) {
  OracleResult out;
  // u' + u^2 = r with r = -R/2, the normal form v'' = r v of the classical algorithm.
  const RatFunc r = -e.half_R();

  std::vector<std::pair<BigRat, int>> poles;
  try {
    poles = rational_poles(r);
  } catch (const Error& err) {
    throw Error(ErrorKind::NonRationalPoles, kModule, err.what());
  }
  for (const auto& [c, order] : poles) out.local.push_back(local_data_at_pole(r, c, order));
  out.local.push_back(local_data_at_infinity(r));

  for (const auto& ld : out.local) {
    if (ld.status != LocalData::Status::Ok) {
      out.notes.push_back(std::string(to_string(ld.status)) + " at " + ld.point + ": " + ld.note +
                          "; no rational solution exists");
      return out;
    }
  }

  const std::size_t points = out.local.size();
  std::vector<int> idx(points, 0);
  auto add_solution = [&](const RatFunc& u) {
    if (!riccati_residual(e, u).is_zero())
      throw std::logic_error("oracle produced a non-solution: u = " + u.str());
    if (std::find(out.solutions.begin(), out.solutions.end(), u) == out.solutions.end()) out.solutions.push_back(u);
  };

  for (;;) {
    ++out.candidates_examined;
    CandidateRecord rec;
    rec.option_index = idx;
    BigRat degree = out.local.back().options[idx.back()].exponent;
    for (std::size_t i = 0; i + 1 < points; ++i) degree -= out.local[i].options[idx[i]].exponent;
    const bool viable = degree.is_integer() && degree.sign() >= 0;
    RatFunc omega;
    if (viable || opts.certify) {
      omega = out.local.back().options[idx.back()].sqrt_part;
      for (std::size_t i = 0; i + 1 < points; ++i) {
        const auto& opt = out.local[i].options[idx[i]];
        omega += opt.sqrt_part + RatFunc(Poly(opt.exponent), Poly::linear(*out.local[i].pole));
      }
    }
    rec.degree = degree;
    rec.omega = omega;
    if (!viable) {
      rec.status = CandidateRecord::Status::DegreeNotNonnegativeInteger;
    } else if (degree > BigRat(opts.degree_bound)) {
      rec.status = CandidateRecord::Status::DegreeAboveCap;
      out.complete = false;
      out.notes.push_back("candidate with degree " + degree.str() + " skipped by degree bound " +
                          std::to_string(opts.degree_bound));
    } else {
      const int d = static_cast<int>(degree.numerator().get_si());
      auto kernel = polynomial_kernel(omega, r, d);
      rec.kernel_dimension = kernel.size();
      if (kernel.empty()) {
        rec.status = CandidateRecord::Status::NoPolynomial;
      } else if (kernel.size() == 1) {
        rec.status = CandidateRecord::Status::Solution;
        add_solution(omega + RatFunc(kernel[0].derivative(), kernel[0]));
      } else {
        rec.status = CandidateRecord::Status::Family;
        for (const auto& p : kernel) {
          if (!riccati_residual(e, omega + RatFunc(p.derivative(), p)).is_zero())
            throw std::logic_error("oracle family member is not a solution");
        }
        out.families.push_back(SolutionFamily{omega, std::move(kernel)});
      }
    }
    if (opts.certify) out.candidates.push_back(std::move(rec));

    std::size_t k = 0;
    while (k < points && ++idx[k] == static_cast<int>(out.local[k].options.size())) idx[k++] = 0;
    if (k == points) break;
  }
  return out;
}

ConsistencyReport cross_check(const TriangleParams& p, const OracleOptions& opts) {
  ConsistencyReport rep;
  rep.verdict = decide_condition_ric(p);
  rep.oracle = rational_solutions(associate_riccati(build_triangular_R(p)), opts);
  const bool has_rational = !rep.oracle.solutions.empty() || !rep.oracle.families.empty();
  if (rep.verdict.outcome == KimuraVerdict::Outcome::ConditionRicHolds) {
    if (has_rational) {
      rep.status = ConsistencyReport::Status::Contradiction;
      rep.note = "Kimura reports no algebraic solution but a rational solution exists";
    } else {
      rep.note = "no witness, no rational solution";
    }
  } else if (has_rational) {
    rep.note = "witness confirmed by a rational solution";
  } else {
    rep.note = "witness without rational solution; algebraic degree >= 2 possible";
  }
  return rep;
}

}  // namespace schwarzric
