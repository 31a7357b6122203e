#include "schwarzric/puiseux.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "schwarzric/error.hpp"
#include "schwarzric/riccati.hpp"

namespace schwarzric {

namespace {

constexpr const char* kModule = "puiseux";

// Sorts descending, merges equal exponents, drops zeros and everything below cutoff.
std::vector<PuiseuxSeries::Term> normalize(std::vector<PuiseuxSeries::Term> terms, const std::optional<BigRat>& cutoff) {
  std::map<BigRat, RatFunc, std::greater<>> acc;
  for (auto& t : terms) {
    if (cutoff && t.exponent < *cutoff) continue;
    auto [it, inserted] = acc.try_emplace(t.exponent, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  std::vector<PuiseuxSeries::Term> out;
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.push_back({e, std::move(c)});
  return out;
}

std::optional<BigRat> max_opt(const std::optional<BigRat>& a, const std::optional<BigRat>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

// Upper bound on the exponents a series may carry; nullopt for exact zero.
std::optional<BigRat> top(const PuiseuxSeries& s) {
  if (!s.terms().empty()) return s.terms().front().exponent;
  return s.cutoff();
}

std::string exponent_str(const BigRat& e) { return "w^{" + e.str() + "}"; }

}  // namespace

PuiseuxSeries PuiseuxSeries::exact(std::vector<Term> terms) {
  PuiseuxSeries s;
  s.terms_ = normalize(std::move(terms), std::nullopt);
  return s;
}

PuiseuxSeries PuiseuxSeries::truncated(std::vector<Term> terms, BigRat cutoff) {
  PuiseuxSeries s;
  s.cutoff_ = std::move(cutoff);
  s.terms_ = normalize(std::move(terms), s.cutoff_);
  return s;
}

PuiseuxSeries PuiseuxSeries::monomial(RatFunc coeff, BigRat exponent) {
  return exact({{std::move(exponent), std::move(coeff)}});
}

BigInt PuiseuxSeries::exponent_denominator() const {
  BigInt d = 1;
  for (const auto& t : terms_) d = lcm(d, t.exponent.denominator());
  if (cutoff_) d = lcm(d, cutoff_->denominator());
  return d;
}

std::optional<BigRat> PuiseuxSeries::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

RatFunc PuiseuxSeries::coefficient(const BigRat& e) const {
  if (!is_known(e))
    throw Error(ErrorKind::InvalidArgument, kModule,
                "coefficient of w^" + e.str() + " lies below the cutoff " + cutoff_->str());
  for (const auto& t : terms_)
    if (t.exponent == e) return t.coeff;
  return RatFunc();
}

PuiseuxSeries PuiseuxSeries::shifted(const BigRat& k) const {
  PuiseuxSeries s = *this;
  for (auto& t : s.terms_) t.exponent += k;
  if (s.cutoff_) *s.cutoff_ += k;
  return s;
}

PuiseuxSeries PuiseuxSeries::exponent_weighted() const {
  PuiseuxSeries s;
  s.cutoff_ = cutoff_;
  std::vector<Term> t;
  for (const auto& term : terms_) t.push_back({term.exponent, RatFunc(term.exponent) * term.coeff});
  s.terms_ = normalize(std::move(t), cutoff_);
  return s;
}

PuiseuxSeries PuiseuxSeries::coefficient_derivative() const {
  PuiseuxSeries s;
  s.cutoff_ = cutoff_;
  std::vector<Term> t;
  for (const auto& term : terms_) t.push_back({term.exponent, term.coeff.derivative()});
  s.terms_ = normalize(std::move(t), cutoff_);
  return s;
}

PuiseuxSeries PuiseuxSeries::truncate(const BigRat& c) const {
  PuiseuxSeries s;
  s.cutoff_ = max_opt(cutoff_, c);
  s.terms_ = normalize(terms_, s.cutoff_);
  return s;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries s;
  s.cutoff_ = max_opt(a.cutoff_, b.cutoff_);
  std::vector<PuiseuxSeries::Term> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  s.terms_ = normalize(std::move(t), s.cutoff_);
  return s;
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return PuiseuxSeries();
  PuiseuxSeries s;
  if (a.cutoff_) s.cutoff_ = *a.cutoff_ + *top(b);
  if (b.cutoff_) s.cutoff_ = max_opt(s.cutoff_, *b.cutoff_ + *top(a));
  std::vector<PuiseuxSeries::Term> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) t.push_back({x.exponent + y.exponent, x.coeff * y.coeff});
  s.terms_ = normalize(std::move(t), s.cutoff_);
  return s;
}

PuiseuxSeries operator*(const RatFunc& c, const PuiseuxSeries& s) {
  if (c.is_zero()) return PuiseuxSeries();
  PuiseuxSeries r = s;
  for (auto& t : r.terms_) t.coeff = c * t.coeff;
  return r;
}

std::string PuiseuxSeries::str() const {
  if (terms_.empty() && !cutoff_) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << '(' << terms_[i].coeff.str("y") << ")·" << exponent_str(terms_[i].exponent);
  }
  if (cutoff_) os << (terms_.empty() ? "" : " + ") << "O(" << exponent_str(*cutoff_) << ')';
  return os.str();
}

PuiseuxSeries derive(const PuiseuxSeries& s, const SeriesContext& ctx) {
  const PuiseuxSeries along_y = s.coefficient_derivative().shifted(BigRat(1));
  const PuiseuxSeries along_w = (s.exponent_weighted() * ctx.U).shifted(BigRat(1));
  return along_y + along_w;
}

PuiseuxSeries residual(const PuiseuxSeries& U, const RatFunc& R) {
  const PuiseuxSeries dU = derive(U, SeriesContext{U}).shifted(BigRat(-1));
  return dU + RatFunc(BigRat(1, 2)) * (U * U) + PuiseuxSeries::constant(R);
}

std::string_view to_string(ConstraintReport::Kind k) {
  switch (k) {
    case ConstraintReport::Kind::PositiveExponentObstruction: return "PositiveExponentObstruction";
    case ConstraintReport::Kind::ZeroExponentConstraint: return "ZeroExponentConstraint";
    case ConstraintReport::Kind::NegativeExponentObstruction: return "NegativeExponentObstruction";
  }
  return "Unknown";
}

ConstraintReport leading_constraints(const BigRat& lambda0, const RatFunc& a0, const RatFunc& R,
                                     const BigRat& truncation) {
  if (a0.is_zero()) throw Error(ErrorKind::ZeroLeadingCoefficient, kModule, "leading coefficient a0 must be nonzero");
  if (truncation >= std::min(lambda0, BigRat(0)))
    throw Error(ErrorKind::InvalidArgument, kModule,
                "truncation " + truncation.str() + " must lie below min(lambda0, 0) = " +
                    std::min(lambda0, BigRat(0)).str());

  ConstraintReport rep;
  rep.lambda0 = lambda0;
  rep.a0 = a0;
  rep.R = R;
  const PuiseuxSeries U = PuiseuxSeries::truncated({{lambda0, a0}}, truncation);
  rep.residual_series = residual(U, R);
  rep.leading_balance = RatFunc(lambda0 + BigRat(1, 2)) * a0 * a0;
  rep.half_a0 = a0 * RatFunc(BigRat(1, 2));
  rep.half_a0_solves_riccati = riccati_residual(associate_riccati(R), rep.half_a0).is_zero();

  if (lambda0.sign() > 0) {
    rep.kind = ConstraintReport::Kind::PositiveExponentObstruction;
    rep.obstruction_exponent = BigRat(2) * lambda0;
    rep.obstruction_coefficient = rep.residual_series.coefficient(rep.obstruction_exponent);
  } else if (lambda0.is_zero()) {
    rep.kind = ConstraintReport::Kind::ZeroExponentConstraint;
    rep.constraint_residual = rep.residual_series.coefficient(BigRat(0));
    rep.constraint_satisfied = rep.constraint_residual.is_zero();
  } else {
    rep.kind = ConstraintReport::Kind::NegativeExponentObstruction;
    rep.obstruction_exponent = BigRat(0);
    rep.obstruction_coefficient = rep.residual_series.coefficient(BigRat(0));
  }
  return rep;
}

}  // namespace schwarzric
