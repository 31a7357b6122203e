#include "schwarzric/ratfunc.hpp"

#include <algorithm>

#include "schwarzric/error.hpp"

namespace schwarzric {

namespace {

// Normalizes (num, den) into canonical form.
void canonicalize(Poly& num, Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact-arith", "rational function with zero denominator");
  if (num.is_zero()) {
    den = Poly(1);
    return;
  }
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  const BigRat lead = den.leading();
  if (!lead.is_one()) {
    const BigRat inv = lead.inverse();
    num *= inv;
    den *= inv;
  }
}

std::vector<BigRat> series_divide(const Poly& n, const Poly& d, int count) {
  std::vector<BigRat> s;
  s.reserve(count);
  const BigRat d0_inv = d.coeff(0).inverse();
  for (int k = 0; k < count; ++k) {
    mpq_class acc = n.coeff(k).raw();
    const int top = std::min<int>(k, static_cast<int>(d.coeffs().size()) - 1);
    for (int i = 1; i <= top; ++i) acc -= d.coeffs()[i].raw() * s[k - i].raw();
    s.emplace_back(BigRat(mpq_class(acc * d0_inv.raw())));
  }
  return s;
}

int strip_low_zeros(Poly& p) {
  const auto& c = p.coeffs();
  std::size_t k = 0;
  while (k < c.size() && c[k].is_zero()) ++k;
  if (k > 0) p = Poly(std::vector<BigRat>(c.begin() + static_cast<long>(k), c.end()));
  return static_cast<int>(k);
}

}  // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(num_, den_); }

BigRat RatFunc::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "exact-arith", "not a constant: " + str());
  return num_.is_zero() ? BigRat(0) : num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact-arith", "division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const { return RatFunc(1) / *this; }

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;  // powers of coprime polynomials stay coprime; den stays monic
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

BigRat RatFunc::evaluate(const BigRat& q) const {
  const BigRat d = den_.evaluate(q);
  if (d.is_zero()) throw Error(ErrorKind::PoleEvaluation, "exact-arith", "evaluation at a pole x = " + q.str());
  return num_.evaluate(q) / d;
}

RatFunc RatFunc::compose(const RatFunc& g) const {
  // Homogenized substitution: p(a/b) = sum p_i a^i b^(K-i) / b^K.
  const auto& a = g.num_;
  const auto& b = g.den_;
  const std::size_t k = std::max(num_.coeffs().size(), den_.coeffs().size());
  std::vector<Poly> apow{Poly(1)}, bpow{Poly(1)};
  for (std::size_t i = 1; i < k; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  auto homog = [&](const Poly& p) {
    Poly acc;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (p.coeffs()[i].is_zero()) continue;
      acc += p.coeffs()[i] * (apow[i] * bpow[k - 1 - i]);
    }
    return acc;
  };
  Poly n = homog(num_);
  Poly d = homog(den_);
  if (d.is_zero()) throw Error(ErrorKind::PoleEvaluation, "exact-arith", "composition lands on a pole identically");
  return RatFunc(std::move(n), std::move(d));
}

int RatFunc::order_at_infinity() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "exact-arith", "order at infinity of zero");
  return den_.degree().value() - num_.degree().value();
}

std::string RatFunc::str(std::string_view var) const {
  if (den_.is_constant()) return num_.str(var);
  std::string n = num_.str(var);
  if (num_.coeffs().size() > 1 || num_.coeff(0).sign() < 0 || !num_.coeff(0).is_integer()) n = "(" + n + ")";
  return n + "/(" + den_.str(var) + ")";
}

BigRat LaurentSeries::at(int e) const {
  const int k = e - valuation;
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return BigRat(0);
  return coeffs[k];
}

LaurentSeries laurent_at(const RatFunc& r, const BigRat& c, int count) {
  if (r.is_zero()) throw Error(ErrorKind::InvalidArgument, "exact-arith", "Laurent expansion of zero");
  Poly n = r.num().taylor_shift(c);
  Poly d = r.den().taylor_shift(c);
  const int zn = strip_low_zeros(n);
  const int zd = strip_low_zeros(d);
  return LaurentSeries{zn - zd, series_divide(n, d, count)};
}

LaurentSeries laurent_at_infinity(const RatFunc& r, int count) {
  if (r.is_zero()) throw Error(ErrorKind::InvalidArgument, "exact-arith", "Laurent expansion of zero");
  Poly n = r.num().reversed();
  Poly d = r.den().reversed();
  return LaurentSeries{r.order_at_infinity(), series_divide(n, d, count)};
}

}  // namespace schwarzric
