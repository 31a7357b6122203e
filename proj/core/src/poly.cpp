#include "schwarzric/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "schwarzric/error.hpp"

namespace schwarzric {

namespace {

void append_factors(BigInt n, std::map<BigInt, int>& out);

bool is_probable_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return BigInt(2);
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](const BigInt& v) {
      BigInt r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      BigInt diff = x - y;
      mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
      d = gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void append_factors(BigInt n, std::map<BigInt, int>& out) {
  for (unsigned long p = 2; p < 10000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[BigInt(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_brent(n);
  append_factors(d, out);
  append_factors(n / d, out);
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
  BigInt m = n;
  mpz_abs(m.get_mpz_t(), m.get_mpz_t());
  std::map<BigInt, int> factors;
  append_factors(m, factors);
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

Poly::Poly(BigRat c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<BigRat> ascending) : c_(std::move(ascending)) { trim(); }

Poly Poly::monomial(BigRat c, unsigned k) {
  if (c.is_zero()) return Poly();
  std::vector<BigRat> v(k + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::linear(const BigRat& root) { return Poly(std::vector<BigRat>{-root, BigRat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Degree Poly::degree() const {
  return c_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(c_.size()) - 1);
}

const BigRat& Poly::leading() const {
  if (c_.empty()) throw Error(ErrorKind::InvalidArgument, "exact-arith", "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRat& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<BigRat> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(std::move(q));
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact-arith", "polynomial division by zero");
  if (c_.size() < d.c_.size()) return {Poly(), *this};
  std::vector<mpq_class> rem;
  rem.reserve(c_.size());
  for (const auto& c : c_) rem.push_back(c.raw());
  const std::size_t dn = d.c_.size();
  const mpq_class lead_inv = 1 / d.c_.back().raw();
  std::vector<BigRat> quot(c_.size() - dn + 1);
  for (std::size_t k = c_.size(); k-- >= dn;) {
    if (sgn(rem[k]) == 0) continue;
    const mpq_class t = rem[k] * lead_inv;
    const std::size_t shift = k - (dn - 1);
    for (std::size_t j = 0; j < dn; ++j) rem[shift + j] -= t * d.c_[j].raw();
    quot[shift] = BigRat(t);
  }
  std::vector<BigRat> r;
  r.reserve(dn - 1);
  for (std::size_t i = 0; i + 1 < dn; ++i) r.emplace_back(std::move(rem[i]));
  return {Poly(std::move(quot)), Poly(std::move(r))};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<BigRat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigRat(static_cast<long>(i));
  return Poly(std::move(d));
}

BigRat Poly::evaluate(const BigRat& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x.raw() + c_[i].raw();
  return BigRat(acc);
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::taylor_shift(const BigRat& shift) const {
  // Horner in the ring Q[t]: p(t + shift).
  std::vector<mpq_class> acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc.emplace_back(0);
    for (std::size_t j = acc.size() - 1; j > 0; --j) acc[j] = acc[j - 1] + acc[j] * shift.raw();
    acc[0] = acc[0] * shift.raw() + c_[i].raw();
  }
  std::vector<BigRat> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(std::move(q));
  return Poly(std::move(out));
}

Poly Poly::reversed() const {
  std::vector<BigRat> r(c_.rbegin(), c_.rend());
  return Poly(std::move(r));
}

std::vector<BigInt> Poly::primitive_integer_coeffs() const {
  std::vector<BigInt> out;
  if (is_zero()) return out;
  BigInt den = 1;
  for (const auto& c : c_) den = lcm(den, c.denominator());
  BigInt g = 0;
  for (const auto& c : c_) {
    out.push_back(c.numerator() * (den / c.denominator()));
    g = gcd(g, out.back());
  }
  if (leading().sign() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigRat& c = c_[i];
    if (c.is_zero()) continue;
    const BigRat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RationalRootSplit rational_roots(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "exact-arith", "roots of the zero polynomial");
  RationalRootSplit out;
  Poly rest = p.monic();
  std::vector<BigRat> distinct;

  // Candidates p/q come from the square-free part, which keeps the
  // divisor sets small for repeated factors.
  Poly sqf = rest.is_constant() ? rest : rest.exact_div(gcd(rest, rest.derivative()));
  while (!sqf.is_zero() && sqf.coeff(0).is_zero()) {
    distinct.emplace_back(0);
    sqf = sqf.exact_div(Poly::x());
  }
  if (!sqf.is_constant()) {
    auto ints = sqf.primitive_integer_coeffs();
    const auto num_divs = positive_divisors(ints.front());
    const auto den_divs = positive_divisors(ints.back());
    for (const auto& q : den_divs) {
      for (const auto& n : num_divs) {
        if (sqf.is_constant()) break;
        if (gcd(n, q) != 1) continue;
        for (int s : {1, -1}) {
          BigRat cand(BigInt(n * s), q);
          if (sqf.evaluate(cand).is_zero()) {
            distinct.push_back(cand);
            sqf = sqf.exact_div(Poly::linear(cand));
          }
        }
      }
    }
  }
  std::sort(distinct.begin(), distinct.end());
  for (const auto& r : distinct) {
    int mult = 0;
    const Poly lin = Poly::linear(r);
    for (;;) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.roots.emplace_back(r, mult);
  }
  out.cofactor = rest.monic();
  return out;
}

}  // namespace schwarzric
