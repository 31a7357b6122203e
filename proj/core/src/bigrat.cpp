#include "schwarzric/bigrat.hpp"

#include <cctype>
#include <functional>

#include "schwarzric/error.hpp"

namespace schwarzric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::NotSplitOverRationals: return "NotSplitOverRationals";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::SingularMoebius: return "SingularMoebius";
    case ErrorKind::NonRationalPoles: return "NonRationalPoles";
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DivisionByZeroConstant: return "DivisionByZeroConstant";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

BigRat::BigRat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "exact-arith", "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "exact-arith", "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorKind::InvalidArgument, "exact-arith",
                 "not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
    std::string digits(s);
    if (digits[0] == '+') digits.erase(0, 1);
    return BigInt(digits, 10);
  };
  if (slash == std::string_view::npos) return BigRat(parse_int(text, true));
  const BigInt num = parse_int(text.substr(0, slash), true);
  const BigInt den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "exact-arith", "zero denominator in '" + std::string(text) + "'");
  return BigRat(num, den);
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact-arith", "rational division by zero");
  q_ /= o.q_;
  return *this;
}

BigRat BigRat::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "exact-arith", "inverse of zero");
  return BigRat(mpq_class(1) / q_);
}

BigRat BigRat::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return BigRat(n, d);
}

BigInt BigRat::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigRat BigRat::frac() const { return *this - BigRat(floor()); }

std::optional<BigRat> BigRat::sqrt() const {
  if (sign() < 0) return std::nullopt;
  const BigInt n = numerator();
  const BigInt d = denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return BigRat(rn, rd);
}

std::size_t BigRat::hash() const { return std::hash<std::string>{}(str()); }

std::ostream& operator<<(std::ostream& os, const BigRat& q) { return os << q.str(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

ExtRational ExtRational::parse(std::string_view text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf" || lower == "+inf" || lower == "infinity" || lower == "∞") return infinity();
  return ExtRational(BigRat::parse(text));
}

const BigRat& ExtRational::value() const {
  if (is_infinite()) throw Error(ErrorKind::InvalidArgument, "exact-arith", "value() of infinity");
  return std::get<BigRat>(v_);
}

BigRat ExtRational::inverse() const {
  if (is_infinite()) return BigRat(0);
  const auto& q = std::get<BigRat>(v_);
  if (q.is_zero()) throw Error(ErrorKind::ZeroParameter, "exact-arith", "parameter 0 has no inverse");
  return q.inverse();
}

std::string ExtRational::str() const { return is_infinite() ? "inf" : std::get<BigRat>(v_).str(); }

}  // namespace schwarzric
