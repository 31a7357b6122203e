#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "schwarzric/error.hpp"

namespace schwarzric {

using BigInt = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(int n) : q_(n) {}  // NOLINT: implicit by design of numeric literals
  BigRat(long n) : q_(n) {}  // NOLINT
  BigRat(long num, long den);
  explicit BigRat(const BigInt& n) : q_(n) {}
  BigRat(const BigInt& num, const BigInt& den);
  explicit BigRat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "-p" or "p/q" in base 10. Throws Error(InvalidArgument).
  static BigRat parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  BigRat operator-() const { return BigRat(mpq_class(-q_)); }
  BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
  BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
  BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRat inverse() const;
  BigRat abs() const { return BigRat(mpq_class(::abs(q_))); }
  BigRat pow(unsigned e) const;
  BigInt floor() const;
  /// x - floor(x), in [0, 1).
  BigRat frac() const;
  /// Exact square root when this is the square of a rational.
  std::optional<BigRat> sqrt() const;

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }
  std::size_t hash() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& q);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// A rational number or the point at infinity.
class ExtRational {
 public:
  struct Infinity {
    friend bool operator==(Infinity, Infinity) { return true; }
  };

  ExtRational() : v_(BigRat(0)) {}
  ExtRational(BigRat q) : v_(std::move(q)) {}  // NOLINT
  ExtRational(int n) : v_(BigRat(n)) {}        // NOLINT
  static ExtRational infinity() { return ExtRational(Infinity{}); }

  /// "inf" (any case), "p" or "p/q".
  static ExtRational parse(std::string_view text);

  bool is_infinite() const { return std::holds_alternative<Infinity>(v_); }
  const BigRat& value() const;  // throws on infinity

  /// 1/x with 1/inf = 0; throws ZeroParameter for 0.
  BigRat inverse() const;

  std::string str() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) { return a.v_ == b.v_; }

 private:
  explicit ExtRational(Infinity i) : v_(i) {}
  std::variant<BigRat, Infinity> v_;
};

}  // namespace schwarzric
