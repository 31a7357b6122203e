#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "schwarzric/error.hpp"
#include "schwarzric/ratfunc.hpp"

namespace schwarzric {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Parse tree of a rational expression in one variable. Grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' integer)?
///   primary := integer | identifier | '(' expr ')'
///
/// Exponents are non-negative integer literals; there is no implicit multiplication.
struct Expr {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  BigInt number;           // Number
  std::string name;        // Variable
  unsigned exponent = 0;   // Pow
  ExprPtr lhs, rhs;        // operands (Neg and Pow use lhs only)
  std::size_t offset = 0;  // byte offset of the token that produced the node

  static ExprPtr make_number(BigInt n, std::size_t offset = 0);
  static ExprPtr make_variable(std::string name, std::size_t offset = 0);
  static ExprPtr make_neg(ExprPtr x, std::size_t offset = 0);
  static ExprPtr make_binary(Kind k, ExprPtr l, ExprPtr r, std::size_t offset = 0);
  static ExprPtr make_pow(ExprPtr base, unsigned e, std::size_t offset = 0);
};

/// Structural equality, ignoring source offsets.
bool same_tree(const Expr& a, const Expr& b);

/// Syntax error with the byte offset and the set of acceptable tokens.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
  std::string found_;
};

inline constexpr unsigned kMaxExponent = 4096;

ExprPtr parse_expr(std::string_view text);

/// Canonical text with minimal parentheses; parse_expr(print_expr(e)) is same_tree to e.
std::string print_expr(const Expr& e);

/// Evaluates into Q(var). Throws DivisionByZeroConstant (with offset) for a zero divisor
/// and SyntaxError for identifiers other than var.
RatFunc lower_expr(const Expr& e, std::string_view var = "y");

/// parse_expr followed by lower_expr.
RatFunc parse_ratfunc(std::string_view text, std::string_view var = "y");

}  // namespace schwarzric
