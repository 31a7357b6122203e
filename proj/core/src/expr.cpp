#include "schwarzric/expr.hpp"

#include <cctype>

namespace schwarzric {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"operator", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string found() const {
    if (pos_ >= text_.size()) return "end of input";
    return "'" + std::string(1, text_[pos_]) + "'";
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    throw SyntaxError(pos_, std::move(expected), found());
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      const std::size_t at = pos_++;
      ExprPtr rhs = term();
      lhs = Expr::make_binary(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, lhs, rhs, at);
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      const std::size_t at = pos_++;
      ExprPtr rhs = unary();
      lhs = Expr::make_binary(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, lhs, rhs, at);
    }
  }

  ExprPtr unary() {
    if (peek() == '-') {
      const std::size_t at = pos_++;
      return Expr::make_neg(unary(), at);
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek() != '^') return base;
    const std::size_t at = pos_++;
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail({"integer exponent"});
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const BigInt e(std::string(text_.substr(start, pos_ - start)), 10);
    if (e > kMaxExponent) {
      pos_ = start;
      throw SyntaxError(start, {"integer exponent <= " + std::to_string(kMaxExponent)}, e.get_str());
    }
    return Expr::make_pow(base, static_cast<unsigned>(e.get_ui()), at);
  }

  ExprPtr primary() {
    const char c = peek();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr::make_number(BigInt(std::string(text_.substr(at, pos_ - at)), 10), at);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Expr::make_variable(std::string(text_.substr(at, pos_ - at)), at);
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      if (peek() != ')') fail({"')'", "operator"});
      ++pos_;
      return inner;
    }
    fail({"integer", "variable", "'('", "'-'"});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Number:
    case Expr::Kind::Variable: return 5;
  }
  return 0;
}

void print_into(const Expr& e, std::string& out);

void print_operand(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  print_into(e, out);
  if (parens) out += ')';
}

void print_into(const Expr& e, std::string& out) {
  const int p = precedence(e);
  switch (e.kind) {
    case Expr::Kind::Number: out += e.number.get_str(); return;
    case Expr::Kind::Variable: out += e.name; return;
    case Expr::Kind::Neg:
      out += '-';
      print_operand(*e.lhs, precedence(*e.lhs) < 3, out);
      return;
    case Expr::Kind::Pow:
      print_operand(*e.lhs, precedence(*e.lhs) < 5, out);
      out += '^';
      out += std::to_string(e.exponent);
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      static constexpr const char* ops[] = {" + ", " - ", "*", "/"};
      const int op = static_cast<int>(e.kind) - static_cast<int>(Expr::Kind::Add);
      print_operand(*e.lhs, precedence(*e.lhs) < p, out);
      out += ops[op];
      print_operand(*e.rhs, precedence(*e.rhs) <= p, out);
      return;
    }
  }
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error(ErrorKind::SyntaxError, "cli",
            "syntax error at byte " + std::to_string(offset) + ": expected " + join_expected(expected) + ", found " +
                found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

ExprPtr Expr::make_number(BigInt n, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Number;
  e->number = std::move(n);
  e->offset = offset;
  return e;
}

ExprPtr Expr::make_variable(std::string name, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Variable;
  e->name = std::move(name);
  e->offset = offset;
  return e;
}

ExprPtr Expr::make_neg(ExprPtr x, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Neg;
  e->lhs = std::move(x);
  e->offset = offset;
  return e;
}

ExprPtr Expr::make_binary(Kind k, ExprPtr l, ExprPtr r, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  e->offset = offset;
  return e;
}

ExprPtr Expr::make_pow(ExprPtr base, unsigned exponent, std::size_t offset) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Pow;
  e->lhs = std::move(base);
  e->exponent = exponent;
  e->offset = offset;
  return e;
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Variable: return a.name == b.name;
    case Expr::Kind::Neg: return same_tree(*a.lhs, *b.lhs);
    case Expr::Kind::Pow: return a.exponent == b.exponent && same_tree(*a.lhs, *b.lhs);
    default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

RatFunc lower_expr(const Expr& e, std::string_view var) {
  switch (e.kind) {
    case Expr::Kind::Number: return RatFunc(BigRat(e.number));
    case Expr::Kind::Variable:
      if (e.name != var) throw SyntaxError(e.offset, {"variable '" + std::string(var) + "'"}, "'" + e.name + "'");
      return RatFunc::x();
    case Expr::Kind::Neg: return -lower_expr(*e.lhs, var);
    case Expr::Kind::Pow: return lower_expr(*e.lhs, var).pow(e.exponent);
    case Expr::Kind::Add: return lower_expr(*e.lhs, var) + lower_expr(*e.rhs, var);
    case Expr::Kind::Sub: return lower_expr(*e.lhs, var) - lower_expr(*e.rhs, var);
    case Expr::Kind::Mul: return lower_expr(*e.lhs, var) * lower_expr(*e.rhs, var);
    case Expr::Kind::Div: {
      const RatFunc d = lower_expr(*e.rhs, var);
      if (d.is_zero())
        throw Error(ErrorKind::DivisionByZeroConstant, "cli",
                    "division by zero at byte " + std::to_string(e.offset) + ": divisor '" + print_expr(*e.rhs) +
                        "' is identically 0");
      return lower_expr(*e.lhs, var) / d;
    }
  }
  return RatFunc();
}

RatFunc parse_ratfunc(std::string_view text, std::string_view var) { return lower_expr(*parse_expr(text), var); }

}  // namespace schwarzric
