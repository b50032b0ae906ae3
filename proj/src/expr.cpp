#include "hecke/expr.hpp"

#include <cctype>

namespace hecke {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }
  static Expr node(Expr::Kind k, Expr a, Expr b) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  Expr sum() {
    Expr e = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        e = node(Expr::Kind::Add, std::move(e), term());
      } else if (peek('-')) {
        ++pos_;
        e = node(Expr::Kind::Sub, std::move(e), term());
      } else {
        return e;
      }
    }
  }
  Expr term() {
    Expr e = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        e = node(Expr::Kind::Mul, std::move(e), unary());
      } else if (peek('/')) {
        ++pos_;
        e = node(Expr::Kind::Div, std::move(e), unary());
      } else if (starts_atom()) {
        e = node(Expr::Kind::Mul, std::move(e), power());
      } else {
        return e;
      }
    }
  }
  Expr unary() {
    if (peek('-')) {
      ++pos_;
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.args.push_back(unary());
      return e;
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }
  Expr power() {
    Expr base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected a nonnegative integer exponent");
      Expr e;
      e.kind = Expr::Kind::Pow;
      e.exponent = std::stoul(s_.substr(start, pos_ - start));
      if (e.exponent > 4096) error("exponent too large");
      e.args.push_back(std::move(base));
      return e;
    }
    return base;
  }
  Expr atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = sum();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Expr e;
      e.kind = Expr::Kind::Num;
      e.num = mpq_class(mpz_class(s_.substr(start, pos_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      Expr e;
      e.kind = Expr::Kind::Var;
      e.name = s_.substr(start, pos_ - start);
      return e;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Var) out.insert(e.name);
  for (const auto& a : e.args) collect(a, out);
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::set<std::string> variables(const Expr& e) {
  std::set<std::string> out;
  collect(e, out);
  return out;
}

mpq_class eval_rational(const Expr& e) {
  return eval_in<mpq_class>(
      e,
      [](const std::string& name) -> mpq_class {
        fail(ErrorCode::ParseError, "unexpected variable '" + name + "' in a rational expression");
      },
      [](const mpq_class& q) { return q; });
}

}  // namespace hecke
