#ifndef HECKE_EXPR_HPP
#define HECKE_EXPR_HPP

#include <gmpxx.h>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

/// Parsed arithmetic expression over named variables and rational constants.
/// Grammar: sum := term (('+'|'-') term)*; term := unary (('*'|'/'|juxtaposition) unary)*;
/// unary := '-' unary | power; power := atom ('^' integer)?; atom := number | name | '(' sum ')'.
struct Expr {
  enum class Kind { Num, Var, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Num;
  mpq_class num;
  std::string name;
  unsigned long exponent = 0;
  std::vector<Expr> args;
};

Expr parse_expr(const std::string& text);
std::set<std::string> variables(const Expr& e);
/// Value of a variable-free expression.
mpq_class eval_rational(const Expr& e);

/// Evaluates `e` in a ring R. `leaf` maps a variable name to a ring element;
/// `lift` maps a rational to a ring element. Division is allowed only by
/// variable-free subexpressions.
template <class R>
R eval_in(const Expr& e, const std::function<R(const std::string&)>& leaf,
          const std::function<R(const mpq_class&)>& lift) {
  switch (e.kind) {
    case Expr::Kind::Num:
      return lift(e.num);
    case Expr::Kind::Var:
      return leaf(e.name);
    case Expr::Kind::Add:
      return eval_in<R>(e.args[0], leaf, lift) + eval_in<R>(e.args[1], leaf, lift);
    case Expr::Kind::Sub:
      return eval_in<R>(e.args[0], leaf, lift) - eval_in<R>(e.args[1], leaf, lift);
    case Expr::Kind::Mul:
      return eval_in<R>(e.args[0], leaf, lift) * eval_in<R>(e.args[1], leaf, lift);
    case Expr::Kind::Neg:
      return lift(mpq_class(0)) - eval_in<R>(e.args[0], leaf, lift);
    case Expr::Kind::Div: {
      mpq_class d = eval_rational(e.args[1]);
      if (d == 0) fail(ErrorCode::ParseError, "division by zero in expression");
      return eval_in<R>(e.args[0], leaf, lift) * lift(1 / d);
    }
    case Expr::Kind::Pow: {
      R base = eval_in<R>(e.args[0], leaf, lift);
      R acc = lift(mpq_class(1));
      for (unsigned long k = 0; k < e.exponent; ++k) acc = acc * base;
      return acc;
    }
  }
  fail(ErrorCode::Internal, "bad expression node");
}

}  // namespace hecke

#endif
