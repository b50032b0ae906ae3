#ifndef HECKE_QPOLY_HPP
#define HECKE_QPOLY_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "hecke/real.hpp"

namespace hecke {

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly constant(const mpq_class& c);
  static QPoly monomial(const mpq_class& c, int degree);
  static QPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpq_class& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  mpq_class coeff(int i) const;
  const mpq_class& leading() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const mpq_class& s);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  QPoly monic() const;
  QPoly derivative() const;
  mpq_class eval(const mpq_class& x) const;
  Complex eval(const Complex& x) const;
  /// p(q(x))
  QPoly compose(const QPoly& q) const;
  /// p(x + s)
  QPoly shift(const mpq_class& s) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
/// Monic gcd (zero if both are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
/// Returns (g, s) with s*a = g mod b, g = gcd(a, b) monic.
std::pair<QPoly, QPoly> half_xgcd(const QPoly& a, const QPoly& b);
bool is_squarefree(const QPoly& f);
QPoly squarefree_part(const QPoly& f);
/// Exact rational discriminant of f (resultant of f and f' up to the usual sign).
mpq_class discriminant(const QPoly& f);
mpq_class resultant(const QPoly& a, const QPoly& b);
/// (a * b) mod m
QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m);
QPoly powmod(QPoly a, unsigned long e, const QPoly& m);
/// Primitive integer polynomial with the same roots, positive leading coefficient.
std::vector<mpz_class> to_primitive_integer(const QPoly& f);
QPoly from_integer(const std::vector<mpz_class>& f);

}  // namespace hecke

#endif
