#ifndef HECKE_SURD_HPP
#define HECKE_SURD_HPP

#include <gmpxx.h>

#include <string>

#include "hecke/real.hpp"

namespace hecke {

/// Nonzero number i^e * q * sqrt(r) with e in Z/4, q > 0 rational, r squarefree positive.
class SurdValue {
 public:
  SurdValue() = default;
  SurdValue(int i_exp, mpq_class q, mpz_class r);
  /// Principal square root of a nonzero rational.
  static SurdValue sqrt_of(const mpq_class& x);
  static SurdValue rational(const mpq_class& x);
  static SurdValue i_power(int e);

  int i_exponent() const { return e_; }
  const mpq_class& rational_part() const { return q_; }
  const mpz_class& radicand() const { return r_; }

  friend SurdValue operator*(const SurdValue& a, const SurdValue& b);
  SurdValue inverse() const;
  SurdValue pow(long n) const;
  friend bool operator==(const SurdValue& a, const SurdValue& b) {
    return a.e_ == b.e_ && a.q_ == b.q_ && a.r_ == b.r_;
  }

  /// Equality modulo Q^x: the quotient is a (signed) rational.
  bool equal_mod_rationals(const SurdValue& o) const;
  Complex value(unsigned bits = kDefaultBits) const;
  std::string str() const;

 private:
  int e_ = 0;
  mpq_class q_ = 1;
  mpz_class r_ = 1;
};

/// n = s^2 * r with r squarefree; returns r and sets s (n > 0).
mpz_class squarefree_decompose(const mpz_class& n, mpz_class* s = nullptr);

}  // namespace hecke

#endif
