#include "hecke/surd.hpp"

#include "hecke/error.hpp"

namespace hecke {

mpz_class squarefree_decompose(const mpz_class& n0, mpz_class* s_out) {
  if (n0 <= 0) fail(ErrorCode::InvalidArgument, "squarefree part of a nonpositive integer");
  mpz_class n = n0, r = 1, s = 1;
  for (unsigned long p = 2; p <= 1000000; ++p) {
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e % 2) r *= p;
    for (int k = 0; k < e / 2; ++k) s *= p;
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class t;
      mpz_sqrt(t.get_mpz_t(), n.get_mpz_t());
      s *= t;
    } else {
      r *= n;
    }
  }
  if (s_out) *s_out = s;
  return r;
}

SurdValue::SurdValue(int i_exp, mpq_class q, mpz_class r) : e_(((i_exp % 4) + 4) % 4), q_(std::move(q)), r_(std::move(r)) {
  q_.canonicalize();
  if (q_ == 0) fail(ErrorCode::InvalidArgument, "surd value must be nonzero");
  if (q_ < 0) {
    q_ = -q_;
    e_ = (e_ + 2) % 4;
  }
  if (r_ <= 0) fail(ErrorCode::InvalidArgument, "radicand must be positive");
  mpz_class s;
  mpz_class sf = squarefree_decompose(r_, &s);
  q_ *= s;
  r_ = sf;
}

SurdValue SurdValue::sqrt_of(const mpq_class& x) {
  if (x == 0) fail(ErrorCode::InvalidArgument, "square root of zero is not a surd value");
  int e = x < 0 ? 1 : 0;
  mpq_class a = abs(x);
  // sqrt(n/d) = sqrt(n d) / d
  mpz_class nd = a.get_num() * a.get_den();
  return SurdValue(e, mpq_class(1, a.get_den()), nd);
}

SurdValue SurdValue::rational(const mpq_class& x) { return SurdValue(0, x, 1); }
SurdValue SurdValue::i_power(int e) { return SurdValue(e, 1, 1); }

SurdValue operator*(const SurdValue& a, const SurdValue& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.r_.get_mpz_t(), b.r_.get_mpz_t());
  // sqrt(r1) sqrt(r2) = g sqrt(r1 r2 / g^2)
  mpz_class r = (a.r_ / g) * (b.r_ / g);
  return SurdValue(a.e_ + b.e_, a.q_ * b.q_ * mpq_class(g), r);
}

SurdValue SurdValue::inverse() const {
  // 1/(i^e q sqrt r) = i^{-e} sqrt(r) / (q r)
  return SurdValue(-e_, 1 / (q_ * mpq_class(r_)), r_);
}

SurdValue SurdValue::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  SurdValue acc;
  SurdValue b = *this;
  while (n) {
    if (n & 1) acc = acc * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return acc;
}

bool SurdValue::equal_mod_rationals(const SurdValue& o) const {
  SurdValue q = *this * o.inverse();
  return q.r_ == 1 && q.e_ % 2 == 0;
}

Complex SurdValue::value(unsigned bits) const {
  Real m = Real(q_, bits) * sqrt(Real(r_, bits));
  Real z(0L, bits);
  switch (e_) {
    case 0:
      return {m, z};
    case 1:
      return {z, m};
    case 2:
      return {-m, z};
    default:
      return {z, -m};
  }
}

std::string SurdValue::str() const {
  std::string s;
  if (e_ == 1) s = "i*";
  if (e_ == 2) s = "-";
  if (e_ == 3) s = "-i*";
  s += q_.get_str();
  if (r_ != 1) s += "*sqrt(" + r_.get_str() + ")";
  return s;
}

}  // namespace hecke
