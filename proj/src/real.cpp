#include "hecke/real.hpp"

#include <algorithm>
#include <memory>

#include "hecke/error.hpp"

namespace hecke {

namespace {
unsigned max_bits(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }
}  // namespace

Real::Real(unsigned bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v, unsigned bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v, unsigned bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const mpz_class& v, unsigned bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& v, unsigned bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real Real::parse(const std::string& text, unsigned bits) {
  Real r(bits);
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + text + "'");
    q.canonicalize();
    return Real(q, bits);
  }
  char* end = nullptr;
  mpfr_strtofr(r.v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end == text.c_str() || *end != '\0') fail(ErrorCode::ParseError, "bad number '" + text + "'");
  return r;
}

Real Real::pi(unsigned bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_bits(unsigned bits) const {
  Real r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  if (digits <= 0) digits = static_cast<int>(bits() * 0.30103) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

mpq_class Real::to_mpq() const {
  if (!is_finite()) fail(ErrorCode::Internal, "non-finite value in exact conversion");
  if (is_zero()) return 0;
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(e));
    q *= scale;
  } else {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q /= scale;
  }
  q.canonicalize();
  return q;
}

Real& Real::operator+=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real Real::operator-() const {
  Real r(bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

#define HECKE_UNARY(name, fn)                \
  Real name(const Real& x) {                 \
    Real r(x.bits());                        \
    fn(r.get(), x.get(), MPFR_RNDN);         \
    return r;                                \
  }
HECKE_UNARY(abs, mpfr_abs)
HECKE_UNARY(sqrt, mpfr_sqrt)
HECKE_UNARY(exp, mpfr_exp)
HECKE_UNARY(log, mpfr_log)
HECKE_UNARY(cos, mpfr_cos)
HECKE_UNARY(sin, mpfr_sin)
HECKE_UNARY(gamma, mpfr_gamma)
#undef HECKE_UNARY

Real floor(const Real& x) {
  Real r(x.bits());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(max_bits(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(max_bits(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow_si(const Real& x, long n) {
  Real r(x.bits());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real exp2i(long e, unsigned bits) {
  Real r(1L, bits);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
Complex& Complex::operator/=(const Complex& o) {
  Real d = o.norm();
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
Real Complex::norm() const { return re * re + im * im; }
Real Complex::abs() const {
  Real r(bits());
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDN);
  return r;
}

Real abs(const Complex& z) { return z.abs(); }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex sqrt(const Complex& z) {
  // principal branch
  Real r = z.abs();
  Real zero(0L, z.bits());
  if (r.is_zero()) return Complex(zero, zero);
  Real half(0.5, z.bits());
  Real a = sqrt((r + z.re) * half);
  Real b = sqrt((r - z.re) * half);
  if (z.im.sign() < 0) b = -b;
  return {a, b};
}

Complex pow_si(const Complex& z, long n) {
  Complex result{Real(1L, z.bits()), Real(0L, z.bits())};
  Complex base = z;
  bool invert = n < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  if (invert) {
    Complex one{Real(1L, z.bits()), Real(0L, z.bits())};
    return one / result;
  }
  return result;
}

}  // namespace hecke
