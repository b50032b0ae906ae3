#ifndef HECKE_REAL_HPP
#define HECKE_REAL_HPP

// Thin RAII wrappers over MPFR. Every value carries its own precision; binary
// operations produce a result at the larger of the operand precisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace hecke {

inline constexpr unsigned kDefaultBits = 192;

class Real {
 public:
  explicit Real(unsigned bits = kDefaultBits);
  Real(long v, unsigned bits);
  Real(double v, unsigned bits);
  Real(const mpz_class& v, unsigned bits);
  Real(const mpq_class& v, unsigned bits);
  static Real parse(const std::string& text, unsigned bits);
  static Real pi(unsigned bits);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  Real with_bits(unsigned bits) const;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  std::string str(int digits = 0) const;
  // Exact dyadic value of the current binary approximation.
  mpq_class to_mpq() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow_si(const Real& x, long n);
Real gamma(const Real& x);
Real floor(const Real& x);
// Bits of x ~ 2^-k helper: returns 2^e at the given precision.
Real exp2i(long e, unsigned bits);

struct Complex {
  Real re;
  Real im;

  explicit Complex(unsigned bits = kDefaultBits) : re(bits), im(bits) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Real r) : re(std::move(r)), im(0L, re.bits()) {}

  unsigned bits() const { return re.bits() > im.bits() ? re.bits() : im.bits(); }
  Complex with_bits(unsigned bits) const { return {re.with_bits(bits), im.with_bits(bits)}; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }
  Real norm() const;  // |z|^2
  Real abs() const;

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) {
    a.re *= b;
    a.im *= b;
    return a;
  }
};

Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow_si(const Complex& z, long n);

}  // namespace hecke

#endif
