#include "hecke/qpoly.hpp"

#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

QPoly QPoly::constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }

QPoly QPoly::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

mpq_class QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<size_t>(i)];
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  mpq_class inv = 1 / leading();
  return *this * inv;
}

QPoly QPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<mpq_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(r));
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex QPoly::eval(const Complex& x) const {
  unsigned bits = x.bits();
  Complex acc{Real(0L, bits), Real(0L, bits)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc.re += Real(*it, bits);
  }
  return acc;
}

QPoly QPoly::compose(const QPoly& q) const {
  QPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * q;
    acc += constant(*it);
  }
  return acc;
}

QPoly QPoly::shift(const mpq_class& s) const {
  return compose(QPoly(std::vector<mpq_class>{s, 1}));
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (i == 0 || !unit) {
      out << a.get_str();
      if (i > 0) out << "*";
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<mpq_class> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {QPoly(), a};
  std::vector<mpq_class> q(static_cast<size_t>(da - db) + 1);
  mpq_class inv = 1 / b.leading();
  for (int i = da; i >= db; --i) {
    mpq_class c = r[static_cast<size_t>(i)] * inv;
    q[static_cast<size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= c * b[j];
  }
  r.resize(static_cast<size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::pair<QPoly, QPoly> half_xgcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a % b, r1 = b;
  QPoly s0 = QPoly::constant(1), s1;
  // invariant: s_i * a = r_i mod b
  std::swap(r0, r1);
  std::swap(s0, s1);
  // now r0 = b (s0 = 0), r1 = a mod b (s1 = 1)
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) return {QPoly(), QPoly()};
  mpq_class inv = 1 / r0.leading();
  return {r0 * inv, (s0 * inv) % b};
}

bool is_squarefree(const QPoly& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

QPoly squarefree_part(const QPoly& f) {
  if (f.degree() < 1) return f.monic();
  QPoly g = gcd(f, f.derivative());
  return divmod(f, g).first.monic();
}

mpq_class resultant(const QPoly& a0, const QPoly& b0) {
  // Euclidean resultant over a field.
  QPoly a = a0, b = b0;
  if (a.is_zero() || b.is_zero()) return 0;
  mpq_class res = 1;
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      mpq_class lb = b.leading();
      mpq_class p = 1;
      for (int i = 0; i < da; ++i) p *= lb;
      return res * p;
    }
    QPoly r = a % b;
    if (r.is_zero()) return 0;
    int dr = r.degree();
    mpq_class lb = b.leading();
    mpq_class p = 1;
    for (int i = 0; i < da - dr; ++i) p *= lb;
    res *= p;
    if ((da * db) % 2 == 1) res = -res;
    a = std::move(b);
    b = std::move(r);
  }
}

mpq_class discriminant(const QPoly& f) {
  int n = f.degree();
  if (n < 1) return 1;
  mpq_class r = resultant(f, f.derivative());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r / f.leading();
}

QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& m) { return (a * b) % m; }

QPoly powmod(QPoly a, unsigned long e, const QPoly& m) {
  QPoly r = QPoly::constant(1) % m;
  a = a % m;
  while (e) {
    if (e & 1UL) r = mulmod(r, a, m);
    e >>= 1;
    if (e) a = mulmod(a, a, m);
  }
  return r;
}

std::vector<mpz_class> to_primitive_integer(const QPoly& f) {
  mpz_class l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> r;
  r.reserve(f.coeffs().size());
  mpz_class g = 0;
  for (const auto& c : f.coeffs()) {
    mpq_class v = c * mpq_class(l);
    r.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.back().get_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& c : r) c /= g;
  if (!r.empty() && r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

QPoly from_integer(const std::vector<mpz_class>& f) {
  std::vector<mpq_class> c(f.begin(), f.end());
  return QPoly(std::move(c));
}

}  // namespace hecke
