#include "hecke/roots.hpp"

#include <cmath>

#include "hecke/error.hpp"

namespace hecke {

namespace {

// Aberth–Ehrlich iteration at fixed precision. Returns false if it did not converge.
bool aberth(const QPoly& f, unsigned bits, std::vector<Complex>& z) {
  const int n = f.degree();
  QPoly df = f.derivative();
  // Cauchy-type radius for the starting circle.
  double rad = 0;
  for (int i = 0; i < n; ++i) {
    double c = std::fabs(mpq_class(f[i] / f.leading()).get_d());
    if (c > 0) rad = std::max(rad, std::pow(c, 1.0 / (n - i)));
  }
  rad = std::max(rad, 1e-3);
  z.clear();
  for (int i = 0; i < n; ++i) {
    double ang = 2 * M_PI * i / n + 0.4;
    double r = rad * (0.7 + 0.3 * ((i * 7919) % 13) / 13.0);
    z.emplace_back(Real(r * std::cos(ang), bits), Real(r * std::sin(ang), bits));
  }
  Real one(1L, bits);
  Real tol = exp2i(-static_cast<long>(bits) + 8, bits);
  for (int iter = 0; iter < 4000; ++iter) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      Complex p = f.eval(z[i]);
      if (p.re.is_zero() && p.im.is_zero()) continue;
      Complex w = p / df.eval(z[i]);
      Complex s(bits);
      for (int j = 0; j < n; ++j)
        if (j != i) s += Complex(one) / (z[i] - z[j]);
      Complex corr = w / (Complex(one) - w * s);
      z[i] -= corr;
      Real scale = z[i].abs();
      if (scale < one) scale = one;
      if (corr.abs() > tol * scale) done = false;
    }
    if (done) return true;
  }
  return false;
}

}  // namespace

size_t nearest(const std::vector<Complex>& pts, const Complex& z, Real* dist) {
  size_t best = 0;
  Real bd(z.bits());
  for (size_t i = 0; i < pts.size(); ++i) {
    Real d = (pts[i] - z).abs();
    if (i == 0 || d < bd) {
      bd = d;
      best = i;
    }
  }
  if (dist) *dist = bd;
  return best;
}

RootSet polynomial_roots(const QPoly& f, unsigned bits) {
  if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "root finding needs a nonconstant polynomial");
  if (!is_squarefree(f)) fail(ErrorCode::InvalidArgument, "root finding needs a squarefree polynomial");
  unsigned b = bits;
  for (int attempt = 0; attempt <= 8; ++attempt, b *= 2) {
    RootSet rs;
    rs.bits = b;
    unsigned work = b + 32;
    if (f.degree() == 1) {
      rs.roots.emplace_back(Real(-f[0] / f[1], b));
      rs.separation = Real::parse("inf", b);
      return rs;
    }
    if (!aberth(f, work, rs.roots)) continue;
    const size_t n = rs.roots.size();
    Real sep(b);
    bool first = true;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        Real d = (rs.roots[i] - rs.roots[j]).abs();
        if (first || d < sep) {
          sep = d;
          first = false;
        }
      }
    Real thresh = exp2i(-static_cast<long>(b / 2), b);
    if (!(sep > thresh)) continue;
    // Real roots: conjugate is nearest to itself.
    for (size_t i = 0; i < n; ++i) {
      size_t k = nearest(rs.roots, rs.roots[i].conj());
      if (k == i) rs.roots[i].im = Real(0L, work);
    }
    for (auto& r : rs.roots) r = r.with_bits(b);
    rs.separation = sep.with_bits(b);
    return rs;
  }
  fail(ErrorCode::PrecisionExhausted, "roots not separated after raising precision 8 times");
}

}  // namespace hecke
