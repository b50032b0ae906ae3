#include "hecke/lseries.hpp"

#include <atomic>
#include <climits>
#include <cmath>
#include <exception>
#include <thread>

#include "hecke/error.hpp"

namespace hecke {

namespace {

bool is_nonpositive_integer(const Real& s, long step) {
  if (s.sign() > 0 || !(floor(s) == s)) return false;
  mpq_class q = s.to_mpq();
  mpz_class z = q.get_num();
  return z % step == 0;
}

Real i128_real(__int128 v, unsigned bits) {
  if (v >= LONG_MIN && v <= LONG_MAX) return Real(static_cast<long>(v), bits);
  unsigned __int128 u = v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  unsigned long long words[2] = {static_cast<unsigned long long>(u), static_cast<unsigned long long>(u >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(unsigned long long), 0, 0, words);
  if (v < 0) z = -z;
  return Real(z, bits);
}

Real product_error(const Complex& a, const Real& ea, const Complex& b, const Real& eb) {
  return abs(a) * eb + abs(b) * ea + ea * eb;
}

}  // namespace

Real gamma_R(const Real& s) {
  if (is_nonpositive_integer(s, 2)) fail(ErrorCode::PoleAtS, "Gamma_R has a pole at s = " + s.str(10));
  unsigned b = s.bits();
  Real half(mpq_class(1, 2), b);
  return pow(Real::pi(b), -(s * half)) * gamma(s * half);
}

Real gamma_C(const Real& s) {
  if (is_nonpositive_integer(s, 1)) fail(ErrorCode::PoleAtS, "Gamma_C has a pole at s = " + s.str(10));
  unsigned b = s.bits();
  Real two(2L, b);
  return two * pow(two * Real::pi(b), -s) * gamma(s);
}

Real linf_factor(const InfinityType& t, const EmbeddingSet& emb, const Real& s, const std::vector<int>& eps) {
  if (t.n.size() != emb.size()) fail(ErrorCode::InvalidArgument, "infinity type length does not match the field");
  if (!pair_weight(t, emb)) fail(ErrorCode::NotPure, "analytic type " + to_string(t) + " is not pure");
  unsigned b = s.bits();
  Real acc(1L, b);
  size_t real_idx = 0;
  for (const auto& pl : emb.places) {
    if (pl.real) {
      if (real_idx >= eps.size()) fail(ErrorCode::InvalidArgument, "one parity bit per real place is required");
      acc *= gamma_R(s + Real(t.n[pl.rep] + eps[real_idx++], b));
    } else {
      acc *= gamma_C(s + Real(std::max(t.n[pl.rep], t.n[pl.conj]), b));
    }
  }
  return acc;
}

bool linf_is_finite(const InfinityType& t, const EmbeddingSet& emb, long s, const std::vector<int>& eps) {
  size_t real_idx = 0;
  for (const auto& pl : emb.places) {
    if (pl.real) {
      if (real_idx >= eps.size()) fail(ErrorCode::InvalidArgument, "one parity bit per real place is required");
      long x = s + t.n[pl.rep] + eps[real_idx++];
      if (x <= 0 && x % 2 == 0) return false;
    } else {
      if (s + std::max(t.n[pl.rep], t.n[pl.conj]) <= 0) return false;
    }
  }
  return true;
}

Real tail_bound(long X, const Real& sigma, int r) {
  unsigned b = sigma.bits();
  Real one(1L, b);
  Real sm1 = sigma - one;
  if (sm1.sign() <= 0) fail(ErrorCode::OutsideConvergence, "tail bound needs sigma > 1");
  Real L = log(Real(X, b)) + one;
  Real xp = pow(Real(X, b), one - sigma);
  // I_j = int_X^inf (log u + 1)^j u^-sigma du
  Real I = xp / sm1;
  Real Lj = one;
  for (int j = 1; j <= r - 1; ++j) {
    Lj *= L;
    I = xp * Lj / sm1 + Real(static_cast<long>(j), b) * I / sm1;
  }
  Real bound = sigma * I;
  if (r == 2) {
    Real closed = Real(2L, b) * L * xp / sm1;
    if (closed > bound) bound = closed;
  }
  return bound;
}

long choose_norm_bound(const Real& sigma, double required_tail, int r) {
  Real req(required_tail, sigma.bits());
  long X = 1024;
  while (tail_bound(X, sigma, r) > req) {
    if (X >= kMaxNormBound) fail(ErrorCode::TailTooLarge, "required tail is not reachable below X = 1e8");
    X = std::min(kMaxNormBound, X * 2);
  }
  return X;
}

EvalResult dirichlet_sum(const CoefficientStream& st, const Real& s, const SumOptions& opt) {
  const unsigned wp = opt.bits + 32;
  Real sw = s.with_bits(wp);
  Real sigma = sw - Real(mpq_class(st.weight, 2), wp);
  if (sigma <= Real(1L, wp))
    fail(ErrorCode::OutsideConvergence, "Re(s) = " + s.str(10) + " is not above w/2 + 1 = " + std::to_string(st.weight / 2.0 + 1));
  Real tail = tail_bound(st.X, sigma, st.divisor_order);
  if (opt.required_tail > 0 && tail > Real(opt.required_tail, wp))
    fail(ErrorCode::TailTooLarge, "tail bound " + tail.str(6) + " at X = " + std::to_string(st.X) + " exceeds the requirement");

  const QuadField& F = catalog_field(st.field);
  Complex theta = F.value({0, 1}, wp);
  Real e = sw + Real(st.tate, wp);
  bool integral = floor(e) == e && abs(e) < Real(1L << 30, wp);
  long ei = integral ? static_cast<long>(e.to_double()) : 0;
  double sig_d = sigma.to_double() + st.weight / 2.0;

  const long block = 4096;
  const long nblocks = st.X / block + 1;
  std::vector<Complex> partial(static_cast<size_t>(nblocks), Complex(wp));
  std::vector<double> absum(static_cast<size_t>(nblocks), 0.0);
  std::atomic<long> next{0};
  auto work = [&] {
    for (long blk = next++; blk < nblocks; blk = next++) {
      Complex acc{Real(0L, wp), Real(0L, wp)};
      double ab = 0;
      long lo = std::max(1L, blk * block), hi = std::min(st.X, blk * block + block - 1);
      for (long n = lo; n <= hi; ++n) {
        const QElem& a = st.a[static_cast<size_t>(n)];
        if (a.is_zero()) continue;
        Real nn(n, wp);
        Real f = integral ? pow_si(nn, -ei) : pow(nn, -e);
        Real b = i128_real(a.b, wp);
        Real re = i128_real(a.a, wp) + b * theta.re;
        Real im = b * theta.im;
        acc.re += re * f;
        acc.im += im * f;
        ab += std::hypot(static_cast<double>(a.a) + static_cast<double>(a.b) * theta.re.to_double(),
                         static_cast<double>(a.b) * theta.im.to_double()) *
              std::pow(static_cast<double>(n), -sig_d);
      }
      partial[static_cast<size_t>(blk)] = std::move(acc);
      absum[static_cast<size_t>(blk)] = ab;
    }
  };
  unsigned nw = std::max(1u, opt.workers);
  if (nw == 1) {
    work();
  } else {
    std::vector<std::thread> ts;
    std::vector<std::exception_ptr> errs(nw);
    for (unsigned w = 0; w < nw; ++w)
      ts.emplace_back([&, w] {
        try {
          work();
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    for (auto& t : ts) t.join();
    for (auto& x : errs)
      if (x) std::rethrow_exception(x);
  }
  Complex total{Real(0L, wp), Real(0L, wp)};
  double ab = 0;
  for (long blk = 0; blk < nblocks; ++blk) {
    total += partial[static_cast<size_t>(blk)];
    ab += absum[static_cast<size_t>(blk)];
  }
  EvalResult r;
  r.value = total.with_bits(opt.bits);
  r.bits = opt.bits;
  r.X = st.X;
  r.tail_bound = tail.with_bits(opt.bits);
  Real rounding = Real(ab * 1.01 + 1.0, opt.bits) * Real(static_cast<long>(st.X) + 16, opt.bits) *
                  exp2i(-static_cast<long>(wp) + 4, opt.bits);
  rounding += abs(r.value) * exp2i(-static_cast<long>(opt.bits) + 1, opt.bits);
  r.error = r.tail_bound + rounding;
  return r;
}

EvalResult euler_product(const HeckeCharacterSpec& chi, const Real& s, long X, unsigned bits) {
  if (chi.base_change) {
    EvalResult a = euler_product(chi.untwisted(), s, X, bits);
    EvalResult b = euler_product(chi.twisted(), s, X, bits);
    EvalResult r = a;
    r.value = a.value * b.value;
    r.tail_bound = product_error(a.value, a.tail_bound, b.value, b.tail_bound);
    r.error = product_error(a.value, a.error, b.value, b.error);
    return r;
  }
  chi.validate();
  const unsigned wp = bits + 32;
  Real sw = s.with_bits(wp);
  Real sigma = sw - Real(mpq_class(chi.weight(), 2), wp);
  Real one(1L, wp);
  if (sigma <= one) fail(ErrorCode::OutsideConvergence, "Euler product needs Re(s) > w/2 + 1");
  const QuadField& F = chi.F();
  Real e = sw + Real(chi.tate, wp);
  Complex prod{Real(1L, wp), Real(0L, wp)};
  for (const PrimeIdeal& P : primes_up_to(F, X)) {
    QElem v = char_value(chi, P);
    if (v.is_zero()) continue;
    Complex z = F.value(v, wp) * pow(Real(P.norm, wp), -e);
    Complex denom = Complex(one) - z;
    prod /= denom;
  }
  EvalResult r;
  r.value = prod.with_bits(bits);
  r.bits = bits;
  r.X = X;
  r.rigorous = false;
  Real t = Real(2L, wp) * pow(Real(X, wp), one - sigma) / ((sigma - one) * log(Real(X, wp)));
  r.tail_bound = (abs(prod) * (exp(t) - one)).with_bits(bits);
  r.error = r.tail_bound + abs(r.value) * exp2i(-static_cast<long>(bits) + 8, bits);
  return r;
}

InfinityType analytic_type(const HeckeCharacterSpec& chi, bool conjugate) {
  InfinityType n;
  n.n = conjugate ? std::vector<long>{0, chi.k} : std::vector<long>{chi.k, 0};
  return analytic_type(n, chi.tate);
}

namespace {

// L_f at several points from one stream per factor.
std::vector<EvalResult> finite_values(const HeckeCharacterSpec& chi, const std::vector<long>& ms, const LOptions& opt) {
  if (chi.base_change) {
    auto a = finite_values(chi.untwisted(), ms, opt);
    auto b = finite_values(chi.twisted(), ms, opt);
    for (size_t i = 0; i < ms.size(); ++i) {
      Real e = product_error(a[i].value, a[i].error, b[i].value, b[i].error);
      a[i].tail_bound = product_error(a[i].value, a[i].tail_bound, b[i].value, b[i].tail_bound);
      a[i].value = a[i].value * b[i].value;
      a[i].error = e;
      a[i].X = std::min(a[i].X, b[i].X);
    }
    return a;
  }
  const unsigned wp = opt.bits;
  long mmin = *std::min_element(ms.begin(), ms.end());
  Real sigma = Real(mmin, wp) - Real(mpq_class(chi.weight(), 2), wp);
  if (sigma <= Real(1L, wp))
    fail(ErrorCode::OutsideConvergence,
         "s = " + std::to_string(mmin) + " is outside the region of absolute convergence (w/2 + 1 = " +
             std::to_string(chi.weight() / 2.0 + 1) + ")");
  long X = opt.X > 0 ? opt.X : choose_norm_bound(sigma, opt.tail);
  CoefficientStream st = coefficients(chi, X, opt.workers);
  std::vector<EvalResult> out;
  for (long m : ms) {
    SumOptions so;
    so.bits = opt.bits;
    so.workers = opt.workers;
    so.required_tail = opt.X > 0 ? 0 : opt.tail;
    out.push_back(dirichlet_sum(st, Real(m, wp), so));
  }
  return out;
}

std::vector<EvalResult> completed_values(const HeckeCharacterSpec& chi, const std::vector<long>& ms, const LOptions& opt) {
  chi.validate();
  const QuadField& F = chi.F();
  EmbeddingSet emb = embeddings(F.tower(), std::max(opt.bits, 64u));
  InfinityType t = analytic_type(chi, opt.conjugate);
  CriticalSet crit = critical_set(t, emb);
  std::vector<Real> gam;
  for (long m : ms) {
    Real g = linf_factor(t, emb, Real(m, opt.bits));
    if (chi.base_change) g = g * g;
    if (!crit.contains(m))
      fail(ErrorCode::InvalidArgument, "s = " + std::to_string(m) + " is not critical (critical set " + crit.str() + ")");
    gam.push_back(std::move(g));
  }
  auto vals = finite_values(chi, ms, opt);
  for (size_t i = 0; i < ms.size(); ++i) {
    EvalResult& r = vals[i];
    Real ag = abs(gam[i]);
    r.value = r.value * gam[i];
    if (opt.conjugate) r.value = r.value.conj();
    r.tail_bound = r.tail_bound * ag;
    r.error = r.error * ag + abs(r.value) * exp2i(-static_cast<long>(opt.bits) + 8, opt.bits);
  }
  return vals;
}

}  // namespace

EvalResult lvalue(const HeckeCharacterSpec& chi, const Real& s, const LOptions& opt) {
  chi.validate();
  if (chi.base_change) {
    EvalResult a = lvalue(chi.untwisted(), s, opt), b = lvalue(chi.twisted(), s, opt);
    EvalResult r = a;
    r.tail_bound = product_error(a.value, a.tail_bound, b.value, b.tail_bound);
    r.error = product_error(a.value, a.error, b.value, b.error);
    r.value = a.value * b.value;
    r.X = std::min(a.X, b.X);
    return r;
  }
  Real sigma = s.with_bits(opt.bits) - Real(mpq_class(chi.weight(), 2), opt.bits);
  if (sigma <= Real(1L, opt.bits)) fail(ErrorCode::OutsideConvergence, "s is outside the region of absolute convergence");
  long X = opt.X > 0 ? opt.X : choose_norm_bound(sigma, opt.tail);
  CoefficientStream st = coefficients(chi, X, opt.workers);
  SumOptions so;
  so.bits = opt.bits;
  so.workers = opt.workers;
  so.required_tail = opt.X > 0 ? 0 : opt.tail;
  EvalResult r = dirichlet_sum(st, s, so);
  if (opt.conjugate) r.value = r.value.conj();
  return r;
}

EvalResult completed(const HeckeCharacterSpec& chi, long m, const LOptions& opt) {
  return completed_values(chi, {m}, opt)[0];
}

RatioResult ratio(const HeckeCharacterSpec& chi, long m, const LOptions& opt) {
  auto v = completed_values(chi, {m, m + 1}, opt);
  RatioResult r;
  r.m = m;
  Real den = abs(v[1].value);
  if (den <= v[1].error)
    fail(ErrorCode::DenominatorIndistinguishableFromZero, "value at s = " + std::to_string(m + 1) + " is within its error of 0");
  r.ratio = v[0].value / v[1].value;
  r.error = (v[0].error + abs(r.ratio) * v[1].error) / (den - v[1].error);
  r.numerator = std::move(v[0]);
  r.denominator = std::move(v[1]);
  return r;
}

}  // namespace hecke
