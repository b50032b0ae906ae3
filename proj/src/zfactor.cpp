#include "hecke/zfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "hecke/error.hpp"

namespace hecke {

namespace {

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;
using ZPoly = std::vector<mpz_class>;

// ---- arithmetic in Z/p[x], p an odd prime below 2^31 ----

struct Zp {
  u64 p;

  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  ZpPoly add(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i)
      r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
  }
  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i)
      r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
  }
  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  ZpPoly scale(const ZpPoly& a, u64 s) const {
    ZpPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], s);
    trim(r);
    return r;
  }
  void divmod(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) const {
    r = a;
    trim(r);
    if (r.size() < b.size()) {
      q.clear();
      return;
    }
    q.assign(r.size() - b.size() + 1, 0);
    u64 il = inv(b.back());
    for (size_t k = r.size() - b.size() + 1; k-- > 0;) {
      u64 c = mul(r[k + b.size() - 1], il);
      q[k] = c;
      if (c)
        for (size_t j = 0; j < b.size(); ++j) r[k + j] = sub(r[k + j], mul(c, b[j]));
    }
    trim(r);
    trim(q);
  }
  ZpPoly mod(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly q, r;
    divmod(a, b, q, r);
    return r;
  }
  ZpPoly monic(const ZpPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      ZpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // Returns (s, t) with s a + t b = 1 for coprime a, b.
  void xgcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) const {
    ZpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      ZpPoly q, r;
      divmod(r0, r1, q, r);
      ZpPoly s2 = sub(s0, mul(q, s1));
      ZpPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 il = inv(r0.back());
    s = scale(s0, il);
    t = scale(t0, il);
  }
  ZpPoly powmod(ZpPoly a, const mpz_class& e, const ZpPoly& f) const {
    ZpPoly r{1};
    r = mod(r, f);
    a = mod(a, f);
    size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = nbits; i-- > 0;) {
      r = mod(mul(r, r), f);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, a), f);
    }
    return r;
  }
  ZpPoly derivative(const ZpPoly& a) const {
    if (a.size() <= 1) return {};
    ZpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }
};

ZpPoly reduce(const ZPoly& f, u64 p) {
  ZpPoly r(f.size());
  mpz_class t;
  for (size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = t.get_ui();
  }
  Zp::trim(r);
  return r;
}

// Distinct-degree factorization: pairs (degree, product of all factors of that degree).
std::vector<std::pair<int, ZpPoly>> ddf(const Zp& F, ZpPoly f) {
  std::vector<std::pair<int, ZpPoly>> out;
  ZpPoly x{0, 1};
  ZpPoly h = x;
  mpz_class pp = F.p;
  int d = 0;
  while (static_cast<int>(f.size()) - 1 >= 2 * (d + 1)) {
    ++d;
    h = F.powmod(h, pp, f);
    ZpPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      out.emplace_back(d, g);
      ZpPoly q, r;
      F.divmod(f, g, q, r);
      f = q;
      h = F.mod(h, f);
    }
  }
  if (f.size() > 1) out.emplace_back(static_cast<int>(f.size()) - 1, F.monic(f));
  return out;
}

void edf(const Zp& F, const ZpPoly& f, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(F.monic(f));
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    ZpPoly a(static_cast<size_t>(n));
    for (auto& c : a) c = rng() % F.p;
    Zp::trim(a);
    if (a.size() < 2) continue;
    ZpPoly b = F.powmod(a, e, f);
    b = F.sub(b, ZpPoly{1});
    ZpPoly g = F.gcd(b, f);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0 && dg < n) {
      ZpPoly q, r;
      F.divmod(f, g, q, r);
      edf(F, g, d, rng, out);
      edf(F, q, d, rng, out);
      return;
    }
  }
}

std::vector<ZpPoly> factor_mod_p(const Zp& F, const ZpPoly& f) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ F.p);
  std::vector<ZpPoly> out;
  for (auto& [d, g] : ddf(F, f)) edf(F, g, d, rng, out);
  return out;
}

// ---- integer polynomial helpers ----

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

void zmod_coeffs(ZPoly& a, const mpz_class& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
}

void symmetric(ZPoly& a, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
}

// Exact division of monic-divisor polynomials over Z. Returns false if not divisible.
bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  if (r.size() < b.size()) return false;
  q.assign(r.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  for (size_t i = r.size(); i-- > b.size() - 1;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class c = r[i] / lb;
    q[i - (b.size() - 1)] = c;
    for (size_t j = 0; j < b.size(); ++j) r[i - (b.size() - 1) + j] -= c * b[j];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  ztrim(q);
  return true;
}

ZPoly lift_zp(const ZpPoly& a) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

// Lift g = A*B mod p (A, B monic coprime mod p) to modulus p^a.
void hensel_pair(const ZPoly& g, const Zp& F, const ZpPoly& a0, const ZpPoly& b0, unsigned steps,
                 ZPoly& A, ZPoly& B) {
  ZpPoly s, t;
  F.xgcd(a0, b0, s, t);  // s a0 + t b0 = 1
  A = lift_zp(a0);
  B = lift_zp(b0);
  mpz_class pk = F.p;
  for (unsigned k = 1; k < steps; ++k) {
    ZPoly ab = zmul(A, B);
    ZPoly e(std::max(g.size(), ab.size()));
    for (size_t i = 0; i < e.size(); ++i)
      e[i] = (i < g.size() ? g[i] : mpz_class(0)) - (i < ab.size() ? ab[i] : mpz_class(0));
    for (auto& c : e) {
      if (!mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t())) fail(ErrorCode::Internal, "Hensel lifting lost exactness");
      c /= pk;
    }
    ztrim(e);
    ZpPoly ep = reduce(e, F.p);
    // dA = t e mod A, dB = (e - B dA)/A (mod p)
    ZpPoly dA = F.mod(F.mul(t, ep), a0);
    ZpPoly rest = F.sub(ep, F.mul(b0, dA));
    ZpPoly dB, rem;
    F.divmod(rest, a0, dB, rem);
    ZPoly zA = lift_zp(dA), zB = lift_zp(dB);
    if (A.size() < zA.size()) A.resize(zA.size());
    for (size_t i = 0; i < zA.size(); ++i) A[i] += pk * zA[i];
    if (B.size() < zB.size()) B.resize(zB.size());
    for (size_t i = 0; i < zB.size(); ++i) B[i] += pk * zB[i];
    pk *= F.p;
    zmod_coeffs(A, pk);
    zmod_coeffs(B, pk);
  }
}

bool is_prime_u(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Factors a monic squarefree integer polynomial.
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& g) {
  int n = static_cast<int>(g.size()) - 1;
  if (n <= 1) return {g};
  // Choose a prime keeping g squarefree, preferring few modular factors.
  u64 best_p = 0;
  size_t best_count = 0;
  std::vector<ZpPoly> best;
  int good = 0;
  for (u64 p = 3; good < 6 && p < 100000; p += 2) {
    if (!is_prime_u(p)) continue;
    Zp F{p};
    ZpPoly gp = reduce(g, p);
    if (static_cast<int>(gp.size()) - 1 != n) continue;
    if (F.gcd(gp, F.derivative(gp)).size() != 1) continue;
    ++good;
    auto fac = factor_mod_p(F, gp);
    if (best_p == 0 || fac.size() < best_count) {
      best_p = p;
      best_count = fac.size();
      best = std::move(fac);
    }
    if (best_count == 1) break;
  }
  if (best_p == 0) fail(ErrorCode::Internal, "no suitable prime for factoring");
  if (best.size() == 1) return {g};
  Zp F{best_p};
  // Coefficient bound for factors: 2^n * ||g||_2, doubled for the symmetric range.
  mpz_class norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  mpz_class bound = root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n + 1));
  unsigned steps = 1;
  mpz_class P = best_p;
  while (P <= bound) {
    P *= best_p;
    ++steps;
  }
  // Multifactor lift by peeling one factor at a time.
  std::vector<ZPoly> lifted;
  ZPoly rest = g;
  std::vector<ZpPoly> mods = best;
  for (size_t i = 0; i + 1 < mods.size(); ++i) {
    ZpPoly other{1};
    for (size_t j = i + 1; j < mods.size(); ++j) other = F.mul(other, mods[j]);
    ZPoly A, B;
    hensel_pair(rest, F, mods[i], other, steps, A, B);
    lifted.push_back(A);
    rest = B;
  }
  lifted.push_back(rest);

  // Recombination by exact trial division.
  std::vector<ZPoly> result;
  ZPoly cur = g;
  std::vector<ZPoly> pool = lifted;
  size_t k = 1;
  while (2 * k <= pool.size()) {
    bool found = false;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      ZPoly prod{1};
      for (size_t i : idx) {
        prod = zmul(prod, pool[i]);
        zmod_coeffs(prod, P);
      }
      symmetric(prod, P);
      ZPoly q;
      if (zdivide(cur, prod, q)) {
        result.push_back(prod);
        cur = q;
        std::vector<ZPoly> np;
        for (size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) np.push_back(pool[i]);
        pool = std::move(np);
        found = true;
        break;
      }
      // next combination
      size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++k;
  }
  if (cur.size() > 1) result.push_back(cur);
  return result;
}

}  // namespace

std::vector<QPoly> factor_over_q(const QPoly& f0) {
  if (f0.degree() < 1) fail(ErrorCode::InvalidArgument, "cannot factor a constant");
  QPoly f = f0.monic();
  std::vector<QPoly> out;
  // Squarefree decomposition (Yun).
  QPoly a = f;
  QPoly b = gcd(a, a.derivative());
  QPoly c = divmod(a, b).first;
  int mult = 1;
  std::vector<std::pair<QPoly, int>> parts;
  while (c.degree() > 0) {
    QPoly y = gcd(b, c);
    QPoly z = divmod(c, y).first;
    if (z.degree() > 0) parts.emplace_back(z.monic(), mult);
    b = divmod(b, y).first;
    c = y;
    ++mult;
  }
  for (auto& [part, m] : parts) {
    // Scale to a monic integral polynomial: h(x) = s^n part(x / s).
    int n = part.degree();
    mpz_class s = 1;
    for (const auto& q : part.coeffs()) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
    ZPoly h(static_cast<size_t>(n) + 1);
    mpz_class sp = 1;
    for (int i = n; i >= 0; --i) {
      mpq_class v = part[i] * mpq_class(sp);
      v.canonicalize();
      h[static_cast<size_t>(i)] = v.get_num();
      if (v.get_den() != 1) fail(ErrorCode::Internal, "integral scaling failed");
      sp *= s;
    }
    // h(x) = sum c_i s^{n-i} x^i
    for (auto& fac : factor_monic_squarefree(h)) {
      int d = static_cast<int>(fac.size()) - 1;
      std::vector<mpq_class> qc(static_cast<size_t>(d) + 1);
      mpq_class sd = 1;
      for (int i = d; i >= 0; --i) {
        qc[static_cast<size_t>(i)] = mpq_class(fac[static_cast<size_t>(i)]) / sd;
        sd *= s;
      }
      QPoly q(std::move(qc));
      for (int r = 0; r < m; ++r) out.push_back(q.monic());
    }
  }
  std::sort(out.begin(), out.end(), [](const QPoly& x, const QPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    for (int i = 0; i <= x.degree(); ++i)
      if (x[i] != y[i]) return x[i] < y[i];
    return false;
  });
  return out;
}

bool is_irreducible_over_q(const QPoly& f) { return factor_over_q(f).size() == 1; }

long galois_order_divisor(const QPoly& f0, int nprimes) {
  QPoly f = f0.monic();
  int n = f.degree();
  mpz_class s = 1;
  for (const auto& q : f.coeffs()) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), q.get_den_mpz_t());
  ZPoly h(static_cast<size_t>(n) + 1);
  mpz_class sp = 1;
  for (int i = n; i >= 0; --i) {
    mpq_class v = f[i] * mpq_class(sp);
    v.canonicalize();
    h[static_cast<size_t>(i)] = v.get_num();
    sp *= s;
  }
  mpz_class acc = 1;
  int used = 0;
  for (u64 p = 3; used < nprimes && p < 100000; p += 2) {
    if (!is_prime_u(p)) continue;
    Zp F{p};
    ZpPoly hp = reduce(h, p);
    if (static_cast<int>(hp.size()) - 1 != n) continue;
    if (F.gcd(hp, F.derivative(hp)).size() != 1) continue;
    ++used;
    mpz_class ord = 1;
    for (const auto& [d, g] : ddf(F, hp)) {
      (void)g;
      mpz_class dd = d;
      mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), dd.get_mpz_t());
    }
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), ord.get_mpz_t());
  }
  return acc.get_si();
}

}  // namespace hecke
