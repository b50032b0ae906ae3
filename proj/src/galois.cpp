#include "hecke/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hecke/error.hpp"
#include "hecke/roots.hpp"
#include "hecke/zfactor.hpp"

namespace hecke {

namespace {

// ---- arithmetic in K = Q[V]/M and K[y] ----

using KPoly = std::vector<QPoly>;

struct KField {
  QPoly M;
  int D() const { return M.degree(); }
  QPoly mul(const QPoly& a, const QPoly& b) const { return (a * b) % M; }
  QPoly inv(const QPoly& a) const {
    auto [g, s] = half_xgcd(a, M);
    if (g.degree() != 0) fail(ErrorCode::Internal, "non-invertible element in closure field");
    return s;
  }
};

void ktrim(KPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly kadd(const KPoly& a, const KPoly& b) {
  KPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  ktrim(r);
  return r;
}

KPoly kmul(const KField& K, const KPoly& a, const KPoly& b) {
  if (a.empty() || b.empty()) return {};
  KPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = c % K.M;
  ktrim(r);
  return r;
}

void kdivmod(const KField& K, const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
  r = a;
  ktrim(r);
  q.clear();
  if (b.empty()) fail(ErrorCode::Internal, "division by zero polynomial over the closure field");
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, QPoly());
  QPoly il = K.inv(b.back());
  for (size_t k = r.size() - b.size() + 1; k-- > 0;) {
    QPoly c = K.mul(r[k + b.size() - 1], il);
    if (c.is_zero()) continue;
    q[k] = c;
    for (size_t j = 0; j < b.size(); ++j) r[k + j] = (r[k + j] - c * b[j]) % K.M;
  }
  ktrim(r);
  ktrim(q);
}

KPoly kmonic(const KField& K, const KPoly& a) {
  if (a.empty()) return a;
  QPoly il = K.inv(a.back());
  KPoly r = a;
  for (auto& c : r) c = K.mul(c, il);
  return r;
}

KPoly kgcd(const KField& K, KPoly a, KPoly b) {
  ktrim(a);
  ktrim(b);
  while (!b.empty()) {
    KPoly q, r;
    kdivmod(K, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return kmonic(K, a);
}

KPoly from_q(const QPoly& f) {
  KPoly r;
  for (const auto& c : f.coeffs()) r.push_back(QPoly::constant(c));
  ktrim(r);
  return r;
}

// p(q) mod M
QPoly compose_mod(const QPoly& p, const QPoly& q, const QPoly& M) {
  QPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = ((acc * q) + QPoly::constant(p[i])) % M;
  return acc;
}

Complex eval_at(const QPoly& p, const Complex& v) { return p.eval(v); }

struct Factor {
  KPoly g;
  QPoly norm;
};

// Trager factorization of a squarefree monic h over K. Sets s with norm factors in z = y + sV.
std::vector<Factor> factor_over_k(const KField& K, const KPoly& h, long& s_out) {
  const int D = K.D();
  const int m = static_cast<int>(h.size()) - 1;
  const long shifts[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8, -8};
  for (long s : shifts) {
    const size_t n = static_cast<size_t>(D * m);
    QMatrix A(n, n);
    for (int b = 0; b < m; ++b)
      for (int a = 0; a < D; ++a) {
        KPoly e(static_cast<size_t>(b) + 2);
        e[static_cast<size_t>(b) + 1] = QPoly::monomial(1, a) % K.M;
        e[static_cast<size_t>(b)] = QPoly::monomial(s, a + 1) % K.M;
        ktrim(e);
        KPoly q, r;
        kdivmod(K, e, h, q, r);
        size_t col = static_cast<size_t>(a + D * b);
        for (size_t bb = 0; bb < r.size(); ++bb)
          for (int aa = 0; aa <= r[bb].degree(); ++aa) A(static_cast<size_t>(aa) + static_cast<size_t>(D) * bb, col) = r[bb][aa];
      }
    QPoly N = charpoly(A);
    if (!is_squarefree(N)) continue;
    std::vector<Factor> out;
    KPoly z{QPoly::constant(s) * QPoly::x(), QPoly::constant(1)};  // y + sV
    for (const auto& Ni : factor_over_q(N)) {
      // Ni(y + sV) mod h by Horner
      KPoly acc;
      for (int i = Ni.degree(); i >= 0; --i) {
        acc = kadd(kmul(K, acc, z), KPoly{QPoly::constant(Ni[i])});
        KPoly q, r;
        kdivmod(K, acc, h, q, r);
        acc = r;
      }
      KPoly g = kgcd(K, h, acc);
      if (g.size() < 2) fail(ErrorCode::Internal, "trivial factor in closure construction");
      out.push_back({g, Ni});
    }
    s_out = s;
    return out;
  }
  fail(ErrorCode::Internal, "no squarefree norm found while factoring over the closure field");
}

struct Numeric {
  std::vector<Complex> alpha;  // roots of f in canonical order
  Real sep;
  unsigned bits;
};

size_t match_root(const Numeric& num, const Complex& z) {
  Real d(num.bits);
  size_t k = nearest(num.alpha, z, &d);
  if (!(d * Real(4L, num.bits) < num.sep)) fail(ErrorCode::PrecisionExhausted, "ambiguous root match in closure");
  return k;
}

bool build_closure(GaloisContext& ctx, unsigned bits) {
  const NumberFieldTower& F = ctx.field;
  const QPoly& f = F.absolute_minpoly();
  const size_t n = static_cast<size_t>(F.degree());
  Numeric num;
  num.bits = bits;
  {
    RootSet rs = polynomial_roots(f, bits);
    num.bits = rs.bits;
    num.sep = rs.separation;
    num.alpha.resize(n, Complex(num.bits));
    for (size_t i = 0; i < n; ++i) num.alpha[i] = rs.roots[nearest(rs.roots, ctx.emb.theta[i].with_bits(rs.bits))];
  }
  KField K{f};
  std::vector<std::optional<QPoly>> rho(n);
  rho[0] = QPoly::x();
  std::vector<long> c(n, 0);
  c[0] = 1;
  Complex v0 = num.alpha[0];

  while (true) {
    // h = f / prod (y - rho_j)
    KPoly h = from_q(f);
    for (size_t j = 0; j < n; ++j) {
      if (!rho[j]) continue;
      KPoly lin{-*rho[j], QPoly::constant(1)};
      KPoly q, r;
      kdivmod(K, h, lin, q, r);
      if (!r.empty()) fail(ErrorCode::Internal, "root expression is not a root");
      h = q;
    }
    if (h.size() <= 1) break;
    if (h.size() == 2) {
      // the last root is linear
      QPoly beta = (-h[0]) % K.M;
      Complex bv = eval_at(beta, v0);
      size_t j = match_root(num, bv);
      if (rho[j]) fail(ErrorCode::PrecisionExhausted, "root matched twice");
      rho[j] = beta;
      continue;
    }
    if (2 * K.D() > kMaxClosureDegree)
      fail(ErrorCode::ClosureTooLarge, "Galois closure degree exceeds " + std::to_string(kMaxClosureDegree));
    long s = 0;
    auto facs = factor_over_k(K, h, s);
    bool linear = false;
    for (const auto& fc : facs) {
      if (fc.g.size() != 2) continue;
      QPoly beta = (-fc.g[0]) % K.M;
      size_t j = match_root(num, eval_at(beta, v0));
      if (rho[j]) fail(ErrorCode::PrecisionExhausted, "root matched twice");
      rho[j] = beta;
      linear = true;
    }
    if (linear) continue;
    // Adjoin a root of the smallest nonlinear factor.
    const Factor* best = &facs[0];
    for (const auto& fc : facs)
      if (fc.g.size() < best->g.size()) best = &fc;
    const KPoly& g = best->g;
    const int e = static_cast<int>(g.size()) - 1;
    const int D = K.D();
    if (D * e > kMaxClosureDegree)
      fail(ErrorCode::ClosureTooLarge, "Galois closure degree exceeds " + std::to_string(kMaxClosureDegree));
    // numeric root of g among the unused roots of f
    size_t jbest = n;
    Real bestv(num.bits);
    for (size_t j = 0; j < n; ++j) {
      if (rho[j]) continue;
      Complex acc(num.bits);
      for (size_t t = g.size(); t-- > 0;) acc = acc * num.alpha[j] + eval_at(g[t], v0);
      Real a = acc.abs();
      if (jbest == n || a < bestv) {
        bestv = a;
        jbest = j;
      }
    }
    // Powers of W = y + sV in K[y]/g, flattened with index a + D b.
    const size_t dim = static_cast<size_t>(D * e);
    QMatrix P(dim, dim);
    KPoly W{QPoly::constant(s) * QPoly::x(), QPoly::constant(1)};
    KPoly pw{QPoly::constant(1)};
    auto flat = [&](const KPoly& x) {
      std::vector<mpq_class> v(dim);
      for (size_t b = 0; b < x.size(); ++b)
        for (int a = 0; a <= x[b].degree(); ++a) v[static_cast<size_t>(a) + static_cast<size_t>(D) * b] = x[b][a];
      return v;
    };
    for (size_t t = 0; t < dim; ++t) {
      P.set_column(t, flat(pw));
      KPoly q, r;
      kdivmod(K, kmul(K, pw, W), g, q, r);
      pw = r;
    }
    auto solve_for = [&](const KPoly& x) {
      auto sol = solve(P, flat(x));
      if (!sol) fail(ErrorCode::Internal, "new primitive element does not generate");
      return QPoly(*sol);
    };
    QPoly phiV = solve_for(KPoly{QPoly::x()});
    QPoly phiB = solve_for(KPoly{QPoly(), QPoly::constant(1)});
    QPoly Mnew = best->norm;
    for (auto& r : rho)
      if (r) r = compose_mod(*r, phiV, Mnew);
    rho[jbest] = phiB;
    for (auto& cj : c) cj *= s;
    c[jbest] += 1;
    v0 = num.alpha[jbest] + v0 * Real(s, num.bits);
    K = KField{Mnew};
  }

  ctx.closure_minpoly = K.M;
  ctx.root_expr.clear();
  for (auto& r : rho) ctx.root_expr.push_back(*r);
  ctx.v_coeffs = c;

  // Closure embeddings and group elements.
  const QPoly& M = K.M;
  RootSet vr = polynomial_roots(M, num.bits);
  std::vector<Complex> vs = vr.roots;
  size_t ref = nearest(vs, v0.with_bits(vr.bits));
  std::vector<size_t> order;
  for (size_t k = 0; k < vs.size(); ++k)
    if (k != ref) order.push_back(k);
  Real tol = exp2i(-static_cast<long>(vr.bits / 2), vr.bits);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    Real dr = vs[a].re - vs[b].re;
    if (abs(dr) > tol) return dr.sign() < 0;
    return vs[a].im < vs[b].im;
  });
  order.insert(order.begin(), ref);
  ctx.closure_roots.clear();
  for (size_t k : order) ctx.closure_roots.push_back(vs[k]);

  const size_t G = ctx.closure_roots.size();
  ctx.perm.assign(G, Perm(n));
  ctx.images.assign(G, QPoly());
  for (size_t k = 0; k < G; ++k) {
    std::vector<bool> used(n, false);
    for (size_t j = 0; j < n; ++j) {
      Complex z = ctx.root_expr[j].eval(ctx.closure_roots[k].with_bits(num.bits));
      size_t t = match_root(num, z);
      if (used[t]) return false;
      used[t] = true;
      ctx.perm[k][j] = t;
    }
    QPoly Pk;
    for (size_t j = 0; j < n; ++j)
      if (c[j] != 0) Pk += ctx.root_expr[ctx.perm[k][j]] * mpq_class(c[j]);
    Pk = Pk % M;
    if (!compose_mod(M, Pk, M).is_zero()) return false;
    for (size_t j = 0; j < n; ++j)
      if (!(compose_mod(ctx.root_expr[j], Pk, M) == ctx.root_expr[ctx.perm[k][j]])) return false;
    ctx.images[k] = Pk;
  }
  Perm id(n);
  for (size_t i = 0; i < n; ++i) id[i] = i;
  if (ctx.perm[0] != id) return false;
  ctx.restriction.resize(G);
  for (size_t k = 0; k < G; ++k) ctx.restriction[k] = ctx.perm[k][0];
  ctx.conj = G;
  for (size_t k = 0; k < G; ++k)
    if (ctx.perm[k] == ctx.emb.conj) ctx.conj = k;
  if (ctx.conj == G) return false;
  ctx.bits = num.bits;
  return true;
}

}  // namespace

size_t GaloisContext::index_of(const Perm& p) const {
  for (size_t k = 0; k < perm.size(); ++k)
    if (perm[k] == p) return k;
  fail(ErrorCode::Internal, "permutation is not a group element");
}

size_t GaloisContext::compose(size_t a, size_t b) const {
  const size_t n = degree();
  Perm p(n);
  for (size_t i = 0; i < n; ++i) p[i] = perm[a][perm[b][i]];
  return index_of(p);
}

size_t GaloisContext::inverse(size_t a) const {
  const size_t n = degree();
  Perm p(n);
  for (size_t i = 0; i < n; ++i) p[perm[a][i]] = i;
  return index_of(p);
}

NumberFieldTower GaloisContext::closure_tower() const { return NumberFieldTower::simple("V", closure_minpoly); }

QPoly GaloisContext::apply(size_t k, const QPoly& x) const { return compose_mod(x, images.at(k), closure_minpoly); }

QPoly GaloisContext::field_to_closure(const FieldElement& x) const {
  return compose_mod(field.to_power_basis(x), root_expr[0], closure_minpoly);
}

std::optional<FieldElement> GaloisContext::closure_to_field(const QPoly& x) const {
  const size_t N = static_cast<size_t>(closure_minpoly.degree());
  const size_t n = degree();
  QMatrix A(N, n);
  QPoly pw = QPoly::constant(1);
  for (size_t i = 0; i < n; ++i) {
    for (int a = 0; a <= pw.degree(); ++a) A(static_cast<size_t>(a), i) = pw[a];
    pw = (pw * root_expr[0]) % closure_minpoly;
  }
  std::vector<mpq_class> b(N);
  QPoly xr = x % closure_minpoly;
  for (int a = 0; a <= xr.degree(); ++a) b[static_cast<size_t>(a)] = xr[a];
  auto sol = solve(A, b);
  if (!sol) return std::nullopt;
  return field.from_power_basis(QPoly(*sol));
}

Perm GaloisContext::closure_action(size_t k) const {
  Perm p(order());
  for (size_t m = 0; m < order(); ++m) p[m] = compose(k, m);
  return p;
}

GaloisContext galois_closure(const NumberFieldTower& F, unsigned bits) {
  GaloisContext ctx;
  ctx.field = F;
  ctx.emb = embeddings(F, bits);
  if (galois_order_divisor(F.absolute_minpoly()) > kMaxClosureDegree)
    fail(ErrorCode::ClosureTooLarge, "Galois closure degree exceeds " + std::to_string(kMaxClosureDegree));
  unsigned b = std::max(2 * ctx.emb.bits, 256u);
  for (int attempt = 0; attempt < 4; ++attempt, b *= 2) {
    try {
      if (build_closure(ctx, b)) return ctx;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
    }
  }
  fail(ErrorCode::PrecisionExhausted, "could not certify the Galois group");
}

int perm_sign(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// ---- subfields ----

namespace {

std::vector<bool> subgroup_closure(const GaloisContext& ctx, std::vector<bool> h) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<size_t> els;
    for (size_t k = 0; k < h.size(); ++k)
      if (h[k]) els.push_back(k);
    for (size_t a : els)
      for (size_t b : els) {
        size_t c = ctx.compose(a, b);
        if (!h[c]) {
          h[c] = true;
          changed = true;
        }
      }
  }
  return h;
}

bool numerically_real(const Complex& z, unsigned bits) {
  Real scale = z.abs() + Real(1L, bits);
  return abs(z.im) < scale * exp2i(-static_cast<long>(bits / 2), bits);
}

Subfield make_subfield(const GaloisContext& ctx, const std::vector<bool>& h) {
  const size_t G = ctx.order();
  std::vector<size_t> H;
  for (size_t k = 0; k < G; ++k)
    if (h[k]) H.push_back(k);
  const size_t target = G / H.size();
  auto orbit_size = [&](const QPoly& eta) {
    std::vector<QPoly> seen;
    for (size_t k = 0; k < G; ++k) {
      QPoly img = ctx.apply(k, eta);
      if (std::find(seen.begin(), seen.end(), img) == seen.end()) seen.push_back(img);
      if (seen.size() > target) break;
    }
    return seen.size();
  };
  QPoly theta = ctx.root_expr[0];
  QPoly eta;
  for (size_t k : H) eta += ctx.apply(k, theta);
  eta = eta % ctx.closure_minpoly;
  if (orbit_size(eta) != target) {
    // power sums s_e = sum_h h(theta^e), combined with weights c^(e-1)
    std::vector<QPoly> sums;
    QPoly pw = QPoly::constant(1);
    for (size_t e = 1; e <= H.size(); ++e) {
      pw = (pw * theta) % ctx.closure_minpoly;
      QPoly s;
      for (size_t k : H) s += ctx.apply(k, pw);
      sums.push_back(s % ctx.closure_minpoly);
    }
    bool ok = false;
    for (long c = 2; c < 64 && !ok; ++c) {
      QPoly cand;
      mpq_class w = 1;
      for (const auto& s : sums) {
        cand += s * w;
        w *= c;
      }
      if (orbit_size(cand) == target) {
        eta = cand;
        ok = true;
      }
    }
    if (!ok) fail(ErrorCode::Internal, "no primitive element found for a subfield");
  }
  auto fe = ctx.closure_to_field(eta);
  if (!fe) fail(ErrorCode::Internal, "fixed-field element not in F");
  Subfield sf{H, static_cast<int>(target), *fe, QPoly(), true, true};
  sf.minpoly = fe->minpoly();
  if (sf.minpoly.degree() != static_cast<int>(target)) fail(ErrorCode::Internal, "subfield degree mismatch");
  for (size_t k = 0; k < G; ++k) {
    Complex v = eta.eval(ctx.closure_roots[k]);
    bool r = numerically_real(v, ctx.bits);
    if (r)
      sf.totally_imaginary = false;
    else
      sf.totally_real = false;
  }
  return sf;
}

NumberFieldTower tower_of(const Subfield& s, const std::string& var) {
  if (s.degree == 1) return NumberFieldTower();
  return NumberFieldTower::simple(var, s.minpoly);
}

std::vector<size_t> restrict_to(const GaloisContext& ctx, const Subfield& s, const EmbeddingSet& sub_emb) {
  std::vector<size_t> r(ctx.degree(), 0);
  if (s.degree == 1) return r;
  for (size_t i = 0; i < ctx.degree(); ++i) {
    Complex v = s.generator.eval(ctx.emb, i);
    r[i] = nearest(sub_emb.theta, v.with_bits(sub_emb.bits));
  }
  return r;
}

}  // namespace

std::vector<Subfield> subfields(const GaloisContext& ctx) {
  const size_t G = ctx.order();
  std::vector<bool> stab(G, false);
  for (size_t k = 0; k < G; ++k) stab[k] = ctx.perm[k][0] == 0;
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{stab};
  seen.insert(stab);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto h = queue[qi];
    for (size_t g = 0; g < G; ++g) {
      if (h[g]) continue;
      auto h2 = h;
      h2[g] = true;
      h2 = subgroup_closure(ctx, h2);
      if (seen.insert(h2).second) queue.push_back(h2);
    }
  }
  std::vector<Subfield> out;
  for (const auto& h : queue) out.push_back(make_subfield(ctx, h));
  std::stable_sort(out.begin(), out.end(), [](const Subfield& a, const Subfield& b) { return a.degree < b.degree; });
  return out;
}

MaximalSubfields maximal_subfields(const GaloisContext& ctx) {
  auto all = subfields(ctx);
  const Subfield* f0 = nullptr;
  for (const auto& s : all)
    if (s.totally_real && (!f0 || s.degree > f0->degree)) f0 = &s;
  auto contains = [](const Subfield& big, const Subfield& small) {
    // big field contains small field iff H_big is a subgroup of H_small
    return std::includes(small.subgroup.begin(), small.subgroup.end(), big.subgroup.begin(), big.subgroup.end());
  };
  const Subfield* f1 = nullptr;
  for (const auto& s : all)
    if (s.degree == 2 * f0->degree && s.totally_imaginary && contains(s, *f0)) {
      f1 = &s;
      break;
    }
  MaximalSubfields out{*f0, f1 ? *f1 : *f0};
  out.has_cm = f1 != nullptr;
  out.F0 = tower_of(out.f0, "a0");
  out.F1 = tower_of(out.f1, "a1");
  out.emb0 = embeddings(out.F0, ctx.emb.bits);
  out.emb1 = embeddings(out.F1, ctx.emb.bits);
  out.restriction0 = restrict_to(ctx, out.f0, out.emb0);
  out.restriction = restrict_to(ctx, out.f1, out.emb1);
  if (out.has_cm) {
    const FieldElement& b = out.f1.generator;
    QPoly bl = ctx.field_to_closure(b);
    auto cb = ctx.closure_to_field(ctx.apply(ctx.conj, bl));
    if (!cb) fail(ErrorCode::Internal, "conjugate of a CM generator not in F");
    FieldElement d = b - *cb;
    out.D = d * d;
  }
  return out;
}

DeltaResult delta_F(const GaloisContext& ctx, int deg_f0, int deg_f1, const std::optional<FieldElement>& D) {
  DeltaResult r;
  if (!D || deg_f1 == deg_f0) {
    r.norm_d = 1;
    return r;
  }
  for (size_t i = 0; i < ctx.degree(); ++i) {
    Complex v = D->eval(ctx.emb, i);
    if (!numerically_real(v, ctx.emb.bits) || v.re.sign() >= 0)
      fail(ErrorCode::NotTotallyNegative, "D is not totally negative");
  }
  mpq_class nF = D->norm();
  long k = ctx.field.degree() / deg_f0;
  mpq_class a = abs(nF);
  mpz_class num, den;
  bool exact = mpz_root(num.get_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(k)) != 0;
  exact = mpz_root(den.get_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(k)) != 0 && exact;
  if (!exact) fail(ErrorCode::Internal, "norm of D is not a perfect power");
  mpq_class n0(num, den);
  n0.canonicalize();
  if (deg_f0 % 2 == 1) n0 = -n0;
  r.norm_d = n0;
  r.delta_f1 = SurdValue::sqrt_of(n0);
  r.delta_f = r.delta_f1.pow(ctx.field.degree() / deg_f1);
  return r;
}

// ---- square roots ----

namespace {

std::vector<std::vector<int>> sign_characters(const GaloisContext& ctx) {
  const size_t G = ctx.order();
  std::vector<size_t> gens;
  std::vector<bool> span(G, false);
  span[0] = true;
  for (size_t k = 0; k < G; ++k) {
    if (span[k]) continue;
    gens.push_back(k);
    std::vector<bool> h(G, false);
    h[0] = true;
    for (size_t g : gens) h[g] = true;
    span = subgroup_closure(ctx, h);
  }
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1UL << gens.size()); ++mask) {
    std::vector<int> chi(G, 0);
    chi[0] = 1;
    std::vector<size_t> frontier{0};
    bool ok = true;
    while (!frontier.empty() && ok) {
      std::vector<size_t> next;
      for (size_t x : frontier)
        for (size_t gi = 0; gi < gens.size(); ++gi) {
          size_t y = ctx.compose(gens[gi], x);
          int v = chi[x] * ((mask >> gi) & 1 ? -1 : 1);
          if (chi[y] == 0) {
            chi[y] = v;
            next.push_back(y);
          } else if (chi[y] != v) {
            ok = false;
          }
        }
      frontier = std::move(next);
    }
    for (size_t a = 0; a < G && ok; ++a)
      for (size_t b = 0; b < G && ok; ++b)
        if (chi[ctx.compose(a, b)] != chi[a] * chi[b]) ok = false;
    if (ok) out.push_back(chi);
  }
  return out;
}

}  // namespace

std::optional<QPoly> sqrt_in_closure(const GaloisContext& ctx, const mpz_class& r) {
  if (r <= 0) fail(ErrorCode::InvalidArgument, "radicand must be positive");
  if (mpz_perfect_square_p(r.get_mpz_t())) {
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), r.get_mpz_t());
    return QPoly::constant(mpq_class(t));
  }
  const size_t G = ctx.order();
  const QPoly& M = ctx.closure_minpoly;
  for (const auto& chi : sign_characters(ctx)) {
    if (std::all_of(chi.begin(), chi.end(), [](int v) { return v == 1; })) continue;
    for (int j = 1; j < M.degree(); ++j) {
      QPoly gamma = QPoly::monomial(1, j) % M;
      QPoly beta;
      for (size_t k = 0; k < G; ++k) beta += ctx.apply(k, gamma) * mpq_class(chi[k]);
      beta = beta % M;
      if (beta.is_zero()) continue;
      QPoly sq = (beta * beta) % M;
      if (sq.degree() != 0) fail(ErrorCode::Internal, "twisted trace squared is not rational");
      mpq_class q = sq[0];
      // sqrt(r) = beta * sqrt(r / q) needs r q to be a rational square
      mpq_class rq = mpq_class(r) / q;
      if (rq < 0) break;
      if (mpz_perfect_square_p(rq.get_num_mpz_t()) && mpz_perfect_square_p(rq.get_den_mpz_t())) {
        mpz_class a, b;
        mpz_sqrt(a.get_mpz_t(), rq.get_num_mpz_t());
        mpz_sqrt(b.get_mpz_t(), rq.get_den_mpz_t());
        return (beta * mpq_class(a, b)) % M;
      }
      break;
    }
  }
  return std::nullopt;
}

int galois_action_on_sqrt(const GaloisContext& ctx, size_t k, const mpz_class& r) {
  auto s = sqrt_in_closure(ctx, r);
  if (!s) fail(ErrorCode::SqrtNotInClosure, "sqrt(" + r.get_str() + ") is not in the Galois closure");
  QPoly img = ctx.apply(k, *s);
  if (img == *s) return 1;
  if (img == -*s) return -1;
  fail(ErrorCode::Internal, "group element does not map sqrt(r) to +-sqrt(r)");
}

}  // namespace hecke
