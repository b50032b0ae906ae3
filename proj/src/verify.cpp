#include "hecke/verify.hpp"

#include <map>

#include "hecke/error.hpp"

namespace hecke {

RecognitionResult recognize_rational(const Real& x, const mpz_class& qbound, const Real& tol) {
  const unsigned b = x.bits();
  RecognitionResult r;
  r.qbound = qbound;
  r.tolerance = tol;
  Real limit = Real(1L, b) / (Real(2L, b) * Real(mpz_class(qbound * qbound), b));
  r.sound = tol < limit;
  if (!x.is_finite()) {
    r.residual = Real(0L, b);
    return r;
  }
  mpq_class xq = x.to_mpq();
  mpq_class rem = xq;
  mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  bool have = false;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
    mpz_class h = a * h1 + h2, k = a * k1 + k2;
    if (k > qbound) break;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    mpq_class diff = xq - mpq_class(h, k);
    Real res(mpq_class(abs(diff)), b);
    r.p = h;
    r.q = k;
    r.residual = res;
    have = true;
    if (res <= tol) {
      r.recognized = true;
      return r;
    }
    mpq_class frac = rem - mpq_class(a);
    if (frac == 0) break;
    rem = 1 / frac;
  }
  if (!have) r.residual = abs(x);
  return r;
}

GaussianRecognition recognize_gaussian(const Complex& z, const mpz_class& qbound, const Real& tol) {
  GaussianRecognition g;
  g.re = recognize_rational(z.re, qbound, tol);
  g.im = recognize_rational(z.im, qbound, tol);
  g.recognized = g.re.recognized && g.im.recognized;
  return g;
}

namespace {

const std::map<std::string, std::vector<LayerSpec>>& tower_catalog() {
  static const std::map<std::string, std::vector<LayerSpec>> c = {
      {"Q(i)", {{"i", "x^2 + 1"}}},
      {"Q(w)", {{"w", "x^2 + x + 1"}}},
      {"Q(sqrt(-2))", {{"s", "x^2 + 2"}}},
      {"Q(zeta5)", {{"z", "x^4 + x^3 + x^2 + x + 1"}}},
      {"Q(i,sqrt(4+i))", {{"i", "x^2 + 1"}, {"t", "x^2 - (4 + i)"}}},
      {"Q(w,2^(1/3))", {{"w", "x^2 + x + 1"}, {"c", "x^3 - 2"}}},
  };
  return c;
}

}  // namespace

NumberFieldTower catalog_tower(const std::string& name) {
  auto it = tower_catalog().find(name);
  if (it == tower_catalog().end()) fail(ErrorCode::InvalidArgument, "no catalog field named '" + name + "'");
  return NumberFieldTower::build(it->second);
}

std::vector<std::string> catalog_tower_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : tower_catalog()) out.push_back(k);
  return out;
}

DiscriminantData discriminant_data(const GaloisContext& ctx, const MaximalSubfields& sub) {
  const NumberFieldTower& F = ctx.field;
  DiscriminantData dd;
  dd.delta = rel_discriminant(F, 0, tower_basis(F, 0)).to_rational();
  dd.deg_f0 = sub.f0.degree;
  dd.deg_f1 = sub.f1.degree;
  dd.cm = sub.has_cm && dd.deg_f1 == F.degree();
  const auto& g = sub.f1.generator.coords();
  for (size_t k = 0; k <= F.layer_count(); ++k) {
    const int Dk = F.prefix(k).degree();
    if (Dk != dd.deg_f1) continue;
    bool inside = true;
    for (size_t i = static_cast<size_t>(Dk); i < g.size(); ++i)
      if (g[i] != 0) inside = false;
    if (inside) {
      dd.f1_prefix = k;
      break;
    }
  }
  if (dd.f1_prefix) {
    const size_t k = *dd.f1_prefix;
    dd.norm_exact = true;
    if (k == F.layer_count()) {
      dd.delta_rel = F.one();
      dd.norm_delta_rel = 1;
    } else {
      FieldElement rel = rel_discriminant(F, k, tower_basis(F, k));
      dd.delta_rel = rel;
      NumberFieldTower K = F.prefix(k);
      std::vector<mpq_class> c(rel.coords().begin(), rel.coords().begin() + K.degree());
      dd.norm_delta_rel = K.element(c).norm();
    }
  } else {
    // delta_F = delta_F1^[F:F1] N(delta_{F/F1}) determines the norm up to squares
    mpq_class d1 = discriminant(sub.f1.minpoly);
    dd.norm_delta_rel = (F.degree() / dd.deg_f1) % 2 ? dd.delta * d1 : dd.delta;
  }
  mpq_class a = abs(dd.norm_delta_rel);
  dd.sqrt_radicand = squarefree_decompose(mpz_class(a.get_num() * a.get_den()));
  if (sub.has_cm)
    dd.delta_F = delta_F(ctx, dd.deg_f0, dd.deg_f1, sub.D);
  else
    dd.delta_F.norm_d = 1;
  return dd;
}

IdentityCheck discriminant_identity_check(const GaloisContext& ctx, const MaximalSubfields& sub) {
  if (!ctx.emb.totally_imaginary()) fail(ErrorCode::InvalidArgument, "discriminant identities need a totally imaginary field");
  IdentityCheck c;
  c.data = discriminant_data(ctx, sub);
  const int d = ctx.field.degree();
  c.lhs = SurdValue::sqrt_of(abs(c.data.delta));
  c.rhs = SurdValue::i_power(d / 2) * c.data.delta_F.delta_f;
  if (c.data.cm) {
    c.lemma = "cm";
  } else {
    c.lemma = "totally-imaginary";
    c.rhs = c.rhs * SurdValue::sqrt_of(c.data.norm_delta_rel);
  }
  c.pass = c.lhs.equal_mod_rationals(c.rhs);
  return c;
}

ReciprocityTable reciprocity_table(const GaloisContext& ctx, const MaximalSubfields& sub, const InfinityType& n) {
  ReciprocityTable t;
  t.radicand = discriminant_data(ctx, sub).sqrt_radicand;
  for (size_t g = 0; g < ctx.order(); ++g) {
    SignatureResult s = signature(n, ctx, g);
    ReciprocityRow row;
    row.element = g;
    row.eps = s.eps;
    row.eps_tilde = s.eps_tilde;
    row.product = s.product;
    row.sqrt_sign = t.radicand == 1 ? 1 : galois_action_on_sqrt(ctx, g, t.radicand);
    row.agree = row.product == row.sqrt_sign;
    t.pass = t.pass && row.agree;
    t.any_negative = t.any_negative || row.product < 0;
    t.rows.push_back(row);
  }
  return t;
}

namespace {

void run_ratios(CounterexampleReport& rep, const LOptions& opt, const mpz_class& qbound, const Real& tol) {
  const CounterexampleParams& p = rep.params;
  const QuadField& F = catalog_field(p.field);
  QElem d = F.parse(p.d);
  HeckeCharacterSpec psi = make_character(p.field, p.k);
  HeckeCharacterSpec psiw = make_character(p.field, p.k, d);
  rep.r_psi = ratio(psi, p.m, opt);
  rep.r_psiw = ratio(psiw, p.m, opt);
  rep.r_chi = rep.r_psi.ratio * rep.r_psiw.ratio;
  rep.r_chi_error = abs(rep.r_psi.ratio) * rep.r_psiw.error + abs(rep.r_psiw.ratio) * rep.r_psi.error +
                    rep.r_psi.error * rep.r_psiw.error;
  rep.radicand = squarefree_decompose(mpz_class(static_cast<long>(F.norm(d))));
  rep.imag_within_error = abs(rep.r_chi.im) <= rep.r_chi_error;
  rep.rec = recognize_rational(rep.r_chi.re, qbound, tol);
  Real root = sqrt(Real(rep.radicand, rep.r_chi.re.bits()));
  rep.rec_sqrt = recognize_rational(root * rep.r_chi.re, qbound, tol);
  bool rational_branch = rep.imag_within_error && rep.rec.recognized;
  bool sqrt_branch = rep.imag_within_error && rep.rec_sqrt.recognized;
  rep.verdict = rational_branch && !sqrt_branch ? "counterexample-reproduced" : "not-reproduced";
}

}  // namespace

CounterexampleReport counterexample_pipeline(const CounterexampleParams& p) {
  CounterexampleReport rep;
  rep.params = p;
  run_ratios(rep, p.lopt, p.qbound, Real(p.tolerance, p.lopt.bits));
  if (p.fallback && !(rep.imag_within_error && rep.rec.recognized)) {
    LOptions big = p.lopt;
    big.bits *= 4;
    big.X = 4 * rep.r_psi.numerator.X;
    mpz_class qb = 1000000;
    Real tol = Real(1L, big.bits) / (Real(4L, big.bits) * Real(mpz_class(qb * qb), big.bits));
    if (Real(p.tolerance, big.bits) < tol) tol = Real(p.tolerance, big.bits);
    rep.used_fallback = true;
    run_ratios(rep, big, qb, tol);
  }
  return rep;
}

}  // namespace hecke
