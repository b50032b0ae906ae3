// Acceptance checks, one per criterion: `acceptance c3` runs one, no argument runs all.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hecke/chartypes.hpp"
#include "hecke/error.hpp"
#include "hecke/lseries.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Ctx {
  GaloisContext g;
  MaximalSubfields sub;
  explicit Ctx(const std::string& name) : g(galois_closure(catalog_tower(name))), sub(maximal_subfields(g)) {}
};

InfinityType random_pure(const Ctx& c, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> u(-range, range);
  const auto& e1 = c.sub.emb1;
  long w = u(rng);
  std::vector<long> m(e1.size(), 0);
  std::vector<bool> set(e1.size(), false);
  for (size_t j = 0; j < e1.size(); ++j) {
    if (set[j]) continue;
    m[j] = u(rng);
    m[e1.conj[j]] = w - m[j];
    set[j] = set[e1.conj[j]] = true;
  }
  InfinityType n;
  for (size_t i = 0; i < c.g.degree(); ++i) n.n.push_back(m[c.sub.restriction[i]]);
  return n;
}

InfinityType base_change_of(const Ctx& c, const std::vector<long>& m) {
  InfinityType n;
  for (size_t i = 0; i < c.g.degree(); ++i) n.n.push_back(m[c.sub.restriction[i]]);
  return n;
}

Outcome c1() {
  auto Q = catalog_tower("Q(i)");
  mpq_class dq = rel_discriminant(Q, 0, tower_basis(Q, 0)).to_rational();
  auto F = catalog_tower("Q(i,sqrt(4+i))");
  auto K = F.prefix(1);
  FieldElement drel = rel_discriminant(F, 1, {F.one(), F.gen(1)});
  bool rel_ok = drel == K.parse_element("16 + 4*i");
  mpq_class dabs = abs_discriminant_tower(F, 1, {F.one(), F.gen(1)}, {K.one(), K.gen(0)});
  Outcome o;
  o.pass = dq == -4 && rel_ok && dabs == 256 * 17;
  o.detail = "d(Q(i)) = " + dq.get_str() + ", d(F/F1) = " + drel.str() + ", d(F) = " + dabs.get_str();
  return o;
}

// Root permutation s realized by each embedding of Q(w, 2^(1/3)).
std::vector<std::string> s3_labels(const GaloisContext& ctx) {
  const double c = std::cbrt(2.0);
  const std::complex<double> w(-0.5, std::sqrt(3.0) / 2);
  const std::complex<double> r[3] = {c, c * w, c * w * w};
  auto which = [&](std::complex<double> z) {
    int best = 0;
    for (int j = 1; j < 3; ++j)
      if (std::abs(z - r[j]) < std::abs(z - r[best])) best = j;
    return best + 1;
  };
  static const std::map<std::pair<int, int>, std::string> names = {
      {{1, 2}, "e"}, {{2, 1}, "(12)"}, {{1, 3}, "(23)"}, {{3, 2}, "(13)"}, {{2, 3}, "(123)"}, {{3, 1}, "(132)"}};
  std::vector<std::string> out;
  for (size_t i = 0; i < ctx.emb.size(); ++i) {
    std::complex<double> tw(ctx.emb.gens[i][0].re.to_double(), ctx.emb.gens[i][0].im.to_double());
    std::complex<double> tc(ctx.emb.gens[i][1].re.to_double(), ctx.emb.gens[i][1].im.to_double());
    out.push_back(names.at({which(tc), which(tw * tc)}));
  }
  return out;
}

Outcome c2() {
  Ctx c("Q(w,2^(1/3))");
  auto labels = s3_labels(c.g);
  auto type = [&](const std::map<std::string, long>& t) {
    InfinityType n;
    for (const auto& s : labels) n.n.push_back(t.at(s));
    return n;
  };
  auto n = type({{"e", 0}, {"(12)", 4}, {"(23)", 4}, {"(13)", 4}, {"(123)", 0}, {"(132)", 0}});
  auto pn = purity_check(n, c.g);
  auto np = type({{"e", 0}, {"(12)", 1}, {"(23)", 4}, {"(13)", 2}, {"(123)", 2}, {"(132)", 3}});
  bool np_impure = !purity_check(np, c.g).pure;
  long mism = 0, cells = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long cc = -2; cc <= 2; ++cc)
        for (long w = -2; w <= 2; ++w) {
          auto t = type({{"e", a}, {"(12)", b}, {"(23)", w - a}, {"(13)", cc}, {"(123)", w - cc}, {"(132)", w - b}});
          auto r = purity_check(t, c.g);
          bool expect = (w - a == b) && (b == cc);
          if (r.pure != expect || (r.pure && r.weight != w)) ++mism;
          ++cells;
        }
  Outcome o;
  o.pass = pn.pure && pn.weight == 4 && np_impure && mism == 0 && cells == 625;
  o.detail = "n pure weight " + std::to_string(pn.weight) + ", n' (0,1,2,4) " + (np_impure ? "impure" : "pure") +
             ", grid mismatches " + std::to_string(mism) + "/" + std::to_string(cells);
  return o;
}

Outcome c3() {
  std::mt19937_64 rng(20240601);
  std::vector<Ctx> fields;
  for (const char* name : {"Q(i)", "Q(w)", "Q(sqrt(-2))", "Q(zeta5)", "Q(i,sqrt(4+i))", "Q(w,2^(1/3))"})
    fields.emplace_back(name);
  long bad_card = 0, bad_gamma = 0, types = 0;
  auto gamma_agrees = [&](const InfinityType& t, const EmbeddingSet& emb, const std::vector<int>& eps) {
    InfinityType dual = t;
    for (auto& x : dual.n) x = -x;
    auto cs = critical_set(t, emb, eps);
    for (long m = -40; m <= 40; ++m) {
      bool reg = linf_is_finite(t, emb, m, eps) && linf_is_finite(dual, emb, 1 - m, eps);
      if (reg != cs.contains(m)) return false;
    }
    return true;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Ctx& c = fields[static_cast<size_t>(trial) % fields.size()];
    auto t = random_pure(c, rng, 12);
    if (critical_set(t, c.g.emb).size() != width(t, c.g)) ++bad_card;
    if (!gamma_agrees(t, c.g.emb, {})) ++bad_gamma;
    ++types;
  }
  auto cube = embeddings(NumberFieldTower::build({{"c", "x^3 - 2"}}));
  bool mixed_empty = critical_set(InfinityType{{2, 2, 2}}, cube, {0}).kind == CriticalSet::Kind::Empty &&
                     gamma_agrees(InfinityType{{2, 2, 2}}, cube, {0});
  auto rq = embeddings(NumberFieldTower::build({{"r", "x^2 - 2"}}));
  bool parity_empty = critical_set(InfinityType{{0, 0}}, rq, {0, 1}).kind == CriticalSet::Kind::Empty &&
                      gamma_agrees(InfinityType{{0, 0}}, rq, {0, 1});
  for (long w = -3; w <= 3; ++w)
    for (int e : {0, 1})
      if (!gamma_agrees(InfinityType{{w, w}}, rq, {e, e})) ++bad_gamma;
  auto qi = embeddings(catalog_tower("Q(i)"));
  auto cs = critical_set(InfinityType{{8, 0}}, qi);
  bool example = cs.kind == CriticalSet::Kind::Interval && cs.lo == -7 && cs.hi == 0;
  Outcome o;
  o.pass = bad_card == 0 && bad_gamma == 0 && mixed_empty && parity_empty && example;
  o.detail = std::to_string(types) + " random types, cardinality mismatches " + std::to_string(bad_card) +
             ", gamma mismatches " + std::to_string(bad_gamma) + ", mixed empty " + (mixed_empty ? "yes" : "no") +
             ", parity-mixed empty " + (parity_empty ? "yes" : "no") + ", (8,0) -> " + cs.str();
  return o;
}

Outcome c4() {
  std::mt19937_64 rng(77);
  std::vector<Ctx> fields;
  for (const char* name : {"Q(i)", "Q(w)", "Q(sqrt(-2))", "Q(zeta5)", "Q(i,sqrt(4+i))", "Q(w,2^(1/3))"})
    fields.emplace_back(name);
  long disc = 0, inside = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Ctx& c = fields[static_cast<size_t>(trial) % fields.size()];
    auto t = random_pure(c, rng, 6);
    bool win = combinatorial_window(t, c.g);
    auto cs = critical_set(analytic_type(t), c.g.emb);
    if (win != (cs.contains(-1) && cs.contains(0))) ++disc;
    if (win) ++inside;
  }
  Outcome o;
  o.pass = disc == 0;
  o.detail = "500 types (" + std::to_string(inside) + " inside the window), discrepancies " + std::to_string(disc);
  return o;
}

Outcome c5() {
  Ctx h("Q(i,sqrt(4+i))");
  auto n = base_change_of(h, {3, -5});
  long cocycle_bad = 0, pairs = 0;
  for (size_t a = 0; a < h.g.order(); ++a)
    for (size_t b = 0; b < h.g.order(); ++b) {
      int lhs = signature(n, h.g, h.g.compose(b, a)).eps;
      int rhs = signature(relabel(n, h.g, a), h.g, b).eps * signature(n, h.g, a).eps;
      if (lhs != rhs) ++cocycle_bad;
      ++pairs;
    }
  std::mt19937_64 rng(5);
  long order_bad = 0;
  const size_t P = h.g.emb.places.size();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<size_t> labels(P);
    std::iota(labels.begin(), labels.end(), size_t{0});
    std::shuffle(labels.begin(), labels.end(), rng);
    for (size_t s = 0; s < h.g.order(); ++s) {
      auto x = signature(n, h.g, s), y = signature(n, h.g, s, &labels);
      if (x.eps != y.eps || x.eps_tilde != y.eps_tilde) ++order_bad;
    }
  }
  long cm_bad = 0;
  for (const char* name : {"Q(i)", "Q(zeta5)"}) {
    Ctx c(name);
    std::mt19937_64 r2(9);
    for (int trial = 0; trial < 5; ++trial) {
      InfinityType t;
      do t = random_pure(c, r2, 6);
      while (!combinatorial_window(t, c.g));
      for (size_t s = 0; s < c.g.order(); ++s)
        if (signature(t, c.g, s).product != 1) ++cm_bad;
    }
  }
  auto table = reciprocity_table(h.g, h.sub, n);
  Outcome o;
  o.pass = h.g.order() == 8 && cocycle_bad == 0 && order_bad == 0 && cm_bad == 0 && table.pass && table.any_negative;
  o.detail = "cocycle failures " + std::to_string(cocycle_bad) + "/" + std::to_string(pairs) + ", reorderings changed eps " +
             std::to_string(order_bad) + ", CM products != 1: " + std::to_string(cm_bad) + ", sign columns " +
             (table.pass ? "agree" : "differ") + ", product -1 seen " + (table.any_negative ? "yes" : "no");
  return o;
}

Outcome c6() {
  bool cm_ok = true;
  std::string fails;
  for (const char* name : {"Q(i)", "Q(w)", "Q(zeta5)"}) {
    Ctx c(name);
    auto r = discriminant_identity_check(c.g, c.sub);
    if (!(r.lemma == "cm" && r.pass)) {
      cm_ok = false;
      fails += std::string(" ") + name;
    }
  }
  Ctx h("Q(i,sqrt(4+i))");
  auto t = discriminant_identity_check(h.g, h.sub);
  bool ti = t.lemma == "totally-imaginary" && t.pass &&
            t.data.delta_F.delta_f.equal_mod_rationals(SurdValue::rational(-1)) && t.data.norm_delta_rel == 16 * 17;
  Outcome o;
  o.pass = cm_ok && ti;
  o.detail = std::string("CM lemma ") + (cm_ok ? "holds for Q(i), Q(w), Q(zeta5)" : "fails for" + fails) +
             "; totally imaginary lemma " + (ti ? "holds" : "fails") + " with Delta_F = " + t.data.delta_F.delta_f.str() +
             ", N(d(F/F1)) = " + t.data.norm_delta_rel.get_str();
  return o;
}

Outcome c7() {
  const unsigned bits = 192;
  LOptions lo;
  lo.X = 1000000;
  auto z = lvalue(make_character(CatalogField::GaussianI, 0), Real(2L, bits), lo);
  Real zeta2(bits), cat(bits);
  mpfr_zeta_ui(zeta2.get(), 2, MPFR_RNDN);
  mpfr_const_catalan(cat.get(), MPFR_RNDN);
  double dz = abs(z.value.re - Real::parse("1.5067030", bits)).to_double();
  double dz_oracle = abs(z.value.re - zeta2 * cat).to_double();
  bool zeta_ok = dz < 1e-6 && dz_oracle < 1e-6;

  auto psi = make_character(CatalogField::GaussianI, 8);
  auto st = coefficients(psi, 1000000);
  bool euler_ok = true;
  std::ostringstream ed;
  for (long s : {9L, 10L}) {
    auto a = dirichlet_sum(st, Real(s, bits));
    auto b = euler_product(psi, Real(s, bits), 1000000);
    Real d = (a.value - b.value).abs();
    bool ok = d <= a.error + b.error;
    euler_ok = euler_ok && ok;
    ed << " s=" << s << ": |diff| " << d.to_double() << " vs " << (a.error + b.error).to_double() << ";";
  }

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-9.5, 15.0);
  double worst = 0;
  for (int k = 0; k < 20;) {
    double x = u(rng);
    if (x <= 0.5 && std::fabs(x - std::round(x)) < 1e-3) continue;
    Real s(x, bits);
    Real g = gamma_C(s);
    Real rel = abs((g - gamma_R(s) * gamma_R(s + Real(1L, bits))) / g);
    worst = std::max(worst, rel.to_double());
    ++k;
  }
  bool dup_ok = worst < 1e-40;
  Outcome o;
  o.pass = zeta_ok && euler_ok && dup_ok;
  std::ostringstream d;
  d << "zeta_Q(i)(2) = " << z.value.re.str(12) << " (|diff| " << dz << ", oracle |diff| " << dz_oracle << ");"
    << ed.str() << " duplication worst " << worst;
  o.detail = d.str();
  return o;
}

Outcome c8() {
  CounterexampleParams p;
  p.lopt.X = 0;
  auto r = counterexample_pipeline(p);
  long X = std::max({r.r_psi.numerator.X, r.r_psi.denominator.X, r.r_psiw.numerator.X, r.r_psiw.denominator.X});
  Outcome o;
  o.pass = r.verdict == "counterexample-reproduced" && X <= 10000000 && r.rec.sound && r.rec_sqrt.sound;
  std::ostringstream d;
  d << "R_psi = " << r.r_psi.ratio.re.str(12) << ", R_psi*omega = " << r.r_psiw.ratio.re.str(12) << " + "
    << r.r_psiw.ratio.im.str(6) << "i, R_chi = " << r.r_chi.re.str(12) << " + " << r.r_chi.im.str(6)
    << "i (error " << r.r_chi_error.to_double() << "), real within error " << (r.imag_within_error ? "yes" : "no")
    << ", rational branch " << (r.rec.recognized ? "recognized" : "not recognized") << ", sqrt(" << r.radicand.get_str()
    << ") branch " << (r.rec_sqrt.recognized ? "recognized" : "not recognized") << ", fallback "
    << (r.used_fallback ? "used" : "unused") << ", X " << X << ", verdict " << r.verdict;
  o.detail = d.str();
  return o;
}

Outcome c9() {
  auto psi = make_character(CatalogField::GaussianI, 8, QElem{4, 1});
  LOptions lo;
  lo.X = 2000000;
  std::vector<std::string> outs;
  for (unsigned w : {1u, 4u, 8u}) {
    lo.workers = w;
    auto r = lvalue(psi, Real(7L, lo.bits), lo);
    outs.push_back(r.value.re.to_mpq().get_str() + "|" + r.value.im.to_mpq().get_str() + "|" + r.error.to_mpq().get_str());
  }
  Outcome o;
  o.pass = outs[0] == outs[1] && outs[1] == outs[2];
  o.detail = std::string("L(7, psi*omega) at X = 2e6 with 1, 4, 8 workers: ") + (o.pass ? "bit-identical" : "differ");
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"c1", "discriminants", 1, c1},
    {"c2", "purity suite", 1, c2},
    {"c3", "critical sets", 1, c3},
    {"c4", "window equivalence", 1, c4},
    {"c5", "signature properties", 10, c5},
    {"c6", "discriminant identities", 1, c6},
    {"c7", "L-machinery cross-checks", 60, c7},
    {"c8", "counterexample reproduction", 600, c8},
    {"c9", "determinism", 60, c9},
};

bool run(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const Error& e) {
    o.pass = false;
    o.detail = std::string("error ") + error_code_name(e.code()) + ": " + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs < c.limit_s;
  bool pass = o.pass && in_time;
  std::printf("%s %s %s: %s (%.2f s, limit %.0f s%s)\n", c.id, pass ? "PASS" : "FAIL", c.title, o.detail.c_str(), secs,
              c.limit_s, in_time ? "" : ", over time");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  bool ok = true;
  bool any = false;
  for (const auto& c : kCriteria) {
    bool wanted = argc < 2;
    for (int i = 1; i < argc; ++i)
      if (std::string(argv[i]) == c.id) wanted = true;
    if (!wanted) continue;
    any = true;
    ok = run(c) && ok;
  }
  if (!any) {
    std::fprintf(stderr, "usage: acceptance [c1 ... c9]\n");
    return 2;
  }
  return ok ? 0 : 1;
}
