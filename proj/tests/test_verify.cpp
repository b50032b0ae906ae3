#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/verify.hpp"

using namespace hecke;

namespace {

Real R(double x) { return Real(x, 192); }

struct Ctx {
  GaloisContext g;
  MaximalSubfields sub;
  explicit Ctx(const std::string& name) : g(galois_closure(catalog_tower(name))), sub(maximal_subfields(g)) {}
};

InfinityType base_change_of(const Ctx& c, const std::vector<long>& m) {
  InfinityType n;
  for (size_t i = 0; i < c.g.degree(); ++i) n.n.push_back(m[c.sub.restriction[i]]);
  return n;
}

}  // namespace

TEST_CASE("rational recognition examples") {
  auto a = recognize_rational(Real::parse("0.333333333333", 192), 100, R(1e-10));
  CHECK(a.recognized);
  CHECK(a.p == 1);
  CHECK(a.q == 3);
  CHECK(a.sound);
  auto b = recognize_rational(R(2.0), 100, R(1e-30));
  CHECK(b.recognized);
  CHECK(b.p == 2);
  CHECK(b.q == 1);
  auto c = recognize_rational(Real::pi(192), 1000, R(1e-9));
  CHECK_FALSE(c.recognized);
  CHECK(c.residual.to_double() > 1e-7);
  auto d = recognize_rational(R(-0.75), 10, R(1e-20));
  CHECK(d.recognized);
  CHECK(d.p == -3);
  CHECK(d.q == 4);
  auto z = recognize_rational(Real(0L, 192), 10, R(1e-20));
  CHECK(z.recognized);
  CHECK(z.p == 0);
  // tolerance too loose for the q bound
  CHECK_FALSE(recognize_rational(R(0.5), 1000, R(1e-3)).sound);
}

TEST_CASE("recognition is sound below the best-approximation threshold") {
  std::mt19937_64 rng(3);
  const long qb = 10000;
  Real tol = Real(0.999, 256) / (Real(2L, 256) * Real(qb, 256) * Real(qb, 256));
  std::uniform_int_distribution<long> qd(1, qb), pd(-5 * qb, 5 * qb);
  std::uniform_real_distribution<double> frac(-0.99, 0.99);
  for (int trial = 0; trial < 300; ++trial) {
    long q = qd(rng), p = pd(rng);
    mpq_class x(p, q);
    x.canonicalize();
    Real v = Real(x, 256) + tol * Real(frac(rng), 256);
    auto r = recognize_rational(v, qb, tol);
    REQUIRE(r.recognized);
    CHECK(r.sound);
    CHECK(mpq_class(r.p, r.q) == x);
    CHECK(r.q <= qb);
  }
}

TEST_CASE("Gaussian recognition") {
  Complex z(R(0.25), R(-1.5));
  auto g = recognize_gaussian(z, 100, R(1e-20));
  CHECK(g.recognized);
  CHECK(g.re.p == 1);
  CHECK(g.re.q == 4);
  CHECK(g.im.p == -3);
  CHECK(g.im.q == 2);
  CHECK_FALSE(recognize_gaussian(Complex(R(0.25), Real::pi(192)), 100, R(1e-20)).recognized);
}

TEST_CASE("catalog towers") {
  auto names = catalog_tower_names();
  CHECK(names.size() >= 6);
  CHECK(catalog_tower("Q(i,sqrt(4+i))").degree() == 4);
  CHECK(catalog_tower("Q(w,2^(1/3))").degree() == 6);
  CHECK(catalog_tower("Q(zeta5)").degree() == 4);
}

TEST_CASE("discriminant identities") {
  for (const char* name : {"Q(i)", "Q(w)", "Q(sqrt(-2))", "Q(zeta5)"}) {
    Ctx c(name);
    auto r = discriminant_identity_check(c.g, c.sub);
    CHECK(r.lemma == "cm");
    CHECK(r.pass);
    CHECK(r.lhs.equal_mod_rationals(r.rhs));
  }
  Ctx qi("Q(i)");
  auto r = discriminant_identity_check(qi.g, qi.sub);
  CHECK(r.data.delta == -4);
  CHECK(r.data.delta_F.delta_f.equal_mod_rationals(SurdValue::i_power(1)));
  CHECK(r.lhs == SurdValue::rational(2));

  Ctx z5("Q(zeta5)");
  CHECK(discriminant_identity_check(z5.g, z5.sub).data.delta == 125);

  Ctx h("Q(i,sqrt(4+i))");
  auto t = discriminant_identity_check(h.g, h.sub);
  CHECK(t.lemma == "totally-imaginary");
  CHECK(t.pass);
  CHECK(t.data.delta == 4352);
  CHECK(t.data.delta_F.delta_f.equal_mod_rationals(SurdValue::rational(-1)));
  CHECK(t.data.delta_F.delta_f.radicand() == 1);
  CHECK(t.data.norm_delta_rel == 272);
  CHECK(t.data.sqrt_radicand == 17);
  CHECK(t.lhs.radicand() == 17);

  Ctx s3("Q(w,2^(1/3))");
  auto u = discriminant_identity_check(s3.g, s3.sub);
  CHECK(u.lemma == "totally-imaginary");
  CHECK(u.pass);
}

TEST_CASE("reciprocity tables") {
  Ctx h("Q(i,sqrt(4+i))");
  auto t = reciprocity_table(h.g, h.sub, base_change_of(h, {3, -5}));
  CHECK(t.radicand == 17);
  REQUIRE(t.rows.size() == 8);
  CHECK(t.pass);
  CHECK(t.any_negative);
  CHECK(t.rows[0].eps == 1);
  CHECK(t.rows[0].eps_tilde == 1);
  CHECK(t.rows[0].product == 1);
  CHECK(t.rows[0].sqrt_sign == 1);
  int neg = 0;
  for (const auto& row : t.rows) {
    CHECK(row.agree);
    CHECK(row.product == row.eps * row.eps_tilde);
    if (row.sqrt_sign == -1) ++neg;
  }
  CHECK(neg == 4);

  Ctx qi("Q(i)");
  auto q = reciprocity_table(qi.g, qi.sub, InfinityType{{3, -5}});
  CHECK(q.pass);
  CHECK_FALSE(q.any_negative);
  for (const auto& row : q.rows) CHECK(row.product == 1);

  Ctx s3("Q(w,2^(1/3))");
  auto s = reciprocity_table(s3.g, s3.sub, base_change_of(s3, {1, -3}));
  CHECK(s.pass);
}

TEST_CASE("counterexample pipeline with a square datum") {
  // d = -1 = i^2: the twist only removes the Euler factor at 1+i, so
  // R_chi = R_psi^2 * (1 - 16/2^7) / (1 - 16/2^8) = (20/21)^2 * 14/15 = 160/189
  CounterexampleParams p;
  p.d = "-1";
  p.lopt.X = 300000;
  auto r = counterexample_pipeline(p);
  CHECK(r.radicand == 1);
  CHECK(r.imag_within_error);
  CHECK(r.rec.recognized);
  CHECK(r.rec.p == 160);
  CHECK(r.rec.q == 189);
  CHECK(r.rec_sqrt.recognized);
  CHECK(r.verdict == "not-reproduced");
  auto a = recognize_rational(r.r_psi.ratio.re, 10000, R(5e-8));
  CHECK(a.recognized);
  CHECK(a.p == 20);
  CHECK(a.q == 21);
}
