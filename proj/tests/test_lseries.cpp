#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "hecke/error.hpp"
#include "hecke/lseries.hpp"

using namespace hecke;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Ok;
}

Real R(double x) { return Real(x, 192); }
Real R(long x) { return Real(x, 192); }

double diff(const Real& a, const Real& b) { return abs(a - b).to_double(); }

Real catalan(unsigned bits) {
  Real c(bits);
  mpfr_const_catalan(c.get(), MPFR_RNDN);
  return c;
}

Real zeta_int(long s, unsigned bits) {
  Real z(bits);
  mpfr_zeta_ui(z.get(), static_cast<unsigned long>(s), MPFR_RNDN);
  return z;
}

bool within(const EvalResult& a, const EvalResult& b) {
  Real d = (a.value - b.value).abs();
  return d <= a.error + b.error;
}

}  // namespace

TEST_CASE("gamma factors") {
  Real pi = Real::pi(192);
  CHECK(diff(gamma_R(R(1L)), R(1L)) < 1e-50);
  CHECK(diff(gamma_C(R(1L)), R(1L) / pi) < 1e-50);
  CHECK(diff(gamma_C(R(2L)), R(1L) / (R(2L) * pi * pi)) < 1e-50);
  CHECK(diff(gamma_R(R(2L)), R(1L) / pi) < 1e-50);
  for (long s : {0L, -2L, -10L}) CHECK(code_of([&] { gamma_R(R(s)); }) == ErrorCode::PoleAtS);
  for (long s : {0L, -1L, -7L}) CHECK(code_of([&] { gamma_C(R(s)); }) == ErrorCode::PoleAtS);
  CHECK(code_of([&] { gamma_R(R(-1L)); }) == ErrorCode::Ok);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-9.5, 12.0);
  int tested = 0;
  while (tested < 20) {
    double x = u(rng);
    if (std::fabs(x - std::round(x)) < 1e-3 && x <= 0.5) continue;
    Real s = R(x);
    Real lhs = gamma_C(s), rhs = gamma_R(s) * gamma_R(s + R(1L));
    CHECK(abs((lhs - rhs) / lhs).to_double() < 1e-40);
    ++tested;
  }
}

TEST_CASE("archimedean factors") {
  auto qi = catalog_field(CatalogField::GaussianI).tower();
  auto emb = embeddings(qi);
  Real s = R(3.25);
  CHECK(diff(linf_factor(InfinityType{{-8, 0}}, emb, s), gamma_C(s)) < 1e-50);
  CHECK(diff(linf_factor(InfinityType{{0, 0}}, emb, s), gamma_C(s)) < 1e-50);
  CHECK(diff(linf_factor(InfinityType{{-3, 1}}, emb, s), gamma_C(s + R(1L))) < 1e-50);
  CHECK(code_of([&] { linf_factor(InfinityType{{-8, 0}}, emb, R(0L)); }) == ErrorCode::PoleAtS);

  auto rq = NumberFieldTower::build({{"r", "x^2 - 2"}});
  auto er = embeddings(rq);
  CHECK(diff(linf_factor(InfinityType{{0, 0}}, er, s, {0, 1}), gamma_R(s) * gamma_R(s + R(1L))) < 1e-50);
}

TEST_CASE("finiteness of the archimedean factors matches the critical set") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> u(-9, 9);
  auto check_type = [&](const InfinityType& t, const EmbeddingSet& emb, const std::vector<int>& eps) {
    InfinityType dual = t;
    for (auto& x : dual.n) x = -x;
    auto cs = critical_set(t, emb, eps);
    for (long m = -25; m <= 25; ++m) {
      bool both = linf_is_finite(t, emb, m, eps) && linf_is_finite(dual, emb, 1 - m, eps);
      if (both != cs.contains(m)) FAIL_CHECK("type " << to_string(t) << " at " << m);
    }
  };
  for (const char* name : {"Q(i)", "Q(w)", "Q(sqrt(-2))"}) {
    auto emb = embeddings(catalog_field(name).tower());
    for (int trial = 0; trial < 40; ++trial) {
      long w = u(rng), a = u(rng);
      check_type(InfinityType{{a, w - a}}, emb, {});
    }
  }
  auto z5 = embeddings(NumberFieldTower::build({{"z", "x^4 + x^3 + x^2 + x + 1"}}));
  for (int trial = 0; trial < 40; ++trial) {
    long w = u(rng);
    InfinityType t{std::vector<long>(4)};
    for (size_t i = 0; i < 4; ++i)
      if (z5.conj[i] > i) {
        t.n[i] = u(rng);
        t.n[z5.conj[i]] = w - t.n[i];
      }
    check_type(t, z5, {});
  }
  auto rq = embeddings(NumberFieldTower::build({{"r", "x^2 - 2"}}));
  for (long w = -4; w <= 4; ++w)
    for (int e : {0, 1}) check_type(InfinityType{{w, w}}, rq, {e, e});
  // mixed parities and mixed signature have no critical integers
  check_type(InfinityType{{0, 0}}, rq, {0, 1});
  auto cube = embeddings(NumberFieldTower::build({{"c", "x^3 - 2"}}));
  for (long w = -3; w <= 3; ++w) check_type(InfinityType{{w, w, w}}, cube, {0});
}

TEST_CASE("tail bounds") {
  // numerical sum of d(n) n^-sigma beyond X against the bound
  const long X = 2000, Y = 400000;
  std::vector<int> d(Y + 1, 0);
  for (long i = 1; i <= Y; ++i)
    for (long j = i; j <= Y; j += i) ++d[static_cast<size_t>(j)];
  for (double sigma : {1.5, 2.0, 3.0}) {
    double partial = 0;
    for (long n = X + 1; n <= Y; ++n) partial += d[static_cast<size_t>(n)] * std::pow(static_cast<double>(n), -sigma);
    CHECK(partial < tail_bound(X, R(sigma)).to_double());
  }
  CHECK(tail_bound(4096, R(3L)).to_double() < tail_bound(2048, R(3L)).to_double());
  CHECK(tail_bound(4096, R(3L), 4).to_double() > tail_bound(4096, R(3L), 2).to_double());
  long X1 = choose_norm_bound(R(3L), 1e-6);
  CHECK(tail_bound(X1, R(3L)).to_double() <= 1e-6);
  CHECK(tail_bound(X1 / 2, R(3L)).to_double() > 1e-6);
  CHECK(X1 % 1024 == 0);
  CHECK(code_of([] { choose_norm_bound(R(1.01), 1e-30); }) == ErrorCode::TailTooLarge);
}

TEST_CASE("Dedekind zeta values") {
  LOptions o;
  o.X = 1000000;
  auto triv = make_character(CatalogField::GaussianI, 0);
  auto z = lvalue(triv, R(2L), o);
  Real oracle = zeta_int(2, 192) * catalan(192);
  CHECK(diff(z.value.re, oracle) < 1e-6);
  CHECK(diff(z.value.re, R(1.5067030)) < 1e-6);
  CHECK(z.value.im.is_zero());

  auto zw = lvalue(make_character(CatalogField::Eisenstein, 0), R(2L), o);
  CHECK(diff(zw.value.re, zeta_int(2, 192) * Real::parse("0.78130241289648629686718719", 192)) < 1e-6);

  // large s is dominated by a_1
  LOptions q;
  q.X = 4096;
  auto big = lvalue(make_character(CatalogField::GaussianI, 8), R(80L), q);
  CHECK(diff(big.value.re, R(1L)) < 1e-10);
}

TEST_CASE("Euler product and Dirichlet sum agree") {
  auto triv = make_character(CatalogField::GaussianI, 0);
  auto s3 = coefficients(triv, 200000);
  auto ds = dirichlet_sum(s3, R(3L));
  auto ep = euler_product(triv, R(3L), 200000);
  CHECK_FALSE(ep.rigorous);
  CHECK(diff(ds.value.re, ep.value.re) < 1e-8);

  auto psi = make_character(CatalogField::GaussianI, 8);
  auto st = coefficients(psi, 1000000);
  for (long s : {9L, 10L}) {
    auto a = dirichlet_sum(st, R(s));
    auto b = euler_product(psi, R(s), 1000000);
    CHECK(within(a, b));
    CHECK(diff(a.value.re, b.value.re) < 1e-8);
  }
  for (auto [id, k, s] : {std::tuple{CatalogField::Eisenstein, 6L, 8L}, {CatalogField::SqrtMinus2, 2L, 4L}}) {
    auto chi = make_character(id, k);
    auto a = dirichlet_sum(coefficients(chi, 300000), R(s));
    auto b = euler_product(chi, R(s), 300000);
    CHECK(within(a, b));
  }
  auto tw = make_character(CatalogField::GaussianI, 8, QElem{4, 1});
  auto a = dirichlet_sum(coefficients(tw, 300000), R(10L));
  auto b = euler_product(tw, R(10L), 300000);
  CHECK(within(a, b));
  CHECK(code_of([&] { euler_product(psi, R(5L), 1000); }) == ErrorCode::OutsideConvergence);
}

TEST_CASE("tail bounds are sound under doubling") {
  auto psi = make_character(CatalogField::GaussianI, 8);
  auto full = coefficients(psi, 1 << 17);
  EvalResult prev;
  bool first = true;
  for (long X = 1024; X <= (1 << 17); X *= 2) {
    CoefficientStream s = full;
    s.X = X;
    s.a.resize(static_cast<size_t>(X) + 1);
    auto r = dirichlet_sum(s, R(6.5));
    CHECK(r.X == X);
    if (!first) CHECK((r.value - prev.value).abs() <= prev.error);
    prev = r;
    first = false;
  }
}

TEST_CASE("convergence and tail requirements") {
  auto psi = make_character(CatalogField::GaussianI, 8);
  auto st = coefficients(psi, 4096);
  CHECK(code_of([&] { dirichlet_sum(st, R(5L)); }) == ErrorCode::OutsideConvergence);
  SumOptions o;
  o.required_tail = 1e-30;
  CHECK(code_of([&] { dirichlet_sum(st, R(6L), o); }) == ErrorCode::TailTooLarge);
  LOptions lo;
  CHECK(code_of([&] { lvalue(psi, R(4.5), lo); }) == ErrorCode::OutsideConvergence);
}

TEST_CASE("summation is deterministic across worker counts") {
  auto psi = make_character(CatalogField::GaussianI, 8, QElem{4, 1});
  LOptions o;
  o.X = 300000;
  o.workers = 1;
  auto a = lvalue(psi, R(7L), o);
  for (unsigned w : {2u, 4u, 8u}) {
    o.workers = w;
    auto b = lvalue(psi, R(7L), o);
    CHECK(a.value.re == b.value.re);
    CHECK(a.value.im == b.value.im);
    CHECK(a.error == b.error);
  }
}

TEST_CASE("completed values and ratios") {
  auto psi = make_character(CatalogField::GaussianI, 8);
  LOptions o;
  o.X = 200000;
  auto l8 = lvalue(psi, R(8L), o);
  auto c8 = completed(psi, 8, o);
  Real expect = gamma_C(R(8L)) * l8.value.re;
  CHECK(abs((c8.value.re - expect) / expect).to_double() < 1e-40);
  auto c7 = completed(psi, 7, o);
  CHECK_FALSE(c7.value.re.is_zero());
  CHECK(c7.value.re.is_finite());
  CHECK(code_of([&] { completed(psi, 0, o); }) == ErrorCode::PoleAtS);
  CHECK(code_of([&] { completed(psi, 9, o); }) == ErrorCode::InvalidArgument);

  auto r = ratio(psi, 7, o);
  CHECK(r.m == 7);
  CHECK(r.ratio.im.is_zero());
  Real direct = r.numerator.value.re / r.denominator.value.re;
  CHECK(diff(direct, r.ratio.re) <= r.error.to_double());
  LOptions oc = o;
  oc.conjugate = true;
  auto rc = ratio(psi, 7, oc);
  CHECK(diff(rc.ratio.re, r.ratio.re) <= (r.error + rc.error).to_double());
  CHECK(analytic_type(psi).n == std::vector<long>{-8, 0});
  CHECK(analytic_type(psi, true).n == std::vector<long>{0, -8});
  auto t = make_character(CatalogField::GaussianI, 8, std::nullopt, 5);
  CHECK(analytic_type(t).n == std::vector<long>{-3, 5});
}
