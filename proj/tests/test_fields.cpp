#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hecke/error.hpp"
#include "hecke/galois.hpp"
#include "hecke/verify.hpp"
#include "util.hpp"

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

NumberFieldTower gauss() { return NumberFieldTower::build({{"i", "x^2 + 1"}}); }
NumberFieldTower hida() { return NumberFieldTower::build({{"i", "x^2 + 1"}, {"t", "x^2 - (4 + i)"}}); }

}  // namespace

TEST_CASE("element arithmetic in a tower") {
  auto F = hida();
  auto t = F.gen(1), i = F.gen(0);
  CHECK(t * t == F.parse_element("4 + i"));
  auto x = F.parse_element("1 + 2*t - i*t");
  CHECK(x * x.inverse() == F.one());
  auto y = F.parse_element("3 - t + i");
  CHECK((x * y).norm() == x.norm() * y.norm());
  CHECK(gauss().parse_element("4 + i").norm() == 17);
  CHECK(F.from_power_basis(F.to_power_basis(x)) == x);
  CHECK(F.absolute_minpoly().degree() == 4);
  CHECK(x.minpoly().eval(mpq_class(0)) != 0);
  CHECK(i.pow(4) == F.one());
  CHECK(code_of([&] { F.zero().inverse(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("discriminants of bases") {
  auto Q = gauss();
  CHECK(rel_discriminant(Q, 0, {Q.one(), Q.gen(0)}).to_rational() == -4);
  auto F = hida();
  CHECK(rel_discriminant(F, 1, {F.one(), F.gen(1)}) == F.prefix(1).parse_element("16 + 4*i"));
  auto K = F.prefix(1);
  CHECK(abs_discriminant_tower(F, 1, {F.one(), F.gen(1)}, {K.one(), K.gen(0)}) == 4352);
  CHECK(rel_discriminant(F, 0, tower_basis(F, 0)).to_rational() == 4352);
  CHECK(code_of([&] { rel_discriminant(F, 1, {F.one(), F.rational(2)}); }) == ErrorCode::NotABasis);
  // power basis of a simple field: discriminant of the polynomial
  auto Z = NumberFieldTower::build({{"z", "x^4 + x^3 + x^2 + x + 1"}});
  CHECK(rel_discriminant(Z, 0, tower_basis(Z, 0)).to_rational() == 125);
}

TEST_CASE("tower construction errors") {
  CHECK(code_of([] { NumberFieldTower::build({{"i", "x^2 + 1"}, {"j", "x^2 + 1"}}); }) == ErrorCode::ReducibleLayer);
  CHECK(code_of([] { NumberFieldTower::build({{"a", "x^5 - 2"}, {"b", "x^5 - 3"}}); }) == ErrorCode::DegreeOverLimit);
  CHECK(code_of([] { NumberFieldTower::build({{"a", "x^2 +"}}); }) == ErrorCode::ParseError);
  CHECK(code_of([] { NumberFieldTower::from_json("{\"layers\": 3}"); }) == ErrorCode::ParseError);
  auto F = NumberFieldTower::from_json(hida().to_json());
  CHECK(F.degree() == 4);
}

TEST_CASE("embeddings follow the canonical order") {
  auto F = NumberFieldTower::build({{"c", "x^3 - 2"}});
  EmbeddingSet e = embeddings(F, 128);
  CHECK(e.r1 == 1);
  CHECK(e.r2 == 1);
  CHECK(e.is_real(0));
  CHECK(e.conj[1] == 2);
  CHECK(e.theta[1].im.sign() > 0);
  auto H = hida();
  EmbeddingSet h = embeddings(H, 128);
  CHECK(h.r2 == 2);
  for (size_t k = 0; k < h.size(); ++k) {
    // i^2 = -1 and t^2 = 4 + i at every embedding
    Complex i = h.gens[k][0], t = h.gens[k][1];
    Complex ii = i * i, tt = t * t;
    CHECK(std::abs(ii.re.to_double() + 1) < 1e-30);
    CHECK(std::abs(tt.re.to_double() - 4 - i.re.to_double()) < 1e-30);
    CHECK(std::abs(tt.im.to_double() - i.im.to_double()) < 1e-30);
    CHECK(h.conj[h.conj[k]] == k);
  }
}

TEST_CASE("closure group orders") {
  auto order = [](const std::vector<LayerSpec>& l) { return galois_closure(NumberFieldTower::build(l)).order(); };
  CHECK(order({{"i", "x^2 + 1"}}) == 2);
  CHECK(order({{"c", "x^3 - 2"}}) == 6);
  CHECK(order({{"a", "x^4 - 2"}}) == 8);
  CHECK(order({{"z", "x^4 + x^3 + x^2 + x + 1"}}) == 4);
  CHECK(order({{"i", "x^2 + 1"}, {"t", "x^2 - (4 + i)"}}) == 8);
  CHECK(order({{"w", "x^2 + x + 1"}, {"c", "x^3 - 2"}}) == 6);
  CHECK(order({{"a", "x^2 - 2"}, {"b", "x^2 - 3"}}) == 4);
  CHECK(code_of([] { galois_closure(NumberFieldTower::build({{"a", "x^5 - x - 1"}})); }) == ErrorCode::ClosureTooLarge);
}

TEST_CASE("closure group is a group acting faithfully") {
  auto ctx = galois_closure(hida());
  const size_t n = ctx.order();
  std::set<Perm> perms(ctx.perm.begin(), ctx.perm.end());
  CHECK(perms.size() == n);
  for (size_t j = 0; j < ctx.degree(); ++j) CHECK(ctx.perm[0][j] == j);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      size_t c = ctx.compose(a, b);
      for (size_t j = 0; j < ctx.degree(); ++j) CHECK(ctx.perm[c][j] == ctx.perm[a][ctx.perm[b][j]]);
    }
  CHECK(ctx.perm[ctx.conj] == ctx.emb.conj);
  CHECK(ctx.compose(ctx.conj, ctx.conj) == 0);
}

TEST_CASE("maximal subfields") {
  auto z = galois_closure(NumberFieldTower::build({{"z", "x^4 + x^3 + x^2 + x + 1"}}));
  CHECK(subfields(z).size() == 3);
  auto mz = maximal_subfields(z);
  CHECK(mz.f0.degree == 2);
  mpq_class d0 = discriminant(mz.f0.minpoly);
  CHECK(squarefree_decompose(mpz_class(d0.get_num() * d0.get_den())) == 5);
  CHECK(mz.f1.degree == 4);
  auto dz = delta_F(z, mz.f0.degree, mz.f1.degree, mz.D);
  CHECK(dz.delta_f.equal_mod_rationals(SurdValue::sqrt_of(5)));

  auto h = galois_closure(hida());
  auto mh = maximal_subfields(h);
  CHECK(mh.f0.degree == 1);
  CHECK(mh.f1.degree == 2);
  CHECK(mh.has_cm);
  CHECK(discriminant(mh.f1.minpoly) < 0);
  auto dh = delta_F(h, 1, 2, mh.D);
  CHECK(dh.delta_f.equal_mod_rationals(SurdValue::rational(-1)));

  auto s3 = galois_closure(NumberFieldTower::build({{"w", "x^2 + x + 1"}, {"c", "x^3 - 2"}}));
  auto m3 = maximal_subfields(s3);
  CHECK(m3.f0.degree == 1);
  CHECK(m3.f1.degree == 2);
  CHECK(squarefree_decompose(mpz_class(-discriminant(m3.f1.minpoly).get_num())) == 3);
}

TEST_CASE("square roots in the closure") {
  auto h = galois_closure(hida());
  auto P = sqrt_in_closure(h, 17);
  REQUIRE(P);
  QPoly sq = ((*P) * (*P)) % h.closure_minpoly;
  CHECK(sq == QPoly::constant(17));
  int moved = 0;
  Complex p0 = P->eval(h.closure_roots[0]);
  for (size_t k = 0; k < h.order(); ++k) {
    // independent sign: value at the k-th closure root against the reference root
    Complex pk = P->eval(h.closure_roots[k]);
    int numeric = (pk.re.sign() == p0.re.sign()) ? 1 : -1;
    CHECK(galois_action_on_sqrt(h, k, 17) == numeric);
    if (numeric < 0) ++moved;
  }
  CHECK(moved == 4);
  CHECK(galois_action_on_sqrt(h, 0, 17) == 1);
  auto q = galois_closure(gauss());
  CHECK(code_of([&] { galois_action_on_sqrt(q, 1, 3); }) == ErrorCode::SqrtNotInClosure);
  CHECK(galois_action_on_sqrt(q, 1, 1) == 1);
}

TEST_CASE("surd arithmetic") {
  SurdValue a = SurdValue::sqrt_of(-64);
  CHECK(a.i_exponent() == 1);
  CHECK(a.rational_part() == 8);
  CHECK(a.pow(2) == SurdValue::rational(-64));
  SurdValue b = SurdValue::sqrt_of(mpq_class(272));
  CHECK(b.radicand() == 17);
  CHECK(b.rational_part() == 4);
  CHECK((b * b.inverse()) == SurdValue::rational(1));
  CHECK(SurdValue::i_power(2).equal_mod_rationals(SurdValue::rational(1)));
  CHECK(!SurdValue::i_power(1).equal_mod_rationals(SurdValue::rational(1)));
  CHECK(!b.equal_mod_rationals(SurdValue::rational(3)));
}

TEST_CASE("catalog towers build") {
  for (const auto& name : catalog_tower_names()) CHECK(catalog_tower(name).degree() >= 2);
}
