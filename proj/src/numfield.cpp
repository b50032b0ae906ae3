#include "hecke/numfield.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hecke/error.hpp"
#include "hecke/expr.hpp"
#include "hecke/roots.hpp"
#include "hecke/zfactor.hpp"

namespace hecke {

using Vec = std::vector<mpq_class>;

struct NumberFieldTower::Data {
  std::shared_ptr<const Data> below;  // null for Q
  Layer layer;
  int degree = 1;
  size_t depth = 0;
  std::vector<std::string> names;
  QPoly minpoly;
  std::vector<long> theta_coeffs;
  QMatrix T, Tinv;  // columns of T: theta^j in the product basis

  Vec mul(const Vec& a, const Vec& b) const {
    if (!below) return {a[0] * b[0]};
    const size_t D0 = static_cast<size_t>(below->degree);
    const size_t d = static_cast<size_t>(layer.degree);
    std::vector<Vec> z(2 * d - 1, Vec(D0));
    auto slice = [&](const Vec& v, size_t i) { return Vec(v.begin() + i * D0, v.begin() + (i + 1) * D0); };
    auto nonzero = [](const Vec& v) { return std::any_of(v.begin(), v.end(), [](const mpq_class& q) { return q != 0; }); };
    std::vector<Vec> as(d), bs(d);
    std::vector<bool> az(d), bz(d);
    for (size_t i = 0; i < d; ++i) {
      as[i] = slice(a, i);
      bs[i] = slice(b, i);
      az[i] = nonzero(as[i]);
      bz[i] = nonzero(bs[i]);
    }
    for (size_t i = 0; i < d; ++i) {
      if (!az[i]) continue;
      for (size_t j = 0; j < d; ++j) {
        if (!bz[j]) continue;
        Vec p = below->mul(as[i], bs[j]);
        for (size_t t = 0; t < D0; ++t) z[i + j][t] += p[t];
      }
    }
    for (size_t t = 2 * d - 2; t >= d; --t) {
      if (!nonzero(z[t])) continue;
      Vec c = z[t];
      for (auto& q : z[t]) q = 0;
      for (size_t b2 = 0; b2 < d; ++b2) {
        Vec p = below->mul(c, layer.coeffs[b2]);
        for (size_t u = 0; u < D0; ++u) z[t - d + b2][u] -= p[u];
      }
    }
    Vec out(D0 * d);
    for (size_t i = 0; i < d; ++i)
      for (size_t t = 0; t < D0; ++t) out[i * D0 + t] = z[i][t];
    return out;
  }

  Vec unit(size_t idx) const {
    Vec v(static_cast<size_t>(degree));
    v[idx] = 1;
    return v;
  }

  // Generator k (0-based layer index) as a flat vector of this level.
  Vec gen(size_t k) const {
    const Data* lvl = this;
    while (lvl->depth > k + 1) lvl = lvl->below.get();
    // lvl is the level whose top layer is k
    Vec g;
    const size_t D0 = static_cast<size_t>(lvl->below->degree);
    if (lvl->layer.degree >= 2) {
      g = Vec(static_cast<size_t>(lvl->degree));
      g[D0] = 1;
    } else {
      g = lvl->layer.coeffs[0];
      for (auto& q : g) q = -q;
    }
    g.resize(static_cast<size_t>(degree));
    return g;
  }
};

namespace {

using DataPtr = std::shared_ptr<const NumberFieldTower::Data>;

DataPtr rationals_data() {
  static DataPtr q = [] {
    auto d = std::make_shared<NumberFieldTower::Data>();
    d->degree = 1;
    d->depth = 0;
    d->minpoly = QPoly::x();
    d->T = QMatrix::identity(1);
    d->Tinv = QMatrix::identity(1);
    return DataPtr(d);
  }();
  return q;
}

// Polynomial in x with coefficients in a fixed lower field, used while parsing layers.
struct LPoly {
  const NumberFieldTower::Data* base = nullptr;
  std::vector<Vec> c;

  void trim() {
    while (!c.empty() && std::all_of(c.back().begin(), c.back().end(), [](const mpq_class& q) { return q == 0; }))
      c.pop_back();
  }
  friend LPoly operator+(LPoly a, const LPoly& b) {
    if (b.c.size() > a.c.size()) a.c.resize(b.c.size(), Vec(static_cast<size_t>(a.base->degree)));
    for (size_t i = 0; i < b.c.size(); ++i)
      for (size_t t = 0; t < b.c[i].size(); ++t) a.c[i][t] += b.c[i][t];
    a.trim();
    return a;
  }
  friend LPoly operator-(LPoly a, const LPoly& b) {
    if (b.c.size() > a.c.size()) a.c.resize(b.c.size(), Vec(static_cast<size_t>(a.base->degree)));
    for (size_t i = 0; i < b.c.size(); ++i)
      for (size_t t = 0; t < b.c[i].size(); ++t) a.c[i][t] -= b.c[i][t];
    a.trim();
    return a;
  }
  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly r{a.base, {}};
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Vec(static_cast<size_t>(a.base->degree)));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) {
        Vec p = a.base->mul(a.c[i], b.c[j]);
        for (size_t t = 0; t < p.size(); ++t) r.c[i + j][t] += p[t];
      }
    r.trim();
    return r;
  }
};

DataPtr add_layer(const DataPtr& below, const LayerSpec& spec, bool verify) {
  if (spec.var.empty() || spec.var == "x") fail(ErrorCode::InvalidArgument, "layer variable must be a name other than 'x'");
  if (std::find(below->names.begin(), below->names.end(), spec.var) != below->names.end())
    fail(ErrorCode::InvalidArgument, "duplicate generator name '" + spec.var + "'");
  Expr e = parse_expr(spec.minpoly);
  const size_t D0 = static_cast<size_t>(below->degree);
  LPoly p = eval_in<LPoly>(
      e,
      [&](const std::string& name) -> LPoly {
        if (name == "x") {
          Vec one(D0);
          one[0] = 1;
          return LPoly{below.get(), {Vec(D0), one}};
        }
        auto it = std::find(below->names.begin(), below->names.end(), name);
        if (it == below->names.end())
          fail(ErrorCode::ParseError, "unknown name '" + name + "' in minpoly of layer '" + spec.var + "'");
        LPoly r{below.get(), {below->gen(static_cast<size_t>(it - below->names.begin()))}};
        r.trim();
        return r;
      },
      [&](const mpq_class& q) {
        Vec v(D0);
        v[0] = q;
        LPoly r{below.get(), {v}};
        r.trim();
        return r;
      });
  int d = static_cast<int>(p.c.size()) - 1;
  if (d < 1) fail(ErrorCode::InvalidArgument, "minpoly of layer '" + spec.var + "' must have degree >= 1");
  Vec one(D0);
  one[0] = 1;
  if (p.c.back() != one) fail(ErrorCode::InvalidArgument, "minpoly of layer '" + spec.var + "' must be monic");
  if (verify && static_cast<long>(below->degree) * d > kMaxFieldDegree)
    fail(ErrorCode::DegreeOverLimit, "absolute degree " + std::to_string(below->degree * d) + " exceeds " +
                                         std::to_string(kMaxFieldDegree));

  auto data = std::make_shared<NumberFieldTower::Data>();
  data->below = below;
  data->layer.var = spec.var;
  data->layer.minpoly_text = spec.minpoly;
  data->layer.degree = d;
  data->layer.coeffs = p.c;
  data->degree = below->degree * d;
  data->depth = below->depth + 1;
  data->names = below->names;
  data->names.push_back(spec.var);
  const size_t n = static_cast<size_t>(data->degree);

  // Primitive element theta = sum c_j g_j with c = (a^{L-1}, ..., a, 1).
  const size_t L = data->depth;
  for (long a = 1; a <= 64; ++a) {
    std::vector<long> c(L);
    long pw = 1;
    for (size_t j = L; j-- > 0;) {
      c[j] = pw;
      pw *= a;
    }
    Vec theta(n);
    for (size_t j = 0; j < L; ++j) {
      Vec g = data->gen(j);
      for (size_t t = 0; t < n; ++t) theta[t] += c[j] * g[t];
    }
    QMatrix T(n, n);
    Vec pw_v = data->unit(0);
    for (size_t k = 0; k < n; ++k) {
      T.set_column(k, pw_v);
      pw_v = data->mul(pw_v, theta);
    }
    // multiplication matrix of theta
    QMatrix M(n, n);
    for (size_t k = 0; k < n; ++k) M.set_column(k, data->mul(data->unit(k), theta));
    QPoly f = charpoly(M);
    if (!is_squarefree(f)) continue;
    if (verify && !is_irreducible_over_q(f))
      fail(ErrorCode::ReducibleLayer, "layer '" + spec.var + "': " + spec.minpoly + " is reducible over the field below");
    auto inv = inverse(T);
    if (!inv) continue;
    data->theta_coeffs = c;
    data->minpoly = f;
    data->T = std::move(T);
    data->Tinv = std::move(*inv);
    return data;
  }
  fail(ErrorCode::ReducibleLayer, "layer '" + spec.var + "': " + spec.minpoly + " does not give a field (repeated factor)");
}

std::string fmt_coeff_term(const mpq_class& c, const std::string& mono, bool first) {
  std::string s;
  mpq_class a = abs(c);
  if (first)
    s += (c < 0 ? "-" : "");
  else
    s += (c < 0 ? " - " : " + ");
  if (mono.empty())
    s += a.get_str();
  else if (a == 1)
    s += mono;
  else
    s += a.get_str() + "*" + mono;
  return s;
}

}  // namespace

NumberFieldTower::NumberFieldTower() : d_(rationals_data()) {}

NumberFieldTower NumberFieldTower::build(const std::vector<LayerSpec>& layers) {
  DataPtr cur = rationals_data();
  for (const auto& spec : layers) cur = add_layer(cur, spec, true);
  return NumberFieldTower(cur);
}

NumberFieldTower NumberFieldTower::simple(const std::string& var, const QPoly& f) {
  if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "field polynomial must be nonconstant");
  return NumberFieldTower(add_layer(rationals_data(), LayerSpec{var, f.monic().str("x")}, false));
}

NumberFieldTower NumberFieldTower::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("field JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("layers") || !j["layers"].is_array())
    fail(ErrorCode::ParseError, "field JSON needs a \"layers\" array");
  std::vector<LayerSpec> specs;
  for (const auto& l : j["layers"]) {
    if (!l.is_object() || !l.contains("var") || !l.contains("minpoly") || !l["var"].is_string() ||
        !l["minpoly"].is_string())
      fail(ErrorCode::ParseError, "each layer needs string fields \"var\" and \"minpoly\"");
    specs.push_back({l["var"].get<std::string>(), l["minpoly"].get<std::string>()});
  }
  return build(specs);
}

std::string NumberFieldTower::to_json() const {
  nlohmann::json j;
  j["layers"] = nlohmann::json::array();
  for (size_t k = 0; k < layer_count(); ++k)
    j["layers"].push_back({{"var", layer(k).var}, {"minpoly", layer(k).minpoly_text}});
  return j.dump();
}

int NumberFieldTower::degree() const { return d_->degree; }
size_t NumberFieldTower::layer_count() const { return d_->depth; }

const NumberFieldTower::Layer& NumberFieldTower::layer(size_t k) const {
  if (k >= d_->depth) fail(ErrorCode::InvalidArgument, "layer index out of range");
  const Data* lvl = d_.get();
  while (lvl->depth > k + 1) lvl = lvl->below.get();
  return lvl->layer;
}

NumberFieldTower NumberFieldTower::prefix(size_t k) const {
  if (k > d_->depth) fail(ErrorCode::InvalidArgument, "prefix length out of range");
  DataPtr lvl = d_;
  while (lvl->depth > k) lvl = lvl->below;
  return NumberFieldTower(lvl);
}

const QPoly& NumberFieldTower::absolute_minpoly() const { return d_->minpoly; }
const std::vector<long>& NumberFieldTower::primitive_coeffs() const { return d_->theta_coeffs; }

FieldElement NumberFieldTower::zero() const { return FieldElement(*this, Vec(static_cast<size_t>(degree()))); }
FieldElement NumberFieldTower::one() const { return rational(1); }
FieldElement NumberFieldTower::rational(const mpq_class& q) const {
  Vec v(static_cast<size_t>(degree()));
  v[0] = q;
  return FieldElement(*this, std::move(v));
}
FieldElement NumberFieldTower::gen(size_t k) const {
  if (k >= layer_count()) fail(ErrorCode::InvalidArgument, "generator index out of range");
  return FieldElement(*this, d_->gen(k));
}
FieldElement NumberFieldTower::primitive() const {
  FieldElement t = zero();
  for (size_t j = 0; j < layer_count(); ++j) t += gen(j) * mpq_class(d_->theta_coeffs[j]);
  return t;
}
FieldElement NumberFieldTower::element(Vec coords) const {
  if (coords.size() != static_cast<size_t>(degree())) fail(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  return FieldElement(*this, std::move(coords));
}

FieldElement NumberFieldTower::parse_element(const std::string& text) const {
  Expr e = parse_expr(text);
  return eval_in<FieldElement>(
      e,
      [&](const std::string& name) -> FieldElement {
        auto it = std::find(d_->names.begin(), d_->names.end(), name);
        if (it == d_->names.end()) fail(ErrorCode::ParseError, "unknown generator '" + name + "'");
        return gen(static_cast<size_t>(it - d_->names.begin()));
      },
      [&](const mpq_class& q) { return rational(q); });
}

FieldElement NumberFieldTower::from_power_basis(const QPoly& p0) const {
  QPoly p = p0 % d_->minpoly;
  Vec c(static_cast<size_t>(degree()));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(i)] = p[i];
  return FieldElement(*this, d_->T.apply(c));
}

QPoly NumberFieldTower::to_power_basis(const FieldElement& x) const {
  if (!x.field().same_as(*this)) fail(ErrorCode::InvalidArgument, "element belongs to a different field");
  return QPoly(d_->Tinv.apply(x.coords()));
}

// ---- FieldElement ----

FieldElement::FieldElement(NumberFieldTower field, Vec coords) : f_(std::move(field)), c_(std::move(coords)) {
  for (auto& q : c_) q.canonicalize();
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!f_.same_as(o.f_)) fail(ErrorCode::InvalidArgument, "field elements from different fields");
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}
bool FieldElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& q) { return q == 0; });
}
mpq_class FieldElement::to_rational() const {
  if (!is_rational()) fail(ErrorCode::InvalidArgument, "element is not rational");
  return c_[0];
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}
FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}
FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  c_ = f_.d_->mul(c_, o.c_);
  return *this;
}
FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}
FieldElement operator*(FieldElement a, const mpq_class& s) {
  for (auto& q : a.c_) q *= s;
  return a;
}
bool operator==(const FieldElement& a, const FieldElement& b) { return a.f_.same_as(b.f_) && a.c_ == b.c_; }

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "inverse of zero");
  const QPoly& f = f_.absolute_minpoly();
  auto [g, s] = half_xgcd(f_.to_power_basis(*this), f);
  if (g.degree() != 0) fail(ErrorCode::Internal, "element not invertible");
  return f_.from_power_basis(s);
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = f_.one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

QMatrix FieldElement::mult_matrix() const {
  const size_t n = c_.size();
  QMatrix M(n, n);
  for (size_t k = 0; k < n; ++k) M.set_column(k, f_.d_->mul(f_.d_->unit(k), c_));
  return M;
}

mpq_class FieldElement::trace() const {
  QMatrix M = mult_matrix();
  mpq_class t = 0;
  for (size_t i = 0; i < M.rows(); ++i) t += M(i, i);
  return t;
}
mpq_class FieldElement::norm() const { return det(mult_matrix()); }
QPoly FieldElement::charpoly() const { return hecke::charpoly(mult_matrix()); }
QPoly FieldElement::minpoly() const { return squarefree_part(charpoly()); }

Complex FieldElement::eval(const EmbeddingSet& emb, size_t i) const {
  return f_.to_power_basis(*this).eval(emb.theta.at(i));
}

std::string FieldElement::str() const {
  std::string out;
  bool first = true;
  const size_t L = f_.layer_count();
  std::vector<int> degs(L);
  for (size_t k = 0; k < L; ++k) degs[k] = f_.layer(k).degree;
  for (size_t idx = 0; idx < c_.size(); ++idx) {
    if (c_[idx] == 0) continue;
    std::string mono;
    size_t rest = idx;
    for (size_t k = 0; k < L; ++k) {
      size_t b = rest % static_cast<size_t>(degs[k]);
      rest /= static_cast<size_t>(degs[k]);
      if (b == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += f_.layer(k).var;
      if (b > 1) mono += "^" + std::to_string(b);
    }
    out += fmt_coeff_term(c_[idx], mono, first);
    first = false;
  }
  return first ? "0" : out;
}

// ---- relative operations ----

FieldElement embed_prefix(const NumberFieldTower& F, const FieldElement& x) {
  Vec v = x.coords();
  if (v.size() > static_cast<size_t>(F.degree()) || F.degree() % static_cast<int>(v.size()) != 0)
    fail(ErrorCode::InvalidArgument, "element does not come from a sub-tower");
  v.resize(static_cast<size_t>(F.degree()));
  return F.element(std::move(v));
}

namespace {

// Matrix over K = prefix(k) of multiplication by x on the basis of F over K.
std::vector<std::vector<FieldElement>> relative_matrix(const FieldElement& x, size_t k) {
  const NumberFieldTower& F = x.field();
  NumberFieldTower K = F.prefix(k);
  const size_t DK = static_cast<size_t>(K.degree());
  const size_t m = static_cast<size_t>(F.degree()) / DK;
  std::vector<std::vector<FieldElement>> M(m, std::vector<FieldElement>(m, K.zero()));
  for (size_t j = 0; j < m; ++j) {
    Vec e(static_cast<size_t>(F.degree()));
    e[DK * j] = 1;
    FieldElement y = x * F.element(e);
    for (size_t i = 0; i < m; ++i)
      M[i][j] = K.element(Vec(y.coords().begin() + static_cast<long>(DK * i),
                              y.coords().begin() + static_cast<long>(DK * (i + 1))));
  }
  return M;
}

}  // namespace

FieldElement relative_trace(const FieldElement& x, size_t k) {
  auto M = relative_matrix(x, k);
  FieldElement t = M[0][0];
  for (size_t i = 1; i < M.size(); ++i) t += M[i][i];
  return t;
}

FieldElement relative_norm(const FieldElement& x, size_t k) { return det_over(relative_matrix(x, k)); }

FieldElement det_over(const std::vector<std::vector<FieldElement>> & m0) {
  auto m = m0;
  const size_t n = m.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty matrix");
  FieldElement d = m[0][0].field().one();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return m[0][0].field().zero();
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    FieldElement inv = m[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      FieldElement f = m[r][c] * inv;
      for (size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

std::vector<FieldElement> tower_basis(const NumberFieldTower& F, size_t k) {
  NumberFieldTower K = F.prefix(k);
  const size_t DK = static_cast<size_t>(K.degree());
  const size_t m = static_cast<size_t>(F.degree()) / DK;
  std::vector<FieldElement> out;
  for (size_t j = 0; j < m; ++j) {
    Vec e(static_cast<size_t>(F.degree()));
    e[DK * j] = 1;
    out.push_back(F.element(e));
  }
  return out;
}

FieldElement rel_discriminant(const NumberFieldTower& F, size_t k, const std::vector<FieldElement>& basis) {
  NumberFieldTower K = F.prefix(k);
  const size_t m = static_cast<size_t>(F.degree() / K.degree());
  if (basis.size() != m)
    fail(ErrorCode::NotABasis, "expected " + std::to_string(m) + " basis elements, got " + std::to_string(basis.size()));
  for (const auto& w : basis)
    if (!w.field().same_as(F)) fail(ErrorCode::InvalidArgument, "basis element from a different field");
  std::vector<std::vector<FieldElement>> G(m, std::vector<FieldElement>(m, K.zero()));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      G[i][j] = relative_trace(basis[i] * basis[j], k);
      G[j][i] = G[i][j];
    }
  FieldElement d = det_over(G);
  if (d.is_zero()) fail(ErrorCode::NotABasis, "elements are linearly dependent over the base field");
  return d;
}

mpq_class abs_discriminant_tower(const NumberFieldTower& F, size_t k, const std::vector<FieldElement>& basis_FK,
                                 const std::vector<FieldElement>& basis_K) {
  NumberFieldTower K = F.prefix(k);
  FieldElement dFK = rel_discriminant(F, k, basis_FK);
  mpq_class dK = rel_discriminant(K, 0, basis_K).to_rational();
  long m = F.degree() / K.degree();
  mpq_class p = 1;
  for (long i = 0; i < m; ++i) p *= dK;
  return p * dFK.norm();
}

// ---- embeddings ----

EmbeddingSet embeddings(const NumberFieldTower& F, unsigned bits) {
  if (bits < 64) fail(ErrorCode::InvalidArgument, "embedding precision must be at least 64 bits");
  RootSet rs = polynomial_roots(F.absolute_minpoly(), bits);
  const unsigned b = rs.bits;
  Real tol = exp2i(-static_cast<long>(b / 2), b);
  std::vector<size_t> reals, reps;
  const size_t n = rs.roots.size();
  std::vector<size_t> conj_raw(n);
  for (size_t i = 0; i < n; ++i) {
    Real dist(b);
    conj_raw[i] = nearest(rs.roots, rs.roots[i].conj(), &dist);
    if (!(dist < rs.separation)) fail(ErrorCode::PrecisionExhausted, "conjugate embedding not isolated");
    if (conj_raw[i] == i)
      reals.push_back(i);
    else if (rs.roots[i].im.sign() > 0)
      reps.push_back(i);
  }
  auto less_re_im = [&](size_t a, size_t c) {
    Real dr = rs.roots[a].re - rs.roots[c].re;
    if (abs(dr) > tol) return dr.sign() < 0;
    return rs.roots[a].im < rs.roots[c].im;
  };
  std::sort(reals.begin(), reals.end(), less_re_im);
  std::sort(reps.begin(), reps.end(), less_re_im);
  std::vector<size_t> order;
  for (size_t i : reals) order.push_back(i);
  for (size_t i : reps) {
    order.push_back(i);
    order.push_back(conj_raw[i]);
  }
  if (order.size() != n) fail(ErrorCode::PrecisionExhausted, "conjugation pairing is not an involution");

  EmbeddingSet E;
  E.bits = b;
  E.separation = rs.separation;
  E.r1 = static_cast<int>(reals.size());
  E.r2 = static_cast<int>(reps.size());
  std::vector<size_t> pos(n);
  for (size_t k = 0; k < n; ++k) pos[order[k]] = k;
  std::vector<QPoly> genpolys;
  for (size_t k = 0; k < F.layer_count(); ++k) genpolys.push_back(F.to_power_basis(F.gen(k)));
  for (size_t k = 0; k < n; ++k) {
    const Complex& a = rs.roots[order[k]];
    E.theta.push_back(a);
    std::vector<Complex> g;
    for (const auto& gp : genpolys) g.push_back(gp.eval(a));
    E.gens.push_back(std::move(g));
    E.conj.push_back(pos[conj_raw[order[k]]]);
  }
  E.place_of.resize(n);
  for (size_t k = 0; k < reals.size(); ++k) {
    E.places.push_back(Place{true, k, k});
    E.place_of[k] = k;
  }
  for (size_t k = reals.size(); k < n; k += 2) {
    E.place_of[k] = E.places.size();
    E.place_of[k + 1] = E.places.size();
    E.places.push_back(Place{false, k, k + 1});
  }
  return E;
}

}  // namespace hecke
