#include "hecke/qi.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <thread>

#include <json.hpp>

#include "hecke/error.hpp"

namespace hecke {

namespace {

using i128 = __int128;

i128 mul_ck(i128 x, i128 y) {
  i128 r;
  if (__builtin_mul_overflow(x, y, &r)) fail(ErrorCode::CoefficientOverflow, "exact coefficient exceeds 127 bits");
  return r;
}

i128 add_ck(i128 x, i128 y) {
  i128 r;
  if (__builtin_add_overflow(x, y, &r)) fail(ErrorCode::CoefficientOverflow, "exact coefficient exceeds 127 bits");
  return r;
}

i128 floor_div(i128 x, i128 y) {
  i128 q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

i128 mod_pos(i128 x, i128 m) {
  i128 r = x % m;
  return r < 0 ? r + m : r;
}

std::string i128_str(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Square root of a quadratic residue modulo an odd prime.
u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = static_cast<u64>(s), c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

std::vector<uint32_t> spf_sieve(long X) {
  std::vector<uint32_t> spf(static_cast<size_t>(X) + 1, 0);
  std::vector<uint32_t> primes;
  for (long i = 2; i <= X; ++i) {
    if (spf[static_cast<size_t>(i)] == 0) {
      spf[static_cast<size_t>(i)] = static_cast<uint32_t>(i);
      primes.push_back(static_cast<uint32_t>(i));
    }
    for (uint32_t p : primes) {
      long ip = i * static_cast<long>(p);
      if (p > spf[static_cast<size_t>(i)] || ip > X) break;
      spf[static_cast<size_t>(ip)] = p;
    }
  }
  return spf;
}

QuadField make_field(CatalogField id) {
  switch (id) {
    case CatalogField::GaussianI:
      return {id, "Q(i)", "i", "x^2 + 1", 0, 1, -4, {0, 1}, 4};
    case CatalogField::Eisenstein:
      return {id, "Q(w)", "w", "x^2 + x + 1", -1, 1, -3, {0, -1}, 6};
    case CatalogField::SqrtMinus2:
      return {id, "Q(sqrt(-2))", "s", "x^2 + 2", 0, 2, -8, {-1, 0}, 2};
  }
  fail(ErrorCode::InvalidArgument, "unknown catalog field");
}

}  // namespace

QElem QuadField::mul(const QElem& x, const QElem& y) const {
  i128 bd = mul_ck(x.b, y.b);
  i128 a = add_ck(mul_ck(x.a, y.a), -mul_ck(n, bd));
  i128 b = add_ck(add_ck(mul_ck(x.a, y.b), mul_ck(x.b, y.a)), mul_ck(t, bd));
  return {a, b};
}

QElem QuadField::add(const QElem& x, const QElem& y) const { return {add_ck(x.a, y.a), add_ck(x.b, y.b)}; }

QElem QuadField::conj(const QElem& x) const { return {add_ck(x.a, mul_ck(x.b, t)), -x.b}; }

QElem QuadField::pow(QElem x, unsigned long e) const {
  QElem r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    e >>= 1;
    if (e) x = mul(x, x);
  }
  return r;
}

i128 QuadField::norm(const QElem& x) const {
  return add_ck(add_ck(mul_ck(x.a, x.a), mul_ck(t, mul_ck(x.a, x.b))), mul_ck(n, mul_ck(x.b, x.b)));
}

std::optional<QElem> QuadField::div_exact(const QElem& x, const QElem& y) const {
  if (y.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  QElem u = mul(x, conj(y));
  i128 N = norm(y);
  if (u.a % N != 0 || u.b % N != 0) return std::nullopt;
  return QElem{u.a / N, u.b / N};
}

QElem QuadField::div_round(const QElem& x, const QElem& y) const {
  QElem u = mul(x, conj(y));
  i128 N = norm(y);
  return {floor_div(2 * u.a + N, 2 * N), floor_div(2 * u.b + N, 2 * N)};
}

QElem QuadField::gcd(QElem x, QElem y) const {
  while (!y.is_zero()) {
    QElem q = div_round(x, y);
    QElem qy = mul(q, y);
    QElem r{x.a - qy.a, x.b - qy.b};
    x = y;
    y = r;
  }
  return x;
}

QElem QuadField::normalize(const QElem& x) const {
  if (x.is_zero()) return x;
  auto ok = [&](const QElem& z) {
    switch (id) {
      case CatalogField::GaussianI:
        return z.a > 0 && -z.a < z.b && z.b <= z.a;
      case CatalogField::Eisenstein:
        return 2 * z.a - z.b > 0 && 2 * z.b <= z.a && z.b > -z.a;
      case CatalogField::SqrtMinus2:
        return z.a > 0 || (z.a == 0 && z.b > 0);
    }
    return false;
  };
  QElem z = x;
  for (int j = 0; j < unit_order; ++j) {
    if (ok(z)) return z;
    z = mul(z, unit_gen);
  }
  fail(ErrorCode::Internal, "no normalized associate");
}

QElem QuadField::parse(const std::string& text) const {
  FieldElement e = tower().parse_element(text);
  QElem r;
  i128* dst[2] = {&r.a, &r.b};
  for (size_t i = 0; i < 2; ++i) {
    const mpq_class& c = e.coords()[i];
    if (c.get_den() != 1) fail(ErrorCode::InvalidArgument, "'" + text + "' is not an algebraic integer");
    if (!c.get_num().fits_slong_p()) fail(ErrorCode::CoefficientOverflow, "'" + text + "' is too large");
    *dst[i] = c.get_num().get_si();
  }
  return r;
}

std::string QuadField::str(const QElem& x) const {
  if (x.b == 0) return i128_str(x.a);
  std::string g = x.b == 1 ? var : x.b == -1 ? "-" + var : i128_str(x.b) + "*" + var;
  if (x.a == 0) return g;
  if (x.b < 0) return i128_str(x.a) + " - " + g.substr(1);
  return i128_str(x.a) + " + " + g;
}

Complex QuadField::value(const QElem& x, unsigned bits) const {
  // theta = (t + sqrt(disc)) / 2 with the positive imaginary square root
  Real half(mpq_class(1, 2), bits);
  Real re = Real(static_cast<long>(t), bits) * half;
  Real im = sqrt(Real(static_cast<long>(-disc), bits)) * half;
  Real a(mpz_class(i128_str(x.a)), bits), b(mpz_class(i128_str(x.b)), bits);
  return {a + b * re, b * im};
}

NumberFieldTower QuadField::tower() const {
  return NumberFieldTower::simple(var, QPoly(std::vector<mpq_class>{mpq_class(n), mpq_class(-t), 1}));
}

const QuadField& catalog_field(CatalogField id) {
  static const QuadField fields[3] = {make_field(CatalogField::GaussianI), make_field(CatalogField::Eisenstein),
                                      make_field(CatalogField::SqrtMinus2)};
  return fields[static_cast<int>(id)];
}

const QuadField& catalog_field(const std::string& name) {
  static const std::map<std::string, CatalogField> names = {
      {"Q(i)", CatalogField::GaussianI},          {"Q(sqrt(-1))", CatalogField::GaussianI},
      {"Q(w)", CatalogField::Eisenstein},         {"Q(omega)", CatalogField::Eisenstein},
      {"Q(sqrt(-3))", CatalogField::Eisenstein},  {"Q(sqrt(-2))", CatalogField::SqrtMinus2}};
  auto it = names.find(name);
  if (it == names.end()) fail(ErrorCode::InvalidArgument, "field '" + name + "' is not in the catalog");
  return catalog_field(it->second);
}

const char* to_string(PrimeIdeal::Kind k) {
  switch (k) {
    case PrimeIdeal::Kind::Split: return "split";
    case PrimeIdeal::Kind::Inert: return "inert";
    case PrimeIdeal::Kind::Ramified: return "ramified";
  }
  return "";
}

std::vector<PrimeIdeal> primes_above(const QuadField& F, long p) {
  std::vector<PrimeIdeal> out;
  auto root_ideal = [&](long r, PrimeIdeal::Kind kind) {
    PrimeIdeal P;
    P.generator = F.normalize(F.gcd({p, 0}, {-r, 1}));
    P.norm = p;
    P.kind = kind;
    P.p = p;
    P.root = r;
    return P;
  };
  if ((-F.disc) % p == 0) {
    for (long r = 0; r < p; ++r)
      if (((r * r - F.t * r + F.n) % p + p) % p == 0) {
        out.push_back(root_ideal(r, PrimeIdeal::Kind::Ramified));
        break;
      }
    return out;
  }
  bool split;
  if (p == 2) {
    long d8 = ((F.disc % 8) + 8) % 8;
    split = (d8 == 1 || d8 == 7);
  } else {
    u64 d = static_cast<u64>(((F.disc % p) + p) % p);
    split = powmod(d, static_cast<u64>(p - 1) / 2, static_cast<u64>(p)) == 1;
  }
  if (!split) {
    PrimeIdeal P;
    P.generator = {p, 0};
    P.norm = p * p;
    P.kind = PrimeIdeal::Kind::Inert;
    P.p = p;
    out.push_back(P);
    return out;
  }
  long r1, r2;
  if (p == 2) {
    r1 = 0;
    while (((r1 * r1 - F.t * r1 + F.n) % 2 + 2) % 2 != 0) ++r1;
    r2 = ((F.t - r1) % 2 + 2) % 2;
  } else {
    u64 s = sqrt_mod(static_cast<u64>(((F.disc % p) + p) % p), static_cast<u64>(p));
    u64 inv2 = static_cast<u64>((p + 1) / 2);
    u64 tp = static_cast<u64>(((F.t % p) + p) % p);
    r1 = static_cast<long>(mulmod((tp + s) % static_cast<u64>(p), inv2, static_cast<u64>(p)));
    r2 = static_cast<long>(mulmod((tp + static_cast<u64>(p) - s) % static_cast<u64>(p), inv2, static_cast<u64>(p)));
  }
  PrimeIdeal A = root_ideal(r1, PrimeIdeal::Kind::Split);
  PrimeIdeal B = root_ideal(r2, PrimeIdeal::Kind::Split);
  if (F.norm(A.generator) != p || F.norm(B.generator) != p) fail(ErrorCode::Internal, "split prime generator has wrong norm");
  if (A.generator.b < B.generator.b) std::swap(A, B);
  out.push_back(A);
  out.push_back(B);
  return out;
}

std::vector<PrimeIdeal> primes_up_to(const QuadField& F, long X) {
  std::vector<PrimeIdeal> out;
  if (X < 2) return out;
  std::vector<bool> comp(static_cast<size_t>(X) + 1, false);
  for (long p = 2; p <= X; ++p) {
    if (comp[static_cast<size_t>(p)]) continue;
    for (long q = p * p; q <= X; q += p) comp[static_cast<size_t>(q)] = true;
    for (auto& P : primes_above(F, p))
      if (P.norm <= X) out.push_back(P);
  }
  std::stable_sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.norm < b.norm; });
  return out;
}

FiniteTwist::FiniteTwist(const QuadField& F, QElem modulus, const std::vector<std::pair<QElem, QElem>>& table)
    : F_(&F), m_(modulus), gens_(table) {
  if (modulus.is_zero()) fail(ErrorCode::InvalidArgument, "twist modulus must be nonzero");
  i128 N = F.norm(modulus);
  if (N > 4096) fail(ErrorCode::InvalidArgument, "twist modulus norm above 4096 is not supported");
  // lattice m*O spanned by m and m*theta in (a, b) coordinates
  QElem g1 = modulus, g2 = F.mul(modulus, {0, 1});
  i128 x = g1.b, y = g2.b, u0 = 1, v0 = 0, u1 = 0, v1 = 1;
  while (y != 0) {
    i128 q = floor_div(x, y);
    i128 r = x - q * y;
    x = y;
    y = r;
    i128 tu = u0 - q * u1, tv = v0 - q * v1;
    u0 = u1;
    v0 = v1;
    u1 = tu;
    v1 = tv;
  }
  if (x < 0) {
    x = -x;
    u0 = -u0;
    v0 = -v0;
  }
  C_ = x;
  B_ = u0 * g1.a + v0 * g2.a;
  A_ = N / C_;
  B_ = mod_pos(B_, A_);
  size_ = static_cast<size_t>(N);
  values_.assign(size_, std::nullopt);

  std::vector<QElem> units;
  for (i128 b = 0; b < C_; ++b)
    for (i128 a = 0; a < A_; ++a) {
      QElem e{a, b};
      if (F.norm(F.gcd(modulus, e.is_zero() ? modulus : e)) == 1) units.push_back(e);
    }
  for (auto& [g, v] : gens_)
    if (!F.is_unit(v)) fail(ErrorCode::InvalidArgument, "twist value " + F.str(v) + " is not a root of unity in " + F.name);

  values_[index(F.one())] = F.one();
  std::vector<QElem> frontier{F.one()};
  while (!frontier.empty()) {
    std::vector<QElem> next;
    for (const QElem& e : frontier) {
      QElem ve = *values_[index(e)];
      for (auto& [g, v] : gens_) {
        QElem prod = F.mul(e, g);
        size_t idx = index(prod);
        QElem val = F.mul(ve, v);
        if (!values_[idx]) {
          values_[idx] = val;
          QElem red{static_cast<i128>(idx % static_cast<size_t>(A_)), static_cast<i128>(idx / static_cast<size_t>(A_))};
          next.push_back(red);
        } else if (!(*values_[idx] == val)) {
          fail(ErrorCode::InvalidArgument, "twist table is not a character of (O/m)^x");
        }
      }
    }
    frontier = std::move(next);
  }
  for (const QElem& e : units)
    if (!values_[index(e)]) fail(ErrorCode::InvalidArgument, "twist table generators do not generate (O/m)^x");
  for (const QElem& e : units)
    for (const QElem& f : units)
      if (!(*values_[index(F.mul(e, f))] == F.mul(*values_[index(e)], *values_[index(f)])))
        fail(ErrorCode::InvalidArgument, "twist table is not multiplicative");
}

size_t FiniteTwist::index(const QElem& x) const {
  i128 q = floor_div(x.b, C_);
  i128 a = mod_pos(x.a - q * B_, A_);
  i128 b = x.b - q * C_;
  return static_cast<size_t>(a + A_ * b);
}

std::optional<QElem> FiniteTwist::value(const QElem& x) const {
  if (size_ == 0) return QElem{1, 0};
  return values_[index(x)];
}

void HeckeCharacterSpec::validate() const {
  const QuadField& f = F();
  if (k < 0) fail(ErrorCode::InvalidArgument, "algebraic exponent must be nonnegative");
  if (quad_d && quad_d->is_zero()) fail(ErrorCode::InvalidArgument, "quadratic twist datum must be nonzero");
  if (base_change && !quad_d) fail(ErrorCode::InvalidArgument, "base change needs a quadratic datum");
  QElem u = f.pow(f.unit_gen, static_cast<unsigned long>(k));
  QElem tv = *twist.value(f.unit_gen);
  if (!(f.mul(u, tv) == f.one()))
    fail(ErrorCode::UnitIncompatible, "unit " + f.str(f.unit_gen) + " maps to " + f.str(f.mul(u, tv)) + ", not 1");
}

HeckeCharacterSpec HeckeCharacterSpec::untwisted() const {
  HeckeCharacterSpec s = *this;
  s.quad_d.reset();
  s.base_change = false;
  return s;
}

HeckeCharacterSpec HeckeCharacterSpec::twisted() const {
  HeckeCharacterSpec s = *this;
  s.base_change = false;
  return s;
}

HeckeCharacterSpec make_character(CatalogField f, long k, std::optional<QElem> quad_d, long tate) {
  HeckeCharacterSpec s;
  s.field = f;
  s.k = k;
  s.quad_d = quad_d;
  s.tate = tate;
  s.validate();
  return s;
}

HeckeCharacterSpec HeckeCharacterSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("character spec: ") + e.what());
  }
  try {
    HeckeCharacterSpec s;
    const QuadField& F = catalog_field(j.value("field", std::string("Q(i)")));
    s.field = F.id;
    s.k = j.value("k", 0L);
    s.tate = j.value("tate", 0L);
    s.base_change = j.value("base_change", false);
    if (j.contains("quad_d") && !j["quad_d"].is_null()) s.quad_d = F.parse(j["quad_d"].get<std::string>());
    bool has_mod = j.contains("twist_modulus") && !j["twist_modulus"].is_null();
    bool has_tab = j.contains("twist_table") && !j["twist_table"].is_null();
    if (has_mod != has_tab) fail(ErrorCode::InvalidArgument, "twist_modulus and twist_table go together");
    if (has_mod) {
      std::vector<std::pair<QElem, QElem>> table;
      for (const auto& row : j["twist_table"]) {
        if (!row.is_array() || row.size() != 2) fail(ErrorCode::ParseError, "twist_table rows are [residue, value]");
        table.emplace_back(F.parse(row[0].get<std::string>()), F.parse(row[1].get<std::string>()));
      }
      s.twist = FiniteTwist(F, F.parse(j["twist_modulus"].get<std::string>()), table);
    }
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("character spec: ") + e.what());
  }
}

std::string HeckeCharacterSpec::to_json() const {
  const QuadField& f = F();
  nlohmann::json j;
  j["field"] = f.name;
  j["k"] = k;
  if (twist.trivial()) {
    j["twist_modulus"] = nullptr;
    j["twist_table"] = nullptr;
  } else {
    j["twist_modulus"] = f.str(twist.modulus());
    auto rows = nlohmann::json::array();
    for (auto& [g, v] : twist.table()) rows.push_back({f.str(g), f.str(v)});
    j["twist_table"] = rows;
  }
  j["quad_d"] = quad_d ? nlohmann::json(f.str(*quad_d)) : nlohmann::json(nullptr);
  j["tate"] = tate;
  j["base_change"] = base_change;
  return j.dump();
}

int quad_char(const QuadField& F, const QElem& d, const PrimeIdeal& P, bool strict) {
  if (P.norm % 2 == 0) {
    if (strict) fail(ErrorCode::EvenPrimeUnsupported, "quadratic symbol at an even prime");
    return 0;
  }
  const i128 p = P.p;
  if (P.kind != PrimeIdeal::Kind::Inert) {
    u64 r = static_cast<u64>(mod_pos(d.a + mod_pos(d.b, p) * P.root, p));
    if (r == 0) return 0;
    u64 e = powmod(r, static_cast<u64>(p - 1) / 2, static_cast<u64>(p));
    return e == 1 ? 1 : -1;
  }
  // F_{p^2} = F_p[theta]/(theta^2 - t theta + n)
  auto mul = [&](std::pair<i128, i128> x, std::pair<i128, i128> y) {
    i128 bd = x.second * y.second % p;
    return std::pair<i128, i128>{mod_pos(x.first * y.first - F.n * bd, p),
                                 mod_pos(x.first * y.second + x.second * y.first + F.t * bd, p)};
  };
  std::pair<i128, i128> base{mod_pos(d.a, p), mod_pos(d.b, p)};
  if (base.first == 0 && base.second == 0) return 0;
  std::pair<i128, i128> r{1, 0};
  u64 e = static_cast<u64>((p * p - 1) / 2);
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  if (r.second != 0 || (r.first != 1 && r.first != p - 1)) fail(ErrorCode::Internal, "Euler criterion did not return +-1");
  return r.first == 1 ? 1 : -1;
}

QElem char_value(const HeckeCharacterSpec& chi, const PrimeIdeal& P) {
  const QuadField& F = chi.F();
  auto tv = chi.twist.value(P.generator);
  if (!tv) return {0, 0};
  QElem v = F.mul(F.pow(P.generator, static_cast<unsigned long>(chi.k)), *tv);
  if (chi.quad_d) {
    int q = quad_char(F, *chi.quad_d, P);
    if (q == 0) return {0, 0};
    if (q < 0) v = {-v.a, -v.b};
  }
  return v;
}

Complex CoefficientStream::value(long n, unsigned bits) const {
  Complex z = catalog_field(field).value(a[static_cast<size_t>(n)], bits);
  if (tate != 0) {
    Real f = pow_si(Real(n, bits), -tate);
    z = z * f;
  }
  return z;
}

namespace {

template <class Fn>
void run_parallel(unsigned workers, long lo, long hi, Fn fn) {
  if (workers <= 1 || hi - lo < 4096) {
    fn(lo, hi);
    return;
  }
  std::vector<std::thread> ts;
  std::vector<std::exception_ptr> errs(workers);
  long span = (hi - lo + static_cast<long>(workers) - 1) / static_cast<long>(workers);
  for (unsigned w = 0; w < workers; ++w) {
    long a = lo + span * static_cast<long>(w), b = std::min(hi, a + span);
    if (a >= b) break;
    ts.emplace_back([&, a, b, w] {
      try {
        fn(a, b);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    });
  }
  for (auto& t : ts) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace

CoefficientStream coefficients(const HeckeCharacterSpec& chi, long X, unsigned workers) {
  if (X < 1) fail(ErrorCode::InvalidArgument, "norm bound must be at least 1");
  if (X > 100000000L) fail(ErrorCode::InvalidArgument, "norm bound above 1e8");
  if (chi.base_change) return base_change_coeffs(chi.untwisted(), *chi.quad_d, X, workers);
  chi.validate();
  const QuadField& F = chi.F();
  CoefficientStream s;
  s.field = chi.field;
  s.X = X;
  s.tate = chi.tate;
  s.weight = chi.weight();
  s.divisor_order = 2;
  s.a.assign(static_cast<size_t>(X) + 1, QElem{});
  s.a[1] = F.one();
  std::vector<uint32_t> spf = spf_sieve(X);
  auto at = [&](long n) -> QElem& { return s.a[static_cast<size_t>(n)]; };
  for (long p = 2; p <= X; ++p) {
    if (spf[static_cast<size_t>(p)] != p) continue;
    auto ideals = primes_above(F, p);
    if (ideals[0].kind == PrimeIdeal::Kind::Inert) {
      if (p > X / p) continue;
      QElem z = char_value(chi, ideals[0]), zp = z;
      for (long q = p * p;; q *= p * p) {
        at(q) = zp;
        if (q > X / (p * p)) break;
        zp = F.mul(zp, z);
      }
    } else if (ideals.size() == 1) {
      QElem x = char_value(chi, ideals[0]), xp = x;
      for (long q = p;; q *= p) {
        at(q) = xp;
        if (q > X / p) break;
        xp = F.mul(xp, x);
      }
    } else {
      QElem x = char_value(chi, ideals[0]), y = char_value(chi, ideals[1]);
      QElem h = F.one(), yp = F.one();
      for (long q = p;; q *= p) {
        yp = F.mul(yp, y);
        h = F.add(F.mul(x, h), yp);
        at(q) = h;
        if (q > X / p) break;
      }
    }
  }
  // a[n] = a[p^e] a[n / p^e] with n / p^e <= n / 2, so [L, 2L) depends only on [1, L)
  for (long L = 2; L <= X; L *= 2) {
    long hi = std::min(X + 1, 2 * L);
    run_parallel(workers, L, hi, [&](long lo, long up) {
      for (long n = lo; n < up; ++n) {
        long p = spf[static_cast<size_t>(n)], q = n, pe = 1;
        while (q % p == 0) {
          q /= p;
          pe *= p;
        }
        if (q == 1) continue;
        at(n) = F.mul(at(pe), at(q));
      }
    });
    if (L > X / 2) break;
  }
  return s;
}

CoefficientStream convolve(const CoefficientStream& x, const CoefficientStream& y) {
  if (x.field != y.field || x.tate != y.tate || x.weight != y.weight)
    fail(ErrorCode::InvalidArgument, "streams are not compatible");
  const QuadField& F = catalog_field(x.field);
  CoefficientStream c = x;
  c.X = std::min(x.X, y.X);
  c.divisor_order = x.divisor_order + y.divisor_order;
  c.a.assign(static_cast<size_t>(c.X) + 1, QElem{});
  for (long d = 1; d <= c.X; ++d) {
    const QElem& ad = x.a[static_cast<size_t>(d)];
    if (ad.is_zero()) continue;
    for (long m = 1; m <= c.X / d; ++m) {
      const QElem& bm = y.a[static_cast<size_t>(m)];
      if (bm.is_zero()) continue;
      QElem& t = c.a[static_cast<size_t>(d * m)];
      t = F.add(t, F.mul(ad, bm));
    }
  }
  return c;
}

CoefficientStream base_change_coeffs(const HeckeCharacterSpec& psi, const QElem& d, long X, unsigned workers) {
  HeckeCharacterSpec a = psi.untwisted();
  HeckeCharacterSpec b = a;
  b.quad_d = d;
  return convolve(coefficients(a, X, workers), coefficients(b, X, workers));
}

}  // namespace hecke
