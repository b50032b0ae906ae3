#include "hecke/chartypes.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

InfinityType parse_infinity_type(const std::string& csv) {
  InfinityType t;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    try {
      t.n.push_back(std::stol(item, &pos));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad exponent '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) fail(ErrorCode::ParseError, "bad exponent '" + item + "'");
  }
  if (t.n.empty()) fail(ErrorCode::ParseError, "empty infinity type");
  return t;
}

std::string to_string(const InfinityType& t) {
  std::string s;
  for (size_t i = 0; i < t.n.size(); ++i) s += (i ? "," : "") + std::to_string(t.n[i]);
  return s;
}

namespace {

void check_length(const InfinityType& n, size_t d) {
  if (n.n.size() != d)
    fail(ErrorCode::InvalidArgument, "infinity type has " + std::to_string(n.n.size()) + " entries, field degree is " +
                                         std::to_string(d));
}

long pure_weight(const InfinityType& n, const GaloisContext& ctx) {
  PurityResult p = purity_check(n, ctx);
  if (!p.pure) fail(ErrorCode::NotPure, "infinity type " + to_string(n) + " is not pure");
  return p.weight;
}

}  // namespace

PurityResult purity_check(const InfinityType& n, const GaloisContext& ctx) {
  check_length(n, ctx.degree());
  PurityResult r;
  const size_t d = ctx.degree();
  if (ctx.emb.r1 > 0) {
    for (size_t i = 0; i < d; ++i)
      if (n.n[i] != n.n[0]) {
        r.witness_tau = i;
        return r;
      }
    r.pure = true;
    r.weight = n.n[0];
    return r;
  }
  const long w = n.n[0] + n.n[ctx.emb.conj[0]];
  for (size_t g = 0; g < ctx.order(); ++g)
    for (size_t i = 0; i < d; ++i)
      if (n.n[ctx.perm[g][i]] + n.n[ctx.perm[g][ctx.emb.conj[i]]] != w) {
        r.witness_g = g;
        r.witness_tau = i;
        return r;
      }
  r.pure = true;
  r.weight = w;
  return r;
}

std::optional<long> pair_weight(const InfinityType& n, const EmbeddingSet& emb) {
  check_length(n, emb.size());
  if (emb.r1 > 0) {
    for (long v : n.n)
      if (v != n.n[0]) return std::nullopt;
    return n.n[0];
  }
  const long w = n.n[0] + n.n[emb.conj[0]];
  for (size_t i = 0; i < emb.size(); ++i)
    if (n.n[i] + n.n[emb.conj[i]] != w) return std::nullopt;
  return w;
}

long width(const InfinityType& n, const GaloisContext& ctx) {
  pure_weight(n, ctx);
  if (ctx.emb.r1 > 0) fail(ErrorCode::InvalidArgument, "width needs a totally imaginary field");
  long l = -1;
  for (const auto& pl : ctx.emb.places) {
    long v = std::labs(n.n[pl.rep] - n.n[pl.conj]);
    if (l < 0 || v < l) l = v;
  }
  return l;
}

InfinityType relabel(const InfinityType& n, const GaloisContext& ctx, size_t g) {
  check_length(n, ctx.degree());
  InfinityType r;
  r.n.resize(n.n.size());
  for (size_t i = 0; i < n.n.size(); ++i) r.n[ctx.perm[g][i]] = n.n[i];
  return r;
}

InfinityType is_base_change(const InfinityType& n, const GaloisContext& ctx, const MaximalSubfields& sub) {
  pure_weight(n, ctx);
  const size_t d1 = sub.emb1.size();
  std::vector<std::optional<long>> m(d1);
  for (size_t i = 0; i < n.n.size(); ++i) {
    size_t j = sub.restriction[i];
    if (!m[j])
      m[j] = n.n[i];
    else if (*m[j] != n.n[i])
      fail(ErrorCode::FiberMismatch, "exponents differ on the fiber over embedding " + std::to_string(j) + " of F1");
  }
  InfinityType out;
  for (auto& v : m) {
    if (!v) fail(ErrorCode::FiberMismatch, "restriction map is not surjective");
    out.n.push_back(*v);
  }
  return out;
}

bool CriticalSet::contains(long m) const {
  switch (kind) {
    case Kind::Empty:
      return false;
    case Kind::Interval:
      return lo <= m && m <= hi;
    case Kind::Progression:
      return (m <= down && (down - m) % 2 == 0) || (m >= up && (m - up) % 2 == 0);
  }
  return false;
}

long CriticalSet::size() const {
  if (kind == Kind::Empty) return 0;
  if (kind == Kind::Interval) return hi - lo + 1;
  fail(ErrorCode::InvalidArgument, "critical set is infinite");
}

std::string CriticalSet::str() const {
  switch (kind) {
    case Kind::Empty:
      return "{}";
    case Kind::Interval:
      return lo > hi ? "{}" : "{" + std::to_string(lo) + ".." + std::to_string(hi) + "}";
    case Kind::Progression:
      return "{..., " + std::to_string(down - 2) + ", " + std::to_string(down) + "} u {" + std::to_string(up) + ", " +
             std::to_string(up + 2) + ", ...}";
  }
  return "";
}

CriticalSet critical_set(const InfinityType& t, const EmbeddingSet& emb, const std::vector<int>& eps) {
  auto w = pair_weight(t, emb);
  if (!w) fail(ErrorCode::NotPure, "analytic type " + to_string(t) + " is not pure");
  CriticalSet c;
  if (emb.r1 > 0 && emb.r2 > 0) return c;
  if (emb.r2 == 0) {
    if (eps.size() != static_cast<size_t>(emb.r1))
      fail(ErrorCode::InvalidArgument, "one parity bit per real place is required");
    for (int e : eps)
      if (e != eps[0]) return c;
    c.kind = CriticalSet::Kind::Progression;
    if (eps[0] == 0) {
      c.down = -*w - 1;
      c.up = -*w + 2;
    } else {
      c.down = -*w;
      c.up = -*w + 1;
    }
    c.center2 = 1 - 2 * *w;
    return c;
  }
  long l = -1;
  for (const auto& pl : emb.places) {
    long v = std::labs(t.n[pl.rep] - t.n[pl.conj]);
    if (l < 0 || v < l) l = v;
  }
  c.center2 = 1 - *w;
  if (l == 0) return c;
  c.kind = CriticalSet::Kind::Interval;
  // w and l have equal parity
  c.lo = (2 - *w - l) / 2;
  c.hi = (-*w + l) / 2;
  return c;
}

InfinityType analytic_type(const InfinityType& n, long tate) {
  InfinityType r;
  for (long v : n.n) r.n.push_back(-v + tate);
  return r;
}

InfinityType analytic_type(const InfinityType& n, const GaloisContext& ctx, size_t iota, long tate) {
  return analytic_type(relabel(n, ctx, iota), tate);
}

bool combinatorial_window(const InfinityType& n, const GaloisContext& ctx) {
  long w = pure_weight(n, ctx);
  long l = width(n, ctx);
  return -l <= w && w <= l - 4;
}

CMTypeData cm_type(const InfinityType& n, const GaloisContext& ctx) {
  if (!combinatorial_window(n, ctx)) fail(ErrorCode::WindowViolated, "infinity type " + to_string(n) + " is outside the window");
  CMTypeData c;
  for (size_t k = 0; k < ctx.emb.places.size(); ++k) {
    const auto& pl = ctx.emb.places[k];
    size_t eta = n.n[pl.rep] <= -2 ? pl.rep : pl.conj;
    if (n.n[eta] > -2 || n.n[ctx.emb.conj[eta]] < 0) fail(ErrorCode::Internal, "window does not split the pair");
    c.phi.push_back(eta);
    c.phi_tilde.push_back(ctx.emb.conj[eta]);
    c.beta.push_back(k);
  }
  return c;
}

SignatureResult signature(const InfinityType& n, const GaloisContext& ctx, size_t sigma,
                          const std::vector<size_t>* labels) {
  CMTypeData phi = cm_type(n, ctx);
  InfinityType moved = relabel(n, ctx, sigma);
  CMTypeData phi2 = cm_type(moved, ctx);
  const size_t P = phi.phi.size();
  auto label = [&](size_t place) { return labels ? (*labels)[place] : place; };
  SignatureResult r;
  r.pi.assign(P, 0);
  r.pi_tilde.assign(P, 0);
  std::vector<bool> hit(P, false), hit2(P, false);
  for (size_t w = 0; w < P; ++w) {
    size_t img = ctx.perm[sigma][phi.phi[w]];
    size_t img2 = ctx.perm[sigma][phi.phi_tilde[w]];
    if (std::find(phi2.phi.begin(), phi2.phi.end(), img) == phi2.phi.end())
      fail(ErrorCode::NotACMTypeAfterAction, "image of the CM type is not the CM type of the moved type");
    size_t p1 = ctx.emb.place_of[img], p2 = ctx.emb.place_of[img2];
    if (hit[p1] || hit2[p2]) fail(ErrorCode::NotACMTypeAfterAction, "image of the CM type meets a place twice");
    hit[p1] = hit2[p2] = true;
    r.pi[label(w)] = label(p1);
    r.pi_tilde[label(w)] = label(p2);
  }
  r.eps = perm_sign(r.pi);
  r.eps_tilde = perm_sign(r.pi_tilde);
  r.product = r.eps * r.eps_tilde;
  return r;
}

}  // namespace hecke
