#ifndef HECKE_LSERIES_HPP
#define HECKE_LSERIES_HPP

#include <vector>

#include "hecke/chartypes.hpp"
#include "hecke/qi.hpp"
#include "hecke/real.hpp"

namespace hecke {

inline constexpr long kMaxNormBound = 100000000L;

struct EvalResult {
  Complex value;
  Real tail_bound;      // truncation error (proven unless rigorous == false)
  Real error;           // tail plus accumulated rounding
  unsigned bits = kDefaultBits;
  long X = 0;
  bool rigorous = true;
};

struct RatioResult {
  long m = 0;  // ratio of the values at m and m + 1
  Complex ratio;
  Real error;
  EvalResult numerator, denominator;
};

Real gamma_R(const Real& s);
Real gamma_C(const Real& s);

/// Product of Gamma factors over the places; eps holds one parity bit per real place.
Real linf_factor(const InfinityType& analytic, const EmbeddingSet& emb, const Real& s, const std::vector<int>& eps = {});
/// Whether linf_factor(analytic, s) is finite, decided exactly at an integer s.
bool linf_is_finite(const InfinityType& analytic, const EmbeddingSet& emb, long s, const std::vector<int>& eps = {});

/// Bound for sum_{n>X} d_r(n) n^{-sigma}, sigma > 1.
Real tail_bound(long X, const Real& sigma, int divisor_order = 2);
/// Smallest power-of-two multiple of 1024 (capped at 1e8) meeting the tail; throws TailTooLarge.
long choose_norm_bound(const Real& sigma, double required_tail, int divisor_order = 2);

struct SumOptions {
  unsigned bits = kDefaultBits;
  unsigned workers = 1;
  double required_tail = 0;  // 0: no requirement
};

EvalResult dirichlet_sum(const CoefficientStream& stream, const Real& s, const SumOptions& opt = {});
EvalResult euler_product(const HeckeCharacterSpec& chi, const Real& s, long X, unsigned bits = kDefaultBits);

struct LOptions {
  unsigned bits = kDefaultBits;
  unsigned workers = 1;
  double tail = 1e-10;
  long X = 0;              // 0: chosen from tail
  bool conjugate = false;  // evaluate at the conjugate embedding of the coefficient field
};

/// Analytic infinity type of chi over its base field (embedding order of the catalog field).
InfinityType analytic_type(const HeckeCharacterSpec& chi, bool conjugate = false);
/// L_f(s, chi) from a fresh coefficient stream.
EvalResult lvalue(const HeckeCharacterSpec& chi, const Real& s, const LOptions& opt = {});
/// Lambda(m) = L_inf(m) L_f(m) at a critical m inside the convergence region.
EvalResult completed(const HeckeCharacterSpec& chi, long m, const LOptions& opt = {});
/// Lambda(m) / Lambda(m+1); throws DenominatorIndistinguishableFromZero.
RatioResult ratio(const HeckeCharacterSpec& chi, long m, const LOptions& opt = {});

}  // namespace hecke

#endif
