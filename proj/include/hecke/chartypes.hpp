#ifndef HECKE_CHARTYPES_HPP
#define HECKE_CHARTYPES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hecke/galois.hpp"

namespace hecke {

/// Integer exponents indexed by the canonical embedding order of a field.
struct InfinityType {
  std::vector<long> n;
  friend bool operator==(const InfinityType& a, const InfinityType& b) { return a.n == b.n; }
};

InfinityType parse_infinity_type(const std::string& csv);
std::string to_string(const InfinityType& t);

struct PurityResult {
  bool pure = false;
  long weight = 0;          // valid iff pure
  size_t witness_g = 0;     // group element and embedding violating purity
  size_t witness_tau = 0;
};

/// n_{g o tau} + n_{g o conj tau} = w for all g, tau (all n equal when a real place exists).
PurityResult purity_check(const InfinityType& n, const GaloisContext& ctx);
/// Weaker pairwise test on a single embedding set (used where no closure is at hand).
std::optional<long> pair_weight(const InfinityType& n, const EmbeddingSet& emb);

/// min |n_eta - n_{conj eta}|; throws NotPure.
long width(const InfinityType& n, const GaloisContext& ctx);
/// Relabeling n -> g.n with (g.n)_{g o tau} = n_tau.
InfinityType relabel(const InfinityType& n, const GaloisContext& ctx, size_t g);

/// Infinity type m over F1 with n = m o restriction; throws FiberMismatch or NotPure.
InfinityType is_base_change(const InfinityType& n, const GaloisContext& ctx, const MaximalSubfields& sub);

struct CriticalSet {
  enum class Kind { Empty, Interval, Progression };
  Kind kind = Kind::Empty;
  long lo = 0, hi = 0;             // interval bounds (inclusive)
  long down = 0, up = 0;           // progression: down, down-2, ... and up, up+2, ...
  long center2 = 0;                // twice the center of symmetry
  bool contains(long m) const;
  long size() const;               // finite kinds only
  std::string str() const;
};

/// eps holds one parity bit per real place (in place order); ignored otherwise.
CriticalSet critical_set(const InfinityType& analytic, const EmbeddingSet& emb, const std::vector<int>& eps = {});

/// -n relabeled through iota (a group element), shifted by the Tate twist.
InfinityType analytic_type(const InfinityType& n, long tate = 0);
InfinityType analytic_type(const InfinityType& n, const GaloisContext& ctx, size_t iota, long tate = 0);

/// -l <= w <= l - 4; throws NotPure.
bool combinatorial_window(const InfinityType& n, const GaloisContext& ctx);

struct CMTypeData {
  std::vector<size_t> phi;         // one embedding per place, in place order
  std::vector<size_t> phi_tilde;   // conjugates
  std::vector<size_t> beta;        // beta[k] = place of phi[k]
};
/// Phi = {eta : n_eta <= -2}; throws WindowViolated.
CMTypeData cm_type(const InfinityType& n, const GaloisContext& ctx);

struct SignatureResult {
  int eps = 1;
  int eps_tilde = 1;
  int product = 1;
  Perm pi, pi_tilde;  // permutations of the places
};
/// place_labels optionally renames places (label = place_labels[place]).
SignatureResult signature(const InfinityType& n, const GaloisContext& ctx, size_t sigma,
                          const std::vector<size_t>* place_labels = nullptr);

}  // namespace hecke

#endif
