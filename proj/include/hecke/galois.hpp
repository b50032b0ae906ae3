#ifndef HECKE_GALOIS_HPP
#define HECKE_GALOIS_HPP

#include <optional>
#include <vector>

#include "hecke/numfield.hpp"
#include "hecke/surd.hpp"

namespace hecke {

inline constexpr int kMaxClosureDegree = 48;

using Perm = std::vector<size_t>;

/// Galois closure L = Q(V) of F together with Gal(L/Q) acting on the embeddings of F.
///
/// Group element k corresponds to the closure embedding V -> closure_roots[k]; it is
/// the automorphism V -> images[k] and acts on Sigma_F by sigma o tau_i = tau_{perm[k][i]}.
/// Element 0 is the identity.
struct GaloisContext {
  NumberFieldTower field;
  EmbeddingSet emb;
  QPoly closure_minpoly;                // M(V)
  std::vector<QPoly> root_expr;         // tau_i(theta) as a polynomial in V, per embedding of F
  std::vector<long> v_coeffs;           // V = sum_i v_coeffs[i] tau_i(theta)
  std::vector<Complex> closure_roots;   // reference embedding first
  std::vector<QPoly> images;            // images[k] = sigma_k(V)
  std::vector<Perm> perm;               // action on Sigma_F
  std::vector<size_t> restriction;      // closure embedding -> embedding of F
  size_t conj = 0;                      // complex conjugation as a group element
  unsigned bits = 0;

  size_t order() const { return perm.size(); }
  size_t degree() const { return static_cast<size_t>(field.degree()); }
  size_t compose(size_t a, size_t b) const;  // sigma_a o sigma_b
  size_t inverse(size_t a) const;
  size_t index_of(const Perm& p) const;      // throws if p is not in the group
  /// Closure as a one-layer tower in the variable V.
  NumberFieldTower closure_tower() const;
  /// sigma_k applied to an element of L written as a polynomial in V.
  QPoly apply(size_t k, const QPoly& x) const;
  /// Element of F (power basis in theta) viewed inside L.
  QPoly field_to_closure(const FieldElement& x) const;
  /// Element of L known to lie in F, back in F; nullopt if it is not in F.
  std::optional<FieldElement> closure_to_field(const QPoly& x) const;
  /// Permutation of the closure embeddings induced by group element k (left action).
  Perm closure_action(size_t k) const;
};

GaloisContext galois_closure(const NumberFieldTower& F, unsigned bits = kDefaultBits);

/// Subfield of F described by the subgroup H of the closure group fixing it.
struct Subfield {
  std::vector<size_t> subgroup;  // sorted element indices
  int degree = 0;
  FieldElement generator;        // primitive element, inside F
  QPoly minpoly;
  bool totally_real = false;
  bool totally_imaginary = false;
};

struct MaximalSubfields {
  MaximalSubfields(Subfield a, Subfield b) : f0(std::move(a)), f1(std::move(b)) {}
  Subfield f0;
  Subfield f1;
  bool has_cm = false;            // F1 is a CM field distinct from F0
  NumberFieldTower F0, F1;        // one-layer presentations
  EmbeddingSet emb0, emb1;
  std::vector<size_t> restriction;  // Sigma_F -> Sigma_F1 (canonical order of F1)
  std::vector<size_t> restriction0; // Sigma_F -> Sigma_F0
  std::optional<FieldElement> D;    // element of F0 (inside F) with F1 = F0(sqrt D)
};

/// All subfields of F (one per subgroup containing the stabilizer of theta).
std::vector<Subfield> subfields(const GaloisContext& ctx);
MaximalSubfields maximal_subfields(const GaloisContext& ctx);

/// Delta_{F1} = sqrt(N_{F0/Q}(D)) and Delta_F = Delta_{F1}^{[F:F1]}. D must be totally
/// negative (checked at the embeddings of F); without D the unit value is returned.
struct DeltaResult {
  SurdValue delta_f1;
  SurdValue delta_f;
  mpq_class norm_d;  // N_{F0/Q}(D)
};
DeltaResult delta_F(const GaloisContext& ctx, int deg_f0, int deg_f1, const std::optional<FieldElement>& D);

/// Sign by which group element k acts on sqrt(r). Throws SqrtNotInClosure.
int galois_action_on_sqrt(const GaloisContext& ctx, size_t k, const mpz_class& r);
/// An element of L whose square is r (in V), if it exists.
std::optional<QPoly> sqrt_in_closure(const GaloisContext& ctx, const mpz_class& r);

/// Sign of a permutation.
int perm_sign(const Perm& p);

}  // namespace hecke

#endif
