#ifndef HECKE_NUMFIELD_HPP
#define HECKE_NUMFIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "hecke/qmatrix.hpp"
#include "hecke/qpoly.hpp"
#include "hecke/real.hpp"

namespace hecke {

inline constexpr int kMaxFieldDegree = 24;

struct LayerSpec {
  std::string var;
  std::string minpoly;  // polynomial in x, coefficients may use earlier generators
};

class FieldElement;
class EmbeddingSet;

/// Number field presented as a tower of monogenic extensions. Elements are
/// rational vectors in the product basis g_1^{b_1} ... g_L^{b_L}, with the
/// lowest layer varying fastest. Immutable; copies share state.
class NumberFieldTower {
 public:
  struct Layer {
    std::string var;
    std::string minpoly_text;
    int degree = 0;
    // Monic minimal polynomial; coeffs[b] is an element of the field below.
    std::vector<std::vector<mpq_class>> coeffs;
  };

  /// The field Q (no layers).
  NumberFieldTower();
  static NumberFieldTower build(const std::vector<LayerSpec>& layers);
  static NumberFieldTower from_json(const std::string& json);
  /// Single layer Q(var) = Q[x]/f.
  static NumberFieldTower simple(const std::string& var, const QPoly& f);

  std::string to_json() const;

  int degree() const;
  size_t layer_count() const;
  const Layer& layer(size_t k) const;
  /// The sub-tower made of the first k layers.
  NumberFieldTower prefix(size_t k) const;
  const QPoly& absolute_minpoly() const;
  /// theta = sum_j c_j g_j generates the field over Q.
  const std::vector<long>& primitive_coeffs() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement rational(const mpq_class& q) const;
  FieldElement gen(size_t k) const;
  FieldElement primitive() const;
  FieldElement element(std::vector<mpq_class> coords) const;
  /// Parses an expression in the generator names, e.g. "4+i" or "1/2*t*i".
  FieldElement parse_element(const std::string& text) const;
  FieldElement from_power_basis(const QPoly& p) const;
  /// Coordinates with respect to 1, theta, ..., theta^(n-1).
  QPoly to_power_basis(const FieldElement& x) const;

  bool same_as(const NumberFieldTower& o) const { return d_ == o.d_; }

  struct Data;

 private:
  explicit NumberFieldTower(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class FieldElement;
};

class FieldElement {
 public:
  FieldElement(NumberFieldTower field, std::vector<mpq_class> coords);

  const NumberFieldTower& field() const { return f_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  mpq_class to_rational() const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement operator-() const;
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const mpq_class& s);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  /// Matrix of multiplication by this element on the product basis (columns are images).
  QMatrix mult_matrix() const;
  mpq_class trace() const;
  mpq_class norm() const;
  QPoly charpoly() const;
  QPoly minpoly() const;

  /// Image under embedding i of the given embedding set.
  Complex eval(const EmbeddingSet& emb, size_t i) const;
  std::string str() const;

 private:
  void check_same(const FieldElement& o) const;
  NumberFieldTower f_;
  std::vector<mpq_class> c_;
};

/// Image of an element of the sub-tower prefix(k) inside F.
FieldElement embed_prefix(const NumberFieldTower& F, const FieldElement& x);
/// Relative trace and norm from F down to its first k layers.
FieldElement relative_trace(const FieldElement& x, size_t k);
FieldElement relative_norm(const FieldElement& x, size_t k);
/// Determinant of a square matrix with entries in one field.
FieldElement det_over(const std::vector<std::vector<FieldElement>>& m);

/// det[Tr_{F/K}(w_i w_j)] for K = prefix(k); throws NotABasis if the w_i are not a K-basis.
FieldElement rel_discriminant(const NumberFieldTower& F, size_t k, const std::vector<FieldElement>& basis);
/// delta_{F/Q} = delta_{K/Q}^{[F:K]} N_{K/Q}(delta_{F/K}) with K = prefix(k).
mpq_class abs_discriminant_tower(const NumberFieldTower& F, size_t k, const std::vector<FieldElement>& basis_FK,
                                 const std::vector<FieldElement>& basis_K);
/// The product basis of F over prefix(k), as elements of F.
std::vector<FieldElement> tower_basis(const NumberFieldTower& F, size_t k);

struct Place {
  bool real = false;
  size_t rep = 0;   // embedding index (imaginary part of theta positive for complex places)
  size_t conj = 0;  // equal to rep for real places
};

/// Numerical embeddings of F in canonical order: real embeddings sorted by the
/// image of theta, then complex places as consecutive (rep, conj) pairs sorted by
/// (Re, Im) of the rep's theta image.
class EmbeddingSet {
 public:
  unsigned bits = 0;
  std::vector<Complex> theta;                  // image of the primitive element
  std::vector<std::vector<Complex>> gens;      // gens[i][k]: image of generator k
  std::vector<size_t> conj;                    // conjugation pairing
  std::vector<size_t> place_of;                // embedding -> place index
  std::vector<Place> places;
  int r1 = 0, r2 = 0;
  Real separation;

  size_t size() const { return theta.size(); }
  bool is_real(size_t i) const { return conj[i] == i; }
  bool totally_imaginary() const { return r1 == 0; }
  bool totally_real() const { return r2 == 0; }
};

EmbeddingSet embeddings(const NumberFieldTower& F, unsigned bits = kDefaultBits);

}  // namespace hecke

#endif
