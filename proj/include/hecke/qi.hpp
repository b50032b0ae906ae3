#ifndef HECKE_QI_HPP
#define HECKE_QI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/numfield.hpp"
#include "hecke/real.hpp"

namespace hecke {

enum class CatalogField { GaussianI, Eisenstein, SqrtMinus2 };

/// a + b*theta in the ring of integers of a catalog field, theta^2 = t*theta - n.
struct QElem {
  __int128 a = 0;
  __int128 b = 0;
  friend bool operator==(const QElem& x, const QElem& y) { return x.a == y.a && x.b == y.b; }
  bool is_zero() const { return a == 0 && b == 0; }
};

struct QuadField {
  CatalogField id;
  std::string name;     // "Q(i)", "Q(w)", "Q(sqrt(-2))"
  std::string var;      // generator name used in element strings
  std::string minpoly;  // in x
  long t, n;            // theta^2 = t theta - n
  long disc;
  QElem unit_gen;
  int unit_order;

  QElem one() const { return {1, 0}; }
  QElem mul(const QElem& x, const QElem& y) const;  // throws CoefficientOverflow
  QElem add(const QElem& x, const QElem& y) const;
  QElem conj(const QElem& x) const;
  QElem pow(QElem x, unsigned long e) const;
  __int128 norm(const QElem& x) const;
  bool is_unit(const QElem& x) const { return norm(x) == 1; }
  /// Exact division if y divides x.
  std::optional<QElem> div_exact(const QElem& x, const QElem& y) const;
  /// Euclidean division with nearest-rounded quotient.
  QElem div_round(const QElem& x, const QElem& y) const;
  QElem gcd(QElem x, QElem y) const;
  /// Associate with argument in the half-open sector (-pi/|U|, pi/|U|].
  QElem normalize(const QElem& x) const;
  QElem parse(const std::string& text) const;
  std::string str(const QElem& x) const;
  Complex value(const QElem& x, unsigned bits = kDefaultBits) const;
  /// The field as a one-layer tower (embedding 0 sends theta to the root with positive imaginary part).
  NumberFieldTower tower() const;
};

const QuadField& catalog_field(CatalogField id);
const QuadField& catalog_field(const std::string& name);

struct PrimeIdeal {
  enum class Kind { Split, Inert, Ramified };
  QElem generator;
  long norm = 0;
  Kind kind = Kind::Split;
  long p = 0;
  long root = 0;  // theta = root mod the prime (split and ramified)
};

const char* to_string(PrimeIdeal::Kind k);

/// Prime ideals of norm <= X, by rational prime, split conjugates adjacent.
std::vector<PrimeIdeal> primes_up_to(const QuadField& F, long X);
/// The prime ideals above the rational prime p.
std::vector<PrimeIdeal> primes_above(const QuadField& F, long p);

/// Character of (O/m)^x given by values on generators.
class FiniteTwist {
 public:
  FiniteTwist() = default;
  FiniteTwist(const QuadField& F, QElem modulus, const std::vector<std::pair<QElem, QElem>>& table);
  bool trivial() const { return size_ == 0; }
  const QElem& modulus() const { return m_; }
  const std::vector<std::pair<QElem, QElem>>& table() const { return gens_; }
  /// Value at x, nullopt when x is not prime to the modulus.
  std::optional<QElem> value(const QElem& x) const;

 private:
  size_t index(const QElem& x) const;
  const QuadField* F_ = nullptr;
  QElem m_{1, 0};
  __int128 A_ = 1, B_ = 0, C_ = 1;  // lattice basis (A,0), (B,C)
  size_t size_ = 0;
  std::vector<std::optional<QElem>> values_;
  std::vector<std::pair<QElem, QElem>> gens_;
};

struct HeckeCharacterSpec {
  CatalogField field = CatalogField::GaussianI;
  long k = 0;
  FiniteTwist twist;
  std::optional<QElem> quad_d;
  long tate = 0;
  bool base_change = false;  // L = L(psi) L(psi * omega_d) over F1(sqrt d)

  const QuadField& F() const { return catalog_field(field); }
  /// Throws UnitIncompatible.
  void validate() const;
  /// Coefficient bound exponent: |chi(a)| = N(a)^{w/2}.
  long weight() const { return k - 2 * tate; }
  /// The same character without the quadratic twist and base-change tag.
  HeckeCharacterSpec untwisted() const;
  HeckeCharacterSpec twisted() const;
  static HeckeCharacterSpec from_json(const std::string& text);
  std::string to_json() const;
};

HeckeCharacterSpec make_character(CatalogField f, long k, std::optional<QElem> quad_d = std::nullopt, long tate = 0);

/// Quadratic residue symbol of d at p: +1, -1, or 0 (p | d or N(p) even).
/// strict = true raises EvenPrimeUnsupported at even primes instead of returning 0.
int quad_char(const QuadField& F, const QElem& d, const PrimeIdeal& p, bool strict = false);

/// Value without Tate twist (alpha^k * twist * quadratic sign).
QElem char_value(const HeckeCharacterSpec& chi, const PrimeIdeal& p);

/// a_n = sum_{N a = n} chi(a) (Tate twist kept separately as n^{-tate}).
struct CoefficientStream {
  CatalogField field = CatalogField::GaussianI;
  long X = 0;
  long tate = 0;
  long weight = 0;         // |a_n| <= d_r(n) n^{weight/2}
  int divisor_order = 2;   // r in d_r(n)
  std::vector<QElem> a;    // a[0] unused
  Complex value(long n, unsigned bits) const;
};

CoefficientStream coefficients(const HeckeCharacterSpec& chi, long X, unsigned workers = 1);
CoefficientStream base_change_coeffs(const HeckeCharacterSpec& psi, const QElem& d, long X, unsigned workers = 1);
/// Dirichlet convolution truncated at min(X).
CoefficientStream convolve(const CoefficientStream& x, const CoefficientStream& y);

}  // namespace hecke

#endif
