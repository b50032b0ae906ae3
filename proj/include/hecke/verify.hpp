#ifndef HECKE_VERIFY_HPP
#define HECKE_VERIFY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hecke/chartypes.hpp"
#include "hecke/galois.hpp"
#include "hecke/lseries.hpp"
#include "hecke/qi.hpp"
#include "hecke/surd.hpp"

namespace hecke {

struct RecognitionResult {
  bool recognized = false;
  mpz_class p = 0, q = 1;
  Real residual;     // |x - p/q| for the reported (or best tried) convergent
  mpz_class qbound;
  Real tolerance;
  bool sound = true; // tolerance < 1/(2 qbound^2)
};

RecognitionResult recognize_rational(const Real& x, const mpz_class& qbound, const Real& tolerance);

/// Real and imaginary parts recognized separately.
struct GaussianRecognition {
  bool recognized = false;
  RecognitionResult re, im;
};
GaussianRecognition recognize_gaussian(const Complex& z, const mpz_class& qbound, const Real& tolerance);

/// Named fields used by the checks (towers), e.g. "Q(i)", "Q(i,sqrt(4+i))", "Q(zeta5)".
NumberFieldTower catalog_tower(const std::string& name);
std::vector<std::string> catalog_tower_names();

/// Data for the discriminant identities of a totally imaginary field.
struct DiscriminantData {
  mpq_class delta;                          // discriminant of the tower basis over Q
  int deg_f0 = 1, deg_f1 = 1;
  bool cm = false;                          // F = F1
  std::optional<size_t> f1_prefix;          // layer count of the prefix equal to F1, if any
  std::optional<FieldElement> delta_rel;    // delta_{F/F1} of the tower basis (when F1 is a prefix)
  mpq_class norm_delta_rel = 1;             // N_{F1/Q}(delta_{F/F1}), exact or up to squares
  bool norm_exact = false;
  mpz_class sqrt_radicand = 1;              // squarefree part of |norm_delta_rel|
  DeltaResult delta_F;
};
DiscriminantData discriminant_data(const GaloisContext& ctx, const MaximalSubfields& sub);

struct IdentityCheck {
  std::string lemma;  // "cm" or "totally-imaginary"
  SurdValue lhs, rhs;
  bool pass = false;
  DiscriminantData data;
};
IdentityCheck discriminant_identity_check(const GaloisContext& ctx, const MaximalSubfields& sub);

struct ReciprocityRow {
  size_t element = 0;
  int eps = 1, eps_tilde = 1, product = 1, sqrt_sign = 1;
  bool agree = true;
};
struct ReciprocityTable {
  mpz_class radicand = 1;
  std::vector<ReciprocityRow> rows;
  bool pass = true;
  bool any_negative = false;
};
ReciprocityTable reciprocity_table(const GaloisContext& ctx, const MaximalSubfields& sub, const InfinityType& n);

struct CounterexampleParams {
  CatalogField field = CatalogField::GaussianI;
  long k = 8;
  std::string d = "4+i";
  long m = 7;
  mpz_class qbound = 10000;
  double tolerance = 5e-8;
  bool fallback = true;  // rerun at 4x precision and X with qbound 1e6 if the rational branch fails
  LOptions lopt;
};

struct CounterexampleReport {
  CounterexampleParams params;
  RatioResult r_psi, r_psiw;
  Complex r_chi;
  Real r_chi_error;
  mpz_class radicand = 1;  // r in sqrt(r) * R_chi
  bool imag_within_error = false;
  RecognitionResult rec, rec_sqrt;
  bool used_fallback = false;
  std::string verdict;  // "counterexample-reproduced" or "not-reproduced"
};
CounterexampleReport counterexample_pipeline(const CounterexampleParams& p);

}  // namespace hecke

#endif
