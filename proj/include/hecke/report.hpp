#ifndef HECKE_REPORT_HPP
#define HECKE_REPORT_HPP

#include <string>
#include <vector>

#include "hecke/verify.hpp"

namespace hecke {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// A field with its Galois closure and maximal subfields.
struct FieldAnalysis {
  explicit FieldAnalysis(NumberFieldTower F, unsigned bits = kDefaultBits);
  NumberFieldTower field;
  GaloisContext ctx;
  MaximalSubfields sub;
};

std::string field_info_report(const FieldAnalysis& a);
std::string discriminant_report(const FieldAnalysis& a);
std::string purity_report(const FieldAnalysis& a, const InfinityType& n);
std::string critical_report(const FieldAnalysis& a, const InfinityType& analytic, const std::vector<int>& eps);
std::string signature_report(const FieldAnalysis& a, const InfinityType& n);
std::string lvalue_report(const HeckeCharacterSpec& chi, const Real& s, const LOptions& opt);
std::string ratio_report(const HeckeCharacterSpec& chi, long m, const LOptions& opt);
std::string counterexample_report(const CounterexampleParams& p);

}  // namespace hecke

#endif
