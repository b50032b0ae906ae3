#include "hecke/report.hpp"

#include <json.hpp>

namespace hecke {

using nlohmann::json;

namespace {

GaloisContext closure_of(const NumberFieldTower& F, unsigned bits) { return galois_closure(F, bits); }

json complex_json(const Complex& z, int digits = 40) { return {{"re", z.re.str(digits)}, {"im", z.im.str(digits)}}; }

json header(const char* command) { return {{"command", command}, {"library_version", kLibraryVersion}}; }

json field_json(const NumberFieldTower& F) { return json::parse(F.to_json()); }

json surd_json(const SurdValue& s) {
  return {{"text", s.str()}, {"i_exponent", s.i_exponent()}, {"rational", s.rational_part().get_str()},
          {"radicand", s.radicand().get_str()}};
}

json eval_json(const EvalResult& r) {
  return {{"value_re", r.value.re.str()}, {"value_im", r.value.im.str()}, {"tail_bound", r.tail_bound.to_double()},
          {"error_bound", r.error.to_double()}, {"X", r.X}, {"bits", r.bits}, {"rigorous", r.rigorous}};
}

json ratio_json(const RatioResult& r) {
  return {{"m", r.m},
          {"ratio_re", r.ratio.re.str()},
          {"ratio_im", r.ratio.im.str()},
          {"error_bound", r.error.to_double()},
          {"numerator", eval_json(r.numerator)},
          {"denominator", eval_json(r.denominator)}};
}

json recognition_json(const RecognitionResult& r) {
  json j = {{"recognized", r.recognized}, {"qbound", r.qbound.get_str()}, {"tolerance", r.tolerance.to_double()},
            {"residual", r.residual.to_double()}, {"sound", r.sound}};
  if (r.recognized) j["fraction"] = r.p.get_str() + "/" + r.q.get_str();
  else j["best_convergent"] = r.p.get_str() + "/" + r.q.get_str();
  return j;
}

json options_json(const LOptions& o) {
  return {{"bits", o.bits}, {"workers", o.workers}, {"tail", o.tail}, {"X", o.X}, {"conjugate", o.conjugate}};
}

json type_json(const InfinityType& n) { return n.n; }

}  // namespace

FieldAnalysis::FieldAnalysis(NumberFieldTower F, unsigned bits)
    : field(F), ctx(closure_of(F, bits)), sub(maximal_subfields(ctx)) {}

std::string field_info_report(const FieldAnalysis& a) {
  json j = header("field info");
  j["field"] = field_json(a.field);
  j["degree"] = a.field.degree();
  j["absolute_minpoly"] = a.field.absolute_minpoly().str("x");
  j["primitive_coeffs"] = a.field.primitive_coeffs();
  j["r1"] = a.ctx.emb.r1;
  j["r2"] = a.ctx.emb.r2;
  json embs = json::array();
  for (size_t i = 0; i < a.ctx.emb.size(); ++i) {
    json e = {{"index", i}, {"theta", complex_json(a.ctx.emb.theta[i], 20)}, {"conj", a.ctx.emb.conj[i]},
              {"place", a.ctx.emb.place_of[i]}};
    json gens = json::object();
    for (size_t k = 0; k < a.field.layer_count(); ++k) gens[a.field.layer(k).var] = complex_json(a.ctx.emb.gens[i][k], 20);
    e["generators"] = gens;
    embs.push_back(e);
  }
  j["embeddings"] = embs;
  j["closure"] = {{"order", a.ctx.order()}, {"minpoly", a.ctx.closure_minpoly.str("V")}, {"conjugation", a.ctx.conj},
                  {"permutations", a.ctx.perm}};
  j["F0"] = {{"degree", a.sub.f0.degree}, {"minpoly", a.sub.f0.minpoly.str("x")}, {"generator", a.sub.f0.generator.str()}};
  j["F1"] = {{"degree", a.sub.f1.degree}, {"minpoly", a.sub.f1.minpoly.str("x")}, {"generator", a.sub.f1.generator.str()},
             {"cm", a.sub.has_cm}};
  j["restriction_to_F1"] = a.sub.restriction;
  return j.dump(2);
}

std::string discriminant_report(const FieldAnalysis& a) {
  json j = header("disc");
  j["field"] = field_json(a.field);
  const NumberFieldTower& F = a.field;
  j["delta_tower_basis"] = rel_discriminant(F, 0, tower_basis(F, 0)).to_rational().get_str();
  json layers = json::array();
  for (size_t k = 0; k + 1 <= F.layer_count(); ++k) {
    FieldElement d = rel_discriminant(F, k, tower_basis(F, k));
    layers.push_back({{"over_prefix", k}, {"relative_discriminant", d.str()}});
  }
  j["relative_discriminants"] = layers;
  if (a.ctx.emb.totally_imaginary()) {
    IdentityCheck c = discriminant_identity_check(a.ctx, a.sub);
    j["identity"] = {{"lemma", c.lemma},
                     {"lhs", surd_json(c.lhs)},
                     {"rhs", surd_json(c.rhs)},
                     {"pass", c.pass},
                     {"Delta_F", surd_json(c.data.delta_F.delta_f)},
                     {"Delta_F1", surd_json(c.data.delta_F.delta_f1)},
                     {"norm_D", c.data.delta_F.norm_d.get_str()},
                     {"norm_delta_F_over_F1", c.data.norm_delta_rel.get_str()},
                     {"norm_exact", c.data.norm_exact},
                     {"sqrt_radicand", c.data.sqrt_radicand.get_str()}};
    if (a.sub.D) j["identity"]["D"] = a.sub.D->str();
  }
  return j.dump(2);
}

std::string purity_report(const FieldAnalysis& a, const InfinityType& n) {
  json j = header("purity");
  j["field"] = field_json(a.field);
  j["type"] = type_json(n);
  PurityResult p = purity_check(n, a.ctx);
  j["pure"] = p.pure;
  if (p.pure) {
    j["weight"] = p.weight;
    if (a.ctx.emb.totally_imaginary()) {
      j["width"] = width(n, a.ctx);
      j["window"] = combinatorial_window(n, a.ctx);
      j["base_change_of"] = type_json(is_base_change(n, a.ctx, a.sub));
    }
  } else {
    j["witness"] = {{"group_element", p.witness_g}, {"embedding", p.witness_tau}};
  }
  return j.dump(2);
}

std::string critical_report(const FieldAnalysis& a, const InfinityType& t, const std::vector<int>& eps) {
  json j = header("crit");
  j["field"] = field_json(a.field);
  j["analytic_type"] = type_json(t);
  j["eps"] = eps;
  CriticalSet c = critical_set(t, a.ctx.emb, eps);
  static const char* kinds[] = {"empty", "finite-interval", "infinite-arith-progression"};
  j["kind"] = kinds[static_cast<int>(c.kind)];
  j["text"] = c.str();
  j["center"] = mpq_class(c.center2, 2).get_str();
  if (c.kind == CriticalSet::Kind::Interval) {
    j["lo"] = c.lo;
    j["hi"] = c.hi;
    j["size"] = c.size();
  } else if (c.kind == CriticalSet::Kind::Progression) {
    j["descending_from"] = c.down;
    j["ascending_from"] = c.up;
  }
  return j.dump(2);
}

std::string signature_report(const FieldAnalysis& a, const InfinityType& n) {
  json j = header("signatures");
  j["field"] = field_json(a.field);
  j["type"] = type_json(n);
  CMTypeData cm = cm_type(n, a.ctx);
  j["phi"] = cm.phi;
  j["phi_tilde"] = cm.phi_tilde;
  ReciprocityTable t = reciprocity_table(a.ctx, a.sub, n);
  j["radicand"] = t.radicand.get_str();
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"element", r.element}, {"permutation", a.ctx.perm[r.element]}, {"eps", r.eps},
                    {"eps_tilde", r.eps_tilde}, {"product", r.product}, {"sqrt_sign", r.sqrt_sign}, {"agree", r.agree}});
  j["rows"] = rows;
  j["pass"] = t.pass;
  j["any_negative_product"] = t.any_negative;
  return j.dump(2);
}

std::string lvalue_report(const HeckeCharacterSpec& chi, const Real& s, const LOptions& opt) {
  json j = header("lvalue");
  j["character"] = json::parse(chi.to_json());
  j["s"] = s.str(20);
  j["options"] = options_json(opt);
  j.update(eval_json(lvalue(chi, s, opt)));
  return j.dump(2);
}

std::string ratio_report(const HeckeCharacterSpec& chi, long m, const LOptions& opt) {
  json j = header("ratio");
  j["character"] = json::parse(chi.to_json());
  j["options"] = options_json(opt);
  j.update(ratio_json(ratio(chi, m, opt)));
  return j.dump(2);
}

std::string counterexample_report(const CounterexampleParams& p) {
  CounterexampleReport r = counterexample_pipeline(p);
  json j = header("counterexample");
  j["inputs"] = {{"field", catalog_field(p.field).name}, {"k", p.k},           {"d", p.d},
                 {"m", p.m},                             {"qbound", p.qbound.get_str()}, {"tolerance", p.tolerance},
                 {"fallback", p.fallback},               {"options", options_json(p.lopt)}};
  j["R_psi"] = ratio_json(r.r_psi);
  j["R_psi_omega"] = ratio_json(r.r_psiw);
  j["R_chi"] = {{"re", r.r_chi.re.str()}, {"im", r.r_chi.im.str()}, {"error_bound", r.r_chi_error.to_double()}};
  j["imag_within_error"] = r.imag_within_error;
  j["radicand"] = r.radicand.get_str();
  j["recognition_R_chi"] = recognition_json(r.rec);
  j["recognition_sqrt_R_chi"] = recognition_json(r.rec_sqrt);
  j["used_fallback"] = r.used_fallback;
  j["verdict"] = r.verdict;
  return j.dump(2);
}

}  // namespace hecke
