// Command-line front end; talks to the library only through hecke.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hecke/hecke.h"

namespace {

struct Globals {
  unsigned bits = 192;
  unsigned workers = 1;
  double tail = 1e-10;
  long norm_bound = 0;
  std::string qmax = "10000";
  double tol = 5e-8;
  std::string out;
};

std::string slurp_or_literal(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int finish(hk_status st, char* json, const Globals& g) {
  if (st != HK_OK) {
    std::cerr << "error: " << hk_status_name(st) << ": " << hk_last_error() << "\n";
    return static_cast<int>(st);
  }
  std::string text(json);
  hk_string_free(json);
  std::cout << text << "\n";
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return 1;
    }
    f << text << "\n";
  }
  return 0;
}

hk_status open_field(const std::string& arg, hk_field** f) {
  std::string text = slurp_or_literal(arg);
  if (!text.empty() && text.find('{') != std::string::npos) return hk_field_from_json(text.c_str(), f);
  return hk_field_from_catalog(text.c_str(), f);
}

hk_eval_options options(const Globals& g) {
  hk_eval_options o;
  hk_eval_options_default(&o);
  o.bits = g.bits;
  o.workers = g.workers;
  o.tail = g.tail;
  o.norm_bound = g.norm_bound;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic Hecke characters: fields, infinity types, critical values"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--bits", g.bits, "working precision in bits")->capture_default_str();
  app.add_option("--workers", g.workers, "summation threads")->capture_default_str();
  app.add_option("--tail", g.tail, "required truncation bound")->capture_default_str();
  app.add_option("--X", g.norm_bound, "fixed norm bound (0: from --tail)")->capture_default_str();
  app.add_option("--qmax", g.qmax, "denominator bound for rational recognition")->capture_default_str();
  app.add_option("--tol", g.tol, "recognition tolerance")->capture_default_str();
  app.add_option("--out", g.out, "also write the JSON report to this file");
  app.set_version_flag("--version", std::string(hk_version()));

  std::string field_arg = "Q(i)", type_csv, eps_csv, char_arg, s_arg = "8";
  long m = 7;

  auto* field = app.add_subcommand("field", "field commands");
  field->require_subcommand(1);
  field->fallthrough();
  auto* info = field->add_subcommand("info", "embeddings, closure, maximal subfields");
  info->add_option("--field", field_arg, "catalog name, JSON file, or inline JSON")->capture_default_str();

  auto* disc = app.add_subcommand("disc", "discriminants and the discriminant identities");
  disc->add_option("--field", field_arg, "catalog name, JSON file, or inline JSON")->capture_default_str();

  auto* purity = app.add_subcommand("purity", "purity, weight, width, window");
  purity->add_option("--field", field_arg)->capture_default_str();
  purity->add_option("--type", type_csv, "exponents in embedding order")->required();

  auto* crit = app.add_subcommand("crit", "critical set of an analytic type");
  crit->add_option("--field", field_arg)->capture_default_str();
  crit->add_option("--type", type_csv, "analytic exponents in embedding order")->required();
  crit->add_option("--eps", eps_csv, "parity bit per real place");

  auto* sig = app.add_subcommand("signatures", "signature table over the closure group");
  sig->add_option("--field", field_arg)->capture_default_str();
  sig->add_option("--type", type_csv, "exponents in embedding order")->required();

  auto* lval = app.add_subcommand("lvalue", "finite L-value by a truncated Dirichlet series");
  lval->add_option("--char", char_arg, "character spec (JSON file or inline JSON)")->required();
  lval->add_option("--s", s_arg)->capture_default_str();

  auto* rat = app.add_subcommand("ratio", "ratio of completed values at m and m+1");
  rat->add_option("--char", char_arg, "character spec (JSON file or inline JSON)")->required();
  rat->add_option("--m", m)->capture_default_str();

  std::string params;
  auto* cex = app.add_subcommand("counterexample", "rationality asymmetry for a base-changed character");
  cex->add_option("--params", params, "JSON file or inline JSON (field, k, d, m, fallback)");

  CLI11_PARSE(app, argc, argv);

  char* json = nullptr;
  hk_status st = HK_OK;
  if (*field || *disc || *purity || *crit || *sig) {
    hk_field* f = nullptr;
    st = open_field(field_arg, &f);
    if (st == HK_OK) {
      if (*info) st = hk_field_info(f, &json);
      else if (*disc) st = hk_field_discriminant(f, &json);
      else if (*purity) st = hk_purity(f, type_csv.c_str(), &json);
      else if (*crit) st = hk_critical_set(f, type_csv.c_str(), eps_csv.c_str(), &json);
      else st = hk_signatures(f, type_csv.c_str(), &json);
    }
    hk_field_free(f);
    return finish(st, json, g);
  }
  hk_eval_options o = options(g);
  if (*lval || *rat) {
    hk_character* c = nullptr;
    std::string spec = slurp_or_literal(char_arg);
    st = hk_character_from_json(spec.c_str(), &c);
    if (st == HK_OK) st = *lval ? hk_lvalue(c, s_arg.c_str(), &o, &json) : hk_ratio(c, m, &o, &json);
    hk_character_free(c);
    return finish(st, json, g);
  }
  std::string p = params.empty() ? "{}" : slurp_or_literal(params);
  // global recognition settings go into the parameter object unless given there
  if (p.find("\"qbound\"") == std::string::npos || p.find("\"tolerance\"") == std::string::npos) {
    std::string extra;
    if (p.find("\"qbound\"") == std::string::npos) extra += "\"qbound\": \"" + g.qmax + "\"";
    if (p.find("\"tolerance\"") == std::string::npos) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", g.tol);
      extra += std::string(extra.empty() ? "" : ", ") + "\"tolerance\": " + buf;
    }
    auto brace = p.find('{');
    if (brace != std::string::npos) {
      bool empty = p.find_first_not_of(" \t\r\n", brace + 1) == p.find('}', brace);
      p.insert(brace + 1, extra + (empty ? "" : ", "));
    }
  }
  st = hk_counterexample(p.c_str(), &o, &json);
  return finish(st, json, g);
}
