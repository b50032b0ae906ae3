#include "hecke/hecke.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <new>

#include <json.hpp>

#include "hecke/error.hpp"
#include "hecke/report.hpp"

struct hk_field {
  hecke::NumberFieldTower tower;
  std::once_flag once;
  std::unique_ptr<hecke::FieldAnalysis> analysis;
  const hecke::FieldAnalysis& get() {
    std::call_once(once, [this] { analysis = std::make_unique<hecke::FieldAnalysis>(tower); });
    return *analysis;
  }
};

struct hk_character {
  hecke::HeckeCharacterSpec spec;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class Fn>
hk_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return HK_OK;
  } catch (const hecke::Error& e) {
    g_last_error = e.what();
    return static_cast<hk_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HK_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HK_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) hecke::fail(hecke::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

hecke::LOptions to_options(const hk_eval_options* o) {
  hk_eval_options d;
  hk_eval_options_default(&d);
  if (!o) o = &d;
  hecke::LOptions l;
  l.bits = o->bits ? o->bits : hecke::kDefaultBits;
  if (l.bits < 64) hecke::fail(hecke::ErrorCode::InvalidArgument, "precision below 64 bits");
  l.workers = o->workers ? o->workers : 1;
  l.tail = o->tail > 0 ? o->tail : 1e-10;
  l.X = o->norm_bound;
  if (l.X < 0 || l.X > hecke::kMaxNormBound) hecke::fail(hecke::ErrorCode::InvalidArgument, "norm bound out of range");
  l.conjugate = o->conjugate != 0;
  return l;
}

std::vector<int> parse_bits(const char* csv) {
  std::vector<int> out;
  if (!csv || !*csv) return out;
  for (long v : hecke::parse_infinity_type(csv).n) {
    if (v != 0 && v != 1) hecke::fail(hecke::ErrorCode::InvalidArgument, "parity bits must be 0 or 1");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

extern "C" {

void hk_eval_options_default(hk_eval_options* opt) {
  if (!opt) return;
  opt->bits = hecke::kDefaultBits;
  opt->workers = 1;
  opt->tail = 1e-10;
  opt->norm_bound = 0;
  opt->conjugate = 0;
}

const char* hk_version(void) { return hecke::kLibraryVersion; }

const char* hk_status_name(hk_status s) { return hecke::error_code_name(static_cast<hecke::ErrorCode>(s)); }

const char* hk_last_error(void) { return g_last_error.c_str(); }

void hk_string_free(char* s) { std::free(s); }

hk_status hk_field_from_json(const char* json, hk_field** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = nullptr;
    auto f = std::make_unique<hk_field>();
    f->tower = hecke::NumberFieldTower::from_json(json);
    *out = f.release();
  });
}

hk_status hk_field_from_catalog(const char* name, hk_field** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = nullptr;
    auto f = std::make_unique<hk_field>();
    f->tower = hecke::catalog_tower(name);
    *out = f.release();
  });
}

void hk_field_free(hk_field* f) { delete f; }

int hk_field_degree(const hk_field* f) { return f ? f->tower.degree() : 0; }

hk_status hk_field_info(hk_field* f, char** json_out) {
  return guarded([&] {
    need(f, "field");
    need(json_out, "json_out");
    *json_out = dup(hecke::field_info_report(f->get()));
  });
}

hk_status hk_field_discriminant(hk_field* f, char** json_out) {
  return guarded([&] {
    need(f, "field");
    need(json_out, "json_out");
    *json_out = dup(hecke::discriminant_report(f->get()));
  });
}

hk_status hk_purity(hk_field* f, const char* type_csv, char** json_out) {
  return guarded([&] {
    need(f, "field");
    need(type_csv, "type");
    need(json_out, "json_out");
    *json_out = dup(hecke::purity_report(f->get(), hecke::parse_infinity_type(type_csv)));
  });
}

hk_status hk_critical_set(hk_field* f, const char* analytic_csv, const char* eps_csv, char** json_out) {
  return guarded([&] {
    need(f, "field");
    need(analytic_csv, "type");
    need(json_out, "json_out");
    *json_out = dup(hecke::critical_report(f->get(), hecke::parse_infinity_type(analytic_csv), parse_bits(eps_csv)));
  });
}

hk_status hk_signatures(hk_field* f, const char* type_csv, char** json_out) {
  return guarded([&] {
    need(f, "field");
    need(type_csv, "type");
    need(json_out, "json_out");
    *json_out = dup(hecke::signature_report(f->get(), hecke::parse_infinity_type(type_csv)));
  });
}

hk_status hk_character_from_json(const char* json, hk_character** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = nullptr;
    auto c = std::make_unique<hk_character>();
    c->spec = hecke::HeckeCharacterSpec::from_json(json);
    *out = c.release();
  });
}

void hk_character_free(hk_character* c) { delete c; }

hk_status hk_lvalue(const hk_character* c, const char* s, const hk_eval_options* opt, char** json_out) {
  return guarded([&] {
    need(c, "character");
    need(s, "s");
    need(json_out, "json_out");
    hecke::LOptions l = to_options(opt);
    hecke::Real sv = hecke::Real::parse(s, l.bits);
    *json_out = dup(hecke::lvalue_report(c->spec, sv, l));
  });
}

hk_status hk_ratio(const hk_character* c, long m, const hk_eval_options* opt, char** json_out) {
  return guarded([&] {
    need(c, "character");
    need(json_out, "json_out");
    *json_out = dup(hecke::ratio_report(c->spec, m, to_options(opt)));
  });
}

hk_status hk_counterexample(const char* params_json, const hk_eval_options* opt, char** json_out) {
  return guarded([&] {
    need(json_out, "json_out");
    hecke::CounterexampleParams p;
    if (params_json && *params_json) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(params_json);
        p.field = hecke::catalog_field(j.value("field", std::string("Q(i)"))).id;
        p.k = j.value("k", p.k);
        p.d = j.value("d", p.d);
        p.m = j.value("m", p.m);
        if (j.contains("qbound")) p.qbound = mpz_class(j["qbound"].is_string() ? j["qbound"].get<std::string>()
                                                                                : std::to_string(j["qbound"].get<long long>()));
        p.tolerance = j.value("tolerance", p.tolerance);
        p.fallback = j.value("fallback", p.fallback);
      } catch (const nlohmann::json::exception& e) {
        hecke::fail(hecke::ErrorCode::ParseError, std::string("counterexample parameters: ") + e.what());
      }
    }
    p.lopt = to_options(opt);
    *json_out = dup(hecke::counterexample_report(p));
  });
}

}  // extern "C"
