#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>
#include <thread>
#include <vector>

#include "hecke/hecke.h"

using nlohmann::json;

namespace {

// Takes ownership of a library string.
json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  hk_string_free(s);
  return j;
}

struct Field {
  hk_field* f = nullptr;
  explicit Field(const char* name) { REQUIRE(hk_field_from_catalog(name, &f) == HK_OK); }
  ~Field() { hk_field_free(f); }
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(hk_version()) == "0.1.0");
  CHECK(std::string(hk_status_name(HK_OK)) == "Ok");
  CHECK(std::string(hk_status_name(HK_NOT_PURE)) == "NotPure");
  CHECK(std::string(hk_status_name(HK_DENOMINATOR_INDISTINGUISHABLE_FROM_ZERO)) == "DenominatorIndistinguishableFromZero");
  hk_eval_options o;
  hk_eval_options_default(&o);
  CHECK(o.bits == 192);
  CHECK(o.workers == 1);
  CHECK(o.tail == doctest::Approx(1e-10));
  CHECK(o.norm_bound == 0);
  CHECK(o.conjugate == 0);
}

TEST_CASE("fields") {
  hk_field* f = nullptr;
  CHECK(hk_field_from_json(R"J({"layers": [{"var": "i", "minpoly": "x^2+1"}, {"var": "t", "minpoly": "x^2-(4+i)"}]})J", &f) == HK_OK);
  REQUIRE(f != nullptr);
  CHECK(hk_field_degree(f) == 4);
  char* out = nullptr;
  REQUIRE(hk_field_discriminant(f, &out) == HK_OK);
  auto d = take(out);
  CHECK(d["command"] == "disc");
  CHECK(d["library_version"] == "0.1.0");
  REQUIRE(hk_field_info(f, &out) == HK_OK);
  auto info = take(out);
  CHECK(info["closure"]["order"] == 8);
  hk_field_free(f);

  hk_field* bad = nullptr;
  CHECK(hk_field_from_json(R"J({"layers": [{"var": "a", "minpoly": "x^2-1"}]})J", &bad) == HK_REDUCIBLE_LAYER);
  CHECK(bad == nullptr);
  CHECK(std::string(hk_last_error()).size() > 0);
  CHECK(hk_field_from_json("not json", &bad) == HK_PARSE_ERROR);
  CHECK(hk_field_from_catalog("Q(sqrt(-5))", &bad) == HK_INVALID_ARGUMENT);
  CHECK(hk_field_from_catalog(nullptr, &bad) == HK_INVALID_ARGUMENT);
  CHECK(hk_field_from_catalog("Q(i)", nullptr) == HK_INVALID_ARGUMENT);
  hk_field_free(nullptr);
}

TEST_CASE("infinity type reports") {
  Field q("Q(i)");
  char* out = nullptr;
  REQUIRE(hk_purity(q.f, "8,0", &out) == HK_OK);
  auto p = take(out);
  CHECK(p["pure"] == true);
  CHECK(p["weight"] == 8);
  CHECK(p["width"] == 8);
  CHECK(p["window"] == false);
  REQUIRE(hk_critical_set(q.f, "-8,0", "", &out) == HK_OK);
  auto c = take(out);
  CHECK(c["lo"] == 1);
  CHECK(c["hi"] == 8);
  CHECK(c["size"] == 8);
  CHECK(hk_purity(q.f, "8,x", &out) == HK_PARSE_ERROR);
  CHECK(hk_purity(q.f, "1,2,3", &out) == HK_INVALID_ARGUMENT);
  CHECK(hk_signatures(q.f, "8,0", &out) == HK_WINDOW_VIOLATED);

  Field h("Q(i,sqrt(4+i))");
  REQUIRE(hk_field_info(h.f, &out) == HK_OK);
  auto info = take(out);
  // base change of (3,-5) from Q(i)
  std::string csv;
  for (auto r : info["restriction_to_F1"]) csv += std::string(csv.empty() ? "" : ",") + (r.get<int>() == 0 ? "3" : "-5");
  REQUIRE(hk_signatures(h.f, csv.c_str(), &out) == HK_OK);
  auto s = take(out);
  CHECK(s["pass"] == true);
  CHECK(s["any_negative_product"] == true);
  CHECK(hk_purity(h.f, "3,-5,3,-5", &out) == HK_OK);
  hk_string_free(out);
}

TEST_CASE("characters and values") {
  hk_character* c = nullptr;
  REQUIRE(hk_character_from_json(R"J({"field": "Q(i)", "k": 8})J", &c) == HK_OK);
  hk_eval_options o;
  hk_eval_options_default(&o);
  o.norm_bound = 20000;
  char* out = nullptr;
  REQUIRE(hk_lvalue(c, "8", &o, &out) == HK_OK);
  auto v = take(out);
  CHECK(v["X"] == 20000);
  CHECK(std::stod(v["value_re"].get<std::string>()) == doctest::Approx(1.0639432588));
  CHECK(hk_lvalue(c, "4", &o, &out) == HK_OUTSIDE_CONVERGENCE);
  CHECK(hk_lvalue(c, "abc", &o, &out) == HK_PARSE_ERROR);
  REQUIRE(hk_ratio(c, 7, &o, &out) == HK_OK);
  auto r = take(out);
  CHECK(r["m"] == 7);
  CHECK(std::stod(r["ratio_re"].get<std::string>()) == doctest::Approx(20.0 / 21.0).epsilon(1e-7));
  CHECK(hk_ratio(c, 0, &o, &out) == HK_POLE_AT_S);
  CHECK(hk_lvalue(c, "8", nullptr, &out) == HK_OK);
  hk_string_free(out);
  hk_character_free(c);

  hk_character* bad = nullptr;
  CHECK(hk_character_from_json(R"J({"field": "Q(i)", "k": 6})J", &bad) == HK_UNIT_INCOMPATIBLE);
  CHECK(bad == nullptr);
  CHECK(std::string(hk_last_error()).find("unit") != std::string::npos);
}

TEST_CASE("errors are reported per thread") {
  hk_field* bad = nullptr;
  CHECK(hk_field_from_catalog("nope", &bad) == HK_INVALID_ARGUMENT);
  std::string other;
  std::thread t([&] { other = hk_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(hk_last_error()).empty());
}

TEST_CASE("shared field handles are usable from several threads") {
  Field h("Q(i,sqrt(4+i))");
  std::vector<std::thread> ts;
  std::vector<int> ok(4, 0);
  for (int k = 0; k < 4; ++k)
    ts.emplace_back([&, k] {
      char* out = nullptr;
      if (hk_field_discriminant(h.f, &out) == HK_OK) {
        ok[static_cast<size_t>(k)] = 1;
        hk_string_free(out);
      }
    });
  for (auto& t : ts) t.join();
  for (int v : ok) CHECK(v == 1);
}
