// Exercises the shared library through its C interface only.
#include <cstring>
#include <string>

#include "descartes/descartes.h"
#include "doctest.h"
#include "json.hpp"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  dsc_string_free(s);
  return out;
}

struct Poly {
  dsc_poly* p = nullptr;
  explicit Poly(const char* text) { REQUIRE(dsc_poly_parse(text, &p) == DSC_OK); }
  ~Poly() { dsc_poly_free(p); }
};

}  // namespace

TEST_CASE("C API: polynomials") {
  Poly p("-1,0,1");
  int deg = 0;
  CHECK(dsc_poly_degree(p.p, &deg) == DSC_OK);
  CHECK(deg == 2);
  char* s = nullptr;
  CHECK(dsc_poly_to_string(p.p, &s) == DSC_OK);
  CHECK(take(s) == "-1,0,1");

  dsc_root_summary sum{};
  CHECK(dsc_poly_root_summary(p.p, &sum) == DSC_OK);
  CHECK(sum.pos_distinct == 1);
  CHECK(sum.neg_distinct == 1);
  int n = -1;
  CHECK(dsc_poly_count_roots_in(p.p, "0", "2", &n) == DSC_OK);
  CHECK(n == 1);

  CHECK(dsc_poly_sign_pattern(p.p, &s) == DSC_ZERO_COEFFICIENT);
  CHECK(std::strlen(dsc_last_error()) > 0);
  Poly q("-2,1,1");
  CHECK(dsc_poly_sign_pattern(q.p, &s) == DSC_OK);
  CHECK(take(s) == "++-");
  int ok = 0;
  CHECK(dsc_certify(q.p, "++-", 1, 1, &ok) == DSC_OK);
  CHECK(ok == 1);
  CHECK(dsc_certify(q.p, "++-", 1, 0, &ok) == DSC_INADMISSIBLE_PAIR);

  const char* coeffs[] = {"1/2", "3", "1"};
  dsc_poly* r = nullptr;
  CHECK(dsc_poly_from_coeffs(coeffs, 3, &r) == DSC_OK);
  CHECK(dsc_poly_to_string(r, &s) == DSC_OK);
  CHECK(take(s) == "1/2,3,1");
  dsc_poly_free(r);

  dsc_poly* bad = nullptr;
  CHECK(dsc_poly_parse("1,x", &bad) == DSC_PARSE_ERROR);
  CHECK(bad == nullptr);
  CHECK(dsc_poly_degree(nullptr, &deg) == DSC_INVALID_ARGUMENT);
  CHECK(std::string(dsc_status_name(DSC_MANIFEST_PARSE)) == "ManifestParse");
  CHECK(std::string(dsc_version()).size() > 0);
}

TEST_CASE("C API: patterns") {
  int c = 0, p = 0;
  CHECK(dsc_descartes_pair("+-----+++++-", &c, &p) == DSC_OK);
  CHECK(c == 3);
  CHECK(p == 8);
  CHECK(dsc_descartes_pair("-+", &c, &p) == DSC_BAD_PATTERN);
  char* s = nullptr;
  CHECK(dsc_admissible_pairs("++-++", &s) == DSC_OK);
  auto j = nlohmann::json::parse(take(s));
  CHECK(j.size() == 4);
  CHECK(dsc_kappa(1, 5, 5, &s) == DSC_OK);
  CHECK(take(s) == "32/5");
  CHECK(dsc_kappa(0, 5, 5, &s) == DSC_INVALID_ARGUMENT);
}

TEST_CASE("C API: configuration and commands") {
  dsc_config* cfg = nullptr;
  REQUIRE(dsc_config_new(&cfg) == DSC_OK);
  CHECK(dsc_config_set(cfg, "budget", "20000") == DSC_OK);
  CHECK(dsc_config_set(cfg, "bogus", "1") == DSC_CONFIG_ERROR);
  CHECK(dsc_config_set(cfg, "seed", "x") == DSC_CONFIG_ERROR);
  dsc_config* missing = nullptr;
  CHECK(dsc_config_load("/nonexistent.toml", &missing) == DSC_CONFIG_ERROR);

  dsc_report* rep = nullptr;
  REQUIRE(dsc_cmd_orbit(cfg, "++-++", 2, 0, &rep) == DSC_OK);
  CHECK(dsc_report_exit_code(rep) == 0);
  char* js = nullptr;
  REQUIRE(dsc_report_json(rep, 0, &js) == DSC_OK);
  auto doc = nlohmann::json::parse(take(js));
  CHECK(doc["members"].size() == 2);
  CHECK(std::string(dsc_report_text(rep)).find("+---+") != std::string::npos);
  dsc_report_free(rep);

  REQUIRE(dsc_cmd_orbit(cfg, "++", 1, 0, &rep) == DSC_OK);
  CHECK(dsc_report_exit_code(rep) == 3);
  dsc_report_free(rep);

  REQUIRE(dsc_cmd_search(cfg, "++-++", 2, 2, &rep) == DSC_OK);
  REQUIRE(dsc_report_json(rep, 0, &js) == DSC_OK);
  CHECK(nlohmann::json::parse(take(js))["result"] == "Found");
  dsc_report_free(rep);

  const std::string manifest = std::string(DESCARTES_SOURCE_DIR) + "/claims/paper.json";
  REQUIRE(dsc_cmd_verify(cfg, manifest.c_str(), "kappa-list,theorem-consistency", &rep) == DSC_OK);
  CHECK(dsc_report_exit_code(rep) == 0);
  REQUIRE(dsc_report_json(rep, 1, &js) == DSC_OK);
  auto vj = nlohmann::json::parse(take(js));
  CHECK(vj["claims"].size() == 2);
  CHECK(vj.contains("metadata"));
  dsc_report_free(rep);

  REQUIRE(dsc_cmd_verify(cfg, "missing.json", nullptr, &rep) == DSC_OK);
  CHECK(dsc_report_exit_code(rep) == 2);
  dsc_report_free(rep);

  REQUIRE(dsc_cmd_classify(cfg, 3, &rep) == DSC_OK);
  CHECK(dsc_report_exit_code(rep) == 0);
  dsc_report_free(rep);
  REQUIRE(dsc_cmd_classify(cfg, 0, &rep) == DSC_OK);
  CHECK(dsc_report_exit_code(rep) == 2);
  dsc_report_free(rep);
  CHECK(dsc_cmd_classify(nullptr, 3, &rep) == DSC_INVALID_ARGUMENT);
  dsc_config_free(cfg);
}
