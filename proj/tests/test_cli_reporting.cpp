#include <cstdio>
#include <filesystem>
#include <fstream>

#include "descartes/config.hpp"
#include "descartes/error.hpp"
#include "descartes/report.hpp"
#include "descartes/store.hpp"
#include "doctest.h"

using namespace descartes;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("descartes_test_" + name);
  std::filesystem::remove(p);
  return p;
}

Config test_config() {
  Config c;
  c.manifest = std::string(DESCARTES_SOURCE_DIR) + "/claims/paper.json";
  return c;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("config parsing") {
  auto c = parse_config(R"(# comment
[search]
budget = 5000
seed = 42   # trailing comment
[verify]
floor = 1e-6
truncation = "1000"
manifest = "claims/paper.json"
workers = 2
)");
  CHECK(c.budget == 5000);
  CHECK(c.seed == 42);
  CHECK(c.floor == Rational(1, 1000000));
  CHECK(c.workers == 2);
  CHECK(c.manifest == "claims/paper.json");
  CHECK(c.hash() == parse_config(c.canonical()).hash());
  CHECK(c.hash() != Config{}.hash());

  auto config_code = [](const std::string& text) {
    try {
      parse_config(text).validate();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(config_code("nonsense = 1") == ErrorCode::ConfigError);
  CHECK(config_code("budget = -3") == ErrorCode::ConfigError);
  CHECK(config_code("budget") == ErrorCode::ConfigError);
  CHECK(config_code("max_degree = 0") == ErrorCode::ConfigError);
  CHECK(config_code("workers = 0") == ErrorCode::ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/descartes.toml"), Error);
}

TEST_CASE("store round trip") {
  auto path = temp_file("store.ndjson");
  ResultStore store(path.string());
  CHECK(store.load().certificates.empty());

  auto cert = certify(Polynomial{-2, 1, 1}, Couple(SignPattern::parse("++-"), {1, 1}));
  REQUIRE(cert);
  store.append(*cert);
  ClaimResult cr;
  cr.id = "k";
  cr.kind = ClaimKind::KappaList;
  cr.verdict = Verdict::Verified;
  store.append(cr);
  {
    std::ofstream out(path, std::ios::app);
    out << "{broken json\n";
    // A record claiming a couple its polynomial does not realize.
    auto forged = nlohmann::json::parse(certificate_record(*cert));
    forged["pos"] = 3;
    out << forged.dump() << "\n";
  }
  auto loaded = store.load();
  REQUIRE(loaded.certificates.size() == 1);
  CHECK(loaded.certificates[0].poly == cert->poly);
  CHECK(verify_certificate(loaded.certificates[0]));
  REQUIRE(loaded.claims.size() == 1);
  CHECK(loaded.claims[0].verdict == "Verified");
  CHECK(loaded.warnings.size() == 2);
  std::filesystem::remove(path);
}

TEST_CASE("reports are deterministic and carry exit codes") {
  auto cfg = test_config();
  auto a = cmd_classify(cfg, 4), b = cmd_classify(cfg, 4);
  CHECK(a.json(false) == b.json(false));
  CHECK(a.exit_code == 0);
  auto doc = nlohmann::json::parse(a.json(true));
  CHECK(doc["schema"] == kReportSchema);
  CHECK(doc["summary"]["not_realized"] == 1);
  CHECK(doc["summary"]["matches_expected"] == true);
  CHECK(doc.contains("metadata"));
  CHECK_FALSE(nlohmann::json::parse(a.json(false)).contains("metadata"));
  CHECK(a.text.find("summary:") != std::string::npos);

  auto orb = cmd_orbit(cfg, "+++", 0, 0);
  CHECK(nlohmann::json::parse(orb.json(false))["members"].size() == 2);
  CHECK(code_of([&] { cmd_orbit(cfg, "++", 1, 0); }) == ErrorCode::InadmissiblePair);
  CHECK(code_of([&] { cmd_orbit(cfg, "+x", 0, 1); }) == ErrorCode::BadPattern);

  auto found = nlohmann::json::parse(cmd_search(cfg, "++", 0, 1).json(false));
  CHECK(found["result"] == "Found");
  CHECK(found["certificate"]["polynomial"] == "1,1");

  cfg.budget = 20000;
  auto nf = cmd_search(cfg, "+-----+++++-", 1, 8);
  CHECK(nlohmann::json::parse(nf.json(false))["result"] == "NotFound");
  CHECK(nf.exit_code == 0);

  auto kv = cmd_verify(cfg, cfg.manifest, {"kappa-list"});
  CHECK(kv.exit_code == 0);
  CHECK(kv.text.find("32/5") != std::string::npos);
  CHECK(code_of([&] { cmd_verify(cfg, "missing.json", {}); }) == ErrorCode::ManifestParse);
  auto err = cmd_verify(cfg, std::string(DESCARTES_SOURCE_DIR) + "/claims/errata.json", {});
  CHECK(err.exit_code == 1);
  CHECK(error_report("verify", ErrorCode::InadmissiblePair, "x").exit_code == 3);
  CHECK(error_report("verify", ErrorCode::ConfigError, "x").exit_code == 2);
  CHECK(expected_not_realized(8) == 19);
}

TEST_CASE("classification persists certificates") {
  auto path = temp_file("classify.ndjson");
  auto cfg = test_config();
  cfg.store = path.string();
  auto first = cmd_classify(cfg, 3);
  auto n = ResultStore(cfg.store).load().certificates.size();
  CHECK(n > 0);
  auto second = cmd_classify(cfg, 3);
  CHECK(nlohmann::json::parse(second.json(false))["summary"] == nlohmann::json::parse(first.json(false))["summary"]);
  int stored = 0;
  auto doc = nlohmann::json::parse(second.json(false));
  for (const auto& o : doc["orbits"]) stored += o["method"] == "stored";
  CHECK(stored > 0);
  std::filesystem::remove(path);
}
