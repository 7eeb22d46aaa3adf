#include "descartes/report.hpp"

#include <chrono>
#include <ctime>
#include <set>
#include <sstream>

#include "descartes/error.hpp"
#include "descartes/store.hpp"

namespace descartes {

using ojson = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void stamp(ReportDocument& r, const Config& cfg, Clock::time_point t0) {
  r.metadata["engine"] = kEngineVersion;
  r.metadata["timestamp"] = utc_timestamp();
  r.metadata["elapsed_seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
  r.metadata["config_hash"] = cfg.hash();
  r.metadata["seed"] = cfg.seed;
  r.metadata["workers"] = cfg.workers;
}

ojson couple_json(const Couple& c) {
  ojson j;
  j["pattern"] = c.pattern.to_string();
  j["pos"] = c.pair.pos;
  j["neg"] = c.pair.neg;
  return j;
}

ojson certificate_json(const RealizationCertificate& cert) {
  ojson j;
  j["couple"] = cert.couple.key();
  ojson cs = ojson::array();
  for (const auto& c : cert.poly.coeffs()) cs.push_back(to_string(c));
  j["coeffs_ascending"] = cs;
  j["polynomial"] = cert.poly.to_string();
  return j;
}

std::string pad(std::string s, std::size_t n) {
  if (s.size() < n) s.append(n - s.size(), ' ');
  return s;
}

// One-line digest of a claim's evidence for the text table.
std::string brief(const ClaimResult& r) {
  const auto& e = r.evidence;
  std::ostringstream os;
  if (e.contains("error")) return e.value("error", "") + ": " + e.value("message", "");
  switch (r.kind) {
    case ClaimKind::PolyIdentity:
      os << "strategy " << e.value("strategy", "?");
      if (e.contains("grid_points")) os << ", " << e["grid_points"].get<std::uint64_t>() << " grid points";
      if (e.contains("witness")) os << ", witness " << e["witness"].dump();
      if (e.contains("witness_monomial")) os << ", deviation at " << e["witness_monomial"].get<std::string>();
      break;
    case ClaimKind::UnivariateRoots: {
      os << e.value("distinct_real_roots_in_range", 0) << " roots:";
      for (const auto& x : e["roots"]) os << " " << x.value("approx", "");
      break;
    }
    case ClaimKind::BoxPositivity: {
      long n = 0;
      for (const auto& b : e["boxes"]) n += b.value("subdivisions", 0L);
      os << n << " sub-boxes";
      for (const auto& b : e["boxes"])
        if (b.contains("witness")) os << ", witness " << b["witness"].dump();
      break;
    }
    case ClaimKind::KappaList:
      os << "kappa =";
      for (const auto& v : e["values"]) os << " " << v.value("kappa", "");
      break;
    case ClaimKind::RankClaim:
      os << "rank " << e.value("expected_rank", 0) << " at " << e.value("valid_points", 0) << " points";
      break;
    case ClaimKind::SearchConsistency:
      os << e.value("result", e.contains("certificate") ? "FOUND" : "") << " after " << e.value("samples", 0ULL)
         << " samples";
      if (e.contains("control")) os << "; control " << (e.value("control_found", false) ? "found" : "missing");
      break;
    case ClaimKind::NoPositiveSolution:
      os << "method " << e.value("method", "") << ", " << e.value("candidate_boxes", 0L) << " candidate boxes";
      break;
    case ClaimKind::RadicalChain:
      os << e["steps"].size() << " steps";
      break;
    case ClaimKind::DescartesConsequences:
      os << e.value("hyperbolic_passed", 0) << "/" << e.value("hyperbolic_samples", 0) << " hyperbolic, "
         << e.value("quartic_passed", 0) << " quartic, " << e.value("convolution_passed", 0) << " convolution";
      break;
    case ClaimKind::CoeffPositivity:
      os << e.value("numerator_terms", 0) << " numerator terms";
      break;
  }
  return os.str();
}

}  // namespace

std::string ReportDocument::json(bool with_metadata) const {
  ojson doc;
  doc["schema"] = kReportSchema;
  doc["command"] = command;
  doc["exit_code"] = exit_code;
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  if (with_metadata) doc["metadata"] = metadata;
  return doc.dump(2);
}

int expected_not_realized(int degree) {
  static const int table[] = {0, 0, 0, 0, 1, 1, 4, 6, 19};
  return degree >= 1 && degree <= 8 ? table[degree] : -1;
}

ReportDocument error_report(const std::string& command, ErrorCode code, const std::string& message) {
  ReportDocument r;
  r.command = command;
  r.body["error"] = to_string(code);
  r.body["message"] = message;
  r.exit_code = code == ErrorCode::InadmissiblePair ? 3 : 2;
  r.text = std::string("error: ") + to_string(code) + ": " + message + "\n";
  return r;
}

ReportDocument cmd_classify(const Config& cfg, int degree) {
  auto t0 = Clock::now();
  ReportDocument r;
  r.command = "classify";
  if (degree < 1 || degree > cfg.max_degree)
    return error_report("classify", ErrorCode::ConfigError,
                        "degree must be in 1.." + std::to_string(cfg.max_degree));
  CertificatePool pool;
  std::set<std::string> known;
  std::vector<std::string> warnings;
  if (!cfg.store.empty()) {
    auto contents = ResultStore(cfg.store).load();
    for (const auto& c : contents.certificates) {
      pool.put(c);
      known.insert(c.couple.key());
    }
    warnings = contents.warnings;
  }
  ClassificationReport rep = classify_degree(degree, cfg.search_budget(), pool, cfg.workers);

  r.body["parameters"] = {{"degree", degree}, {"budget", cfg.budget}, {"seed", cfg.seed}};
  ojson orbits = ojson::array();
  std::ostringstream text;
  text << "classify: degree " << degree << ", budget " << cfg.budget << ", seed " << cfg.seed << "\n";
  for (const auto& o : rep.orbits) {
    ojson oj;
    oj["canonical"] = o.orbit.canonical().key();
    ojson members = ojson::array();
    for (const auto& c : o.orbit.couples) members.push_back(c.key());
    oj["members"] = members;
    oj["status"] = to_string(o.status);
    oj["method"] = o.method;
    oj["samples"] = o.samples;
    if (o.certificate) oj["certificate"] = certificate_json(*o.certificate);
    orbits.push_back(oj);
    if (o.status != OrbitStatus::Realized)
      text << "  " << pad(o.orbit.canonical().key(), 24) << " " << to_string(o.status) << " (" << o.orbit.couples.size()
           << " members)\n";
  }
  r.body["orbits"] = orbits;
  int expected = expected_not_realized(degree);
  ojson summary;
  summary["orbits"] = rep.orbits.size();
  summary["couples"] = rep.couples;
  summary["realized"] = rep.realized;
  summary["nonrealizable_by_kappa"] = rep.nonrealizable_by_kappa;
  summary["unresolved"] = rep.unresolved;
  summary["not_realized"] = rep.not_realized();
  summary["expected_not_realized"] = expected >= 0 ? ojson(expected) : ojson(nullptr);
  summary["matches_expected"] = expected >= 0 ? ojson(expected == rep.not_realized()) : ojson(nullptr);
  r.body["summary"] = summary;
  text << "summary: " << rep.orbits.size() << " orbits, " << rep.realized << " realized, "
       << rep.nonrealizable_by_kappa << " excluded by kappa, " << rep.unresolved << " unresolved; not realized "
       << rep.not_realized();
  if (expected >= 0) text << " (expected: " << expected << (expected == rep.not_realized() ? ", match)" : ", MISMATCH)");
  text << "\n";

  if (!cfg.store.empty()) {
    std::vector<RealizationCertificate> fresh;
    for (const auto& c : pool.all())
      if (!known.count(c.couple.key())) fresh.push_back(c);
    ResultStore(cfg.store).append(fresh);
    r.metadata["store_appended"] = fresh.size();
    r.metadata["store_warnings"] = warnings;
  }
  r.text = text.str();
  stamp(r, cfg, t0);
  return r;
}

ReportDocument cmd_orbit(const Config& cfg, const std::string& pattern, int pos, int neg) {
  auto t0 = Clock::now();
  ReportDocument r;
  r.command = "orbit";
  Couple couple(SignPattern::parse(pattern), {pos, neg});
  Orbit orb = orbit(couple);
  r.body["couple"] = couple_json(couple);
  ojson members = ojson::array();
  std::ostringstream text;
  text << "orbit of " << couple.key() << ": " << orb.couples.size() << " members\n";
  for (const auto& c : orb.couples) {
    members.push_back(couple_json(c));
    text << "  " << c.key() << (c == orb.canonical() ? "  (canonical)" : "") << "\n";
  }
  r.body["members"] = members;
  r.body["canonical"] = couple_json(orb.canonical());
  r.body["excluded_by_kappa"] = excluded_by_kappa(couple);
  r.text = text.str();
  stamp(r, cfg, t0);
  return r;
}

ReportDocument cmd_search(const Config& cfg, const std::string& pattern, int pos, int neg) {
  auto t0 = Clock::now();
  ReportDocument r;
  r.command = "search";
  Couple couple(SignPattern::parse(pattern), {pos, neg});
  r.body["couple"] = couple_json(couple);
  r.body["budget"] = cfg.budget;
  r.body["seed"] = cfg.seed;
  std::optional<RealizationCertificate> cert = base_construction(couple);
  std::uint64_t samples = 0;
  std::string method = "base";
  if (!cert) {
    SearchOutcome out = search_realizer(couple, cfg.search_budget());
    cert = out.certificate;
    samples = out.samples;
    method = "search";
  }
  r.body["samples"] = samples;
  std::ostringstream text;
  if (cert) {
    r.body["result"] = "Found";
    r.body["method"] = method;
    r.body["certificate"] = certificate_json(*cert);
    text << "search " << couple.key() << ": certificate " << cert->poly.to_string() << "\n";
    if (!cfg.store.empty()) ResultStore(cfg.store).append(*cert);
  } else {
    r.body["result"] = "NotFound";
    text << "search " << couple.key() << ": NotFound after " << samples << " samples\n";
  }
  r.text = text.str();
  stamp(r, cfg, t0);
  return r;
}

ReportDocument cmd_verify(const Config& cfg, const std::string& manifest_path, const std::vector<std::string>& only) {
  auto t0 = Clock::now();
  ReportDocument r;
  r.command = "verify";
  Manifest m = load_manifest(manifest_path);
  for (const auto& id : only) {
    bool found = false;
    for (const auto& c : m.claims) found = found || c.id == id;
    if (!found) throw Error(ErrorCode::ManifestParse, "no claim with id '" + id + "'");
  }
  auto results = run_manifest(m, cfg.verify_options(), only, cfg.workers);
  int verified = 0, refuted = 0, inconclusive = 0;
  ojson claims = ojson::array();
  ojson timings = ojson::object();
  std::ostringstream text, pending;
  text << "verify: " << manifest_path << " (" << results.size() << " claims)\n";
  for (const auto& res : results) {
    ojson cj;
    cj["id"] = res.id;
    cj["kind"] = to_string(res.kind);
    cj["citation"] = res.citation;
    cj["verdict"] = to_string(res.verdict);
    cj["evidence"] = res.evidence;
    claims.push_back(cj);
    timings[res.id] = res.seconds;
    switch (res.verdict) {
      case Verdict::Verified: ++verified; break;
      case Verdict::Refuted: ++refuted; break;
      case Verdict::Inconclusive: ++inconclusive; break;
    }
    std::string line = "  " + pad(res.id, 34) + " " + pad(to_string(res.kind), 22) + " " +
                       pad(to_string(res.verdict), 12) + " " + brief(res) + "\n";
    if (res.verdict == Verdict::Inconclusive) pending << line;
    else text << line;
  }
  if (inconclusive) text << "inconclusive:\n" << pending.str();
  text << "summary: " << verified << " verified, " << refuted << " refuted, " << inconclusive << " inconclusive\n";
  r.body["manifest"] = manifest_path;
  r.body["claims"] = claims;
  r.body["summary"] = {{"verified", verified}, {"refuted", refuted}, {"inconclusive", inconclusive}};
  r.metadata["claim_seconds"] = timings;
  r.exit_code = refuted ? 1 : 0;
  if (!cfg.store.empty())
    for (const auto& res : results) ResultStore(cfg.store).append(res);
  r.text = text.str();
  stamp(r, cfg, t0);
  return r;
}

}  // namespace descartes
