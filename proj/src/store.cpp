#include "descartes/store.hpp"

#include <fstream>

#include "descartes/error.hpp"

namespace descartes {

using json = nlohmann::json;

std::string certificate_record(const RealizationCertificate& cert) {
  json j;
  j["type"] = "certificate";
  j["engine"] = kEngineVersion;
  j["key"] = cert.couple.key();
  j["pattern"] = cert.couple.pattern.to_string();
  j["pos"] = cert.couple.pair.pos;
  j["neg"] = cert.couple.pair.neg;
  json coeffs = json::array();
  for (const auto& c : cert.poly.coeffs()) coeffs.push_back(to_string(c));  // ascending powers
  j["coeffs"] = coeffs;
  return j.dump();
}

StoreContents ResultStore::load() const {
  StoreContents out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto warn = [&](const std::string& why) {
      out.warnings.push_back(path_ + ":" + std::to_string(lineno) + ": skipped (" + why + ")");
    };
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      warn("malformed JSON");
      continue;
    }
    if (j.value("engine", "") != kEngineVersion) {
      warn("different engine version");
      continue;
    }
    std::string type = j.value("type", "");
    try {
      if (type == "certificate") {
        std::vector<Rational> cs;
        for (const auto& c : j.at("coeffs")) cs.push_back(parse_rational(c.get<std::string>()));
        Couple couple(SignPattern::parse(j.at("pattern").get<std::string>()),
                      {j.at("pos").get<int>(), j.at("neg").get<int>()});
        auto cert = certify(Polynomial(cs), couple);
        if (!cert) {
          warn("certificate does not re-verify");
          continue;
        }
        out.certificates.push_back(*cert);
      } else if (type == "claim") {
        out.claims.push_back({j.at("id").get<std::string>(), j.at("kind").get<std::string>(),
                              j.at("verdict").get<std::string>()});
      } else {
        warn("unknown record type");
      }
    } catch (const std::exception& e) {
      warn(e.what());
    }
  }
  return out;
}

void ResultStore::append(const RealizationCertificate& cert) const { append(std::vector{cert}); }

void ResultStore::append(const std::vector<RealizationCertificate>& certs) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot write store '" + path_ + "'");
  for (const auto& c : certs) out << certificate_record(c) << "\n";
}

void ResultStore::append(const ClaimResult& r) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot write store '" + path_ + "'");
  json j;
  j["type"] = "claim";
  j["engine"] = kEngineVersion;
  j["id"] = r.id;
  j["kind"] = to_string(r.kind);
  j["verdict"] = to_string(r.verdict);
  out << j.dump() << "\n";
}

}  // namespace descartes
