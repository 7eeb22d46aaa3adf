#pragma once

#include <string>
#include <vector>

#include "descartes/config.hpp"
#include "descartes/error.hpp"
#include "json.hpp"

namespace descartes {

inline constexpr const char* kReportSchema = "descartes-report/1";

/// `body` is deterministic for a fixed seed and config; timings live in `metadata`.
struct ReportDocument {
  std::string command;
  nlohmann::ordered_json body = nlohmann::ordered_json::object();
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
  std::string text;
  int exit_code = 0;  // 0 ok, 1 refutation, 2 usage/config, 3 inadmissible input

  std::string json(bool with_metadata = true) const;
};

/// Published counts of orbits that are not realizable, d = 1..8.
int expected_not_realized(int degree);

ReportDocument cmd_classify(const Config& cfg, int degree);
ReportDocument cmd_orbit(const Config& cfg, const std::string& pattern, int pos, int neg);
ReportDocument cmd_verify(const Config& cfg, const std::string& manifest_path, const std::vector<std::string>& only);
ReportDocument cmd_search(const Config& cfg, const std::string& pattern, int pos, int neg);

/// Report for a failed command; maps the error code onto the exit code.
ReportDocument error_report(const std::string& command, ErrorCode code, const std::string& message);

}  // namespace descartes
