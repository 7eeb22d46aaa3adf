#pragma once

#include <string>
#include <vector>

#include "descartes/claims.hpp"
#include "descartes/group_action.hpp"

namespace descartes {

inline constexpr const char* kEngineVersion = "descartes-engine/1";

struct StoredClaim {
  std::string id;
  std::string kind;
  std::string verdict;
};

struct StoreContents {
  std::vector<RealizationCertificate> certificates;  // each re-verified on load
  std::vector<StoredClaim> claims;
  std::vector<std::string> warnings;                 // one per skipped line
};

/// Append-only newline-delimited JSON log. Single writer.
class ResultStore {
 public:
  explicit ResultStore(std::string path) : path_(std::move(path)) {}
  const std::string& path() const { return path_; }

  /// Missing file reads as empty. Corrupted or non-verifying lines are skipped.
  StoreContents load() const;
  void append(const RealizationCertificate& cert) const;
  void append(const std::vector<RealizationCertificate>& certs) const;
  void append(const ClaimResult& result) const;

 private:
  std::string path_;
};

std::string certificate_record(const RealizationCertificate& cert);

}  // namespace descartes
