#pragma once

#include <cstdint>
#include <string>

#include "descartes/claims.hpp"

namespace descartes {

struct Config {
  int max_degree = 8;
  std::uint64_t budget = 200000;
  std::uint64_t seed = 1;
  int refinement_rounds = 3;
  Rational floor = Rational(1, 1000000000);
  long max_boxes = 400000;
  Rational truncation = 1000;
  std::uint64_t grid_point_cap = 5000000;
  std::uint64_t expand_term_cap = 1000000;
  std::string manifest = "claims/paper.json";
  std::string store;  // empty: no persistence
  int workers = 1;

  /// Applies `key = value`; throws ConfigError for unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  /// Throws ConfigError unless every bound is positive.
  void validate() const;
  /// Canonical `key = value` listing, used for hashing and reports.
  std::string canonical() const;
  std::string hash() const;

  SearchBudget search_budget() const { return {budget, seed, refinement_rounds}; }
  VerifyOptions verify_options() const;
};

/// Parses TOML-style text: `key = value` lines, `#` comments, optional
/// `[section]` headers (keys inside become section.key), quoted strings.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);

}  // namespace descartes
