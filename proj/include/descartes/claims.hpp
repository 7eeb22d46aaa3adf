#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "descartes/box_positivity.hpp"
#include "descartes/expression.hpp"
#include "descartes/realizability.hpp"
#include "json.hpp"

namespace descartes {

enum class ClaimKind {
  PolyIdentity,
  UnivariateRoots,
  BoxPositivity,
  CoeffPositivity,
  RankClaim,
  RadicalChain,
  SearchConsistency,
  KappaList,
  DescartesConsequences,
  NoPositiveSolution,
};
const char* to_string(ClaimKind k);
ClaimKind parse_claim_kind(const std::string& s);  // throws UnknownClaimKind

struct ExpectedRoot {
  Rational value;
  Rational tolerance;
};

struct BoxSpec {
  std::string var;
  Rational lo;
  std::optional<Rational> hi;  // nullopt: +infinity
};

/// A linear side condition: `var` is chosen so that `equation` vanishes.
struct SolveStep {
  std::string var;
  std::string equation;
};

struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::PolyIdentity;
  std::string citation;
  std::string note;
  std::vector<std::string> variables;
  std::vector<std::pair<std::string, std::string>> definitions;  // local, shadow the globals
  std::map<std::string, std::string> expressions;                // lhs/rhs, p, f, ...

  // PolyIdentity
  std::string strategy = "auto";  // auto | expand | grid | both
  std::optional<Rational> coeff_tolerance;

  // UnivariateRoots
  std::vector<ExpectedRoot> expected_roots;
  std::optional<int> expected_count;
  std::optional<Rational> range_lo, range_hi;  // open interval; missing = unbounded

  // BoxPositivity
  std::vector<std::vector<BoxSpec>> boxes;
  bool strict = true;

  // RankClaim
  std::vector<std::vector<std::string>> matrix;
  std::map<std::string, std::pair<Rational, Rational>> parameters;  // sampling ranges
  std::vector<SolveStep> solve;
  std::vector<std::string> positive;  // must be > 0 at a valid point
  std::vector<std::string> nonzero;   // must be != 0 at a valid point
  std::optional<int> expected_rank;
  int trials = 20;

  // NoPositiveSolution
  std::vector<std::string> equations;

  // RadicalChain: every step must hold.
  std::vector<Claim> steps;

  // SearchConsistency
  std::string pattern;
  int pos = 0, neg = 0;
  std::string control_pattern;
  int control_pos = 0, control_neg = 0;
  std::uint64_t budget = 1000000;

  // KappaList
  int m = 1, n = 1;
  std::vector<int> q;
  std::vector<Rational> expected_values;

  // DescartesConsequences
  int samples = 10000;

  std::uint64_t seed = 1;
};

struct ClaimResult {
  std::string id;
  ClaimKind kind = ClaimKind::PolyIdentity;
  Verdict verdict = Verdict::Inconclusive;
  std::string citation;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  double seconds = 0;
};

struct VerifyOptions {
  PositivityOptions positivity;
  std::size_t expand_term_cap = 1000000;
  std::uint64_t grid_point_cap = 5000000;
  std::optional<std::uint64_t> search_budget;  // overrides SearchConsistency budgets
};

struct Manifest {
  std::string schema;
  std::vector<std::pair<std::string, std::string>> definitions;
  std::vector<Claim> claims;
};

Manifest parse_manifest(const std::string& json_text);  // throws ManifestParse / UnknownClaimKind
Manifest load_manifest(const std::string& path);
Claim parse_claim(const nlohmann::json& j);

/// Verifies one claim; `globals` supplies manifest-level definitions.
ClaimResult verify_claim(const Claim& claim, const Scope& globals, const VerifyOptions& opts = {});

/// Runs every claim (optionally only ids in `only`) on `workers` threads; results keep manifest order.
std::vector<ClaimResult> run_manifest(const Manifest& m, const VerifyOptions& opts = {},
                                      const std::vector<std::string>& only = {}, int workers = 1);

// Direct entry points, also used by the claim dispatcher.
ClaimResult verify_identity(const std::string& lhs, const std::string& rhs, const Scope& scope,
                            const std::string& strategy = "auto", const VerifyOptions& opts = {});
ClaimResult verify_univariate_roots(const Polynomial& p, const std::vector<ExpectedRoot>& expected,
                                    std::optional<int> expected_count,
                                    std::optional<Rational> lo = std::nullopt,
                                    std::optional<Rational> hi = std::nullopt);
ClaimResult verify_coeff_positivity(const RatFunc& f);
ClaimResult verify_rank(const std::vector<std::vector<Rational>>& matrix, int expected_rank);
ClaimResult verify_descartes_consequences(int samples, std::uint64_t seed);
ClaimResult theorem_consistency_search(const SearchBudget& budget);
ClaimResult verify_kappa_list(int m, int n, const std::vector<int>& q, const std::vector<Rational>& expected);

/// Decimal rendering with `digits` significant places after the point.
std::string to_decimal(const Rational& r, int digits = 12);

}  // namespace descartes
