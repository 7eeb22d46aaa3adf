#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "descartes/group_action.hpp"

namespace descartes {

/// m pluses, n minuses, q pluses; degree m+n+q-1.
struct TwoChangePattern {
  int m = 1;
  int n = 1;
  int q = 1;
  int degree() const { return m + n + q - 1; }
  SignPattern pattern() const;
};

/// Recognizes a pattern with exactly two sign changes.
std::optional<TwoChangePattern> as_two_change(const SignPattern& pattern);

Rational kappa(const TwoChangePattern& tp);

struct TwoChangeVerdict {
  Rational kappa;
  /// Set when kappa >= 4: the pair (0, d-2) cannot be realized.
  std::optional<AdmissiblePair> nonrealizable;
  /// Pairs (2, v) that are realizable by the criterion and still need a certificate.
  std::vector<AdmissiblePair> realizable;
};

TwoChangeVerdict two_change_verdict(const TwoChangePattern& tp);

/// True when the couple is excluded by the kappa criterion.
bool excluded_by_kappa(const Couple& couple);

struct SearchBudget {
  std::uint64_t max_samples = 200000;  // loss evaluations
  std::uint64_t rng_seed = 1;
  int refinement_rounds = 3;           // rounding precisions tried per hit
};

/// Glues two certificates with eps^{d2} P1(x) P2(x/eps), eps = 1/2, 1/4, ...
/// Throws EpsilonExhausted below 2^-64.
RealizationCertificate concatenate(const RealizationCertificate& p1, const RealizationCertificate& p2);

/// The pattern that concatenating realizers of p1 and p2 produces.
SignPattern concatenated_pattern(const SignPattern& p1, const SignPattern& p2);

/// Closed-form realizers for a few families (products of linear factors).
std::optional<RealizationCertificate> base_construction(const Couple& couple);

struct SearchOutcome {
  std::optional<RealizationCertificate> certificate;
  std::uint64_t samples = 0;
};

/// Randomized search over root configurations with exact verification.
/// Failure is not a proof of nonrealizability.
SearchOutcome search_realizer(const Couple& couple, const SearchBudget& budget);

/// Thread-safe store of certificates keyed by couple.
class CertificatePool {
 public:
  std::optional<RealizationCertificate> get(const Couple& c) const;
  void put(const RealizationCertificate& cert);
  std::vector<RealizationCertificate> all() const;
  std::size_t size() const;
  bool degree_done(int d) const;
  void mark_degree_done(int d);

 private:
  mutable std::mutex mu_;
  std::map<std::string, RealizationCertificate> certs_;
  std::set<int> done_;
};

enum class OrbitStatus { Realized, NonrealizableByKappa, Unresolved };
const char* to_string(OrbitStatus s);

struct OrbitResult {
  Orbit orbit;
  OrbitStatus status = OrbitStatus::Unresolved;
  std::string method;  // stored | base | concatenation | search | kappa | none
  std::optional<RealizationCertificate> certificate;  // for the canonical member
  std::uint64_t samples = 0;
};

struct ClassificationReport {
  int degree = 0;
  std::vector<OrbitResult> orbits;  // sorted by canonical member
  int realized = 0;
  int nonrealizable_by_kappa = 0;
  int unresolved = 0;
  int couples = 0;
  /// Orbits without a certificate: the quantity comparable with published counts.
  int not_realized() const { return nonrealizable_by_kappa + unresolved; }
};

/// Every admissible couple of the degree, grouped into orbits.
std::vector<Orbit> orbits_of_degree(int degree);

/// Classifies degree d. Lower degrees are classified first (into `pool`) so
/// that concatenation has building blocks.
ClassificationReport classify_degree(int degree, const SearchBudget& budget, CertificatePool& pool,
                                     int workers = 1);

/// Runs fn(i) for i in [0, n) on up to `workers` threads.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace descartes
