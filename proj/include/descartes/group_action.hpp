#pragma once

#include <optional>
#include <string>
#include <vector>

#include "descartes/root_counting.hpp"
#include "descartes/sign_pattern.hpp"

namespace descartes {

/// A monic polynomial whose exact root counts witness a couple.
struct RealizationCertificate {
  Polynomial poly;
  Couple couple;
  RootCountSummary summary;
  bool all_roots_simple = false;
};

/// Builds a certificate for `poly` claiming `couple`, or nullopt when the
/// polynomial does not realize it (pattern, counts, simplicity are all checked).
std::optional<RealizationCertificate> certify(const Polynomial& poly, const Couple& couple);

/// Re-verifies every field of a certificate from the polynomial alone.
bool verify_certificate(const RealizationCertificate& cert);

SignPattern revert(const SignPattern& pattern);
SignPattern mirror(const SignPattern& pattern);

Couple revert(const Couple& couple);
Couple mirror(const Couple& couple);

/// x^d P(1/x) / P(0). Throws ZeroConstantTerm.
Polynomial revert(const Polynomial& poly);
/// (-1)^d P(-x).
Polynomial mirror(const Polynomial& poly);

struct Orbit {
  std::vector<Couple> couples;  // sorted, distinct
  const Couple& canonical() const { return couples.front(); }
};

Orbit orbit(const Couple& couple);
Couple canonical(const Couple& couple);

enum class Generator { Revert, Mirror };

RealizationCertificate transport_certificate(const RealizationCertificate& cert, Generator g);

/// Certificate for `target` obtained by moving `cert` along the group; target
/// must lie in the orbit of cert.couple.
std::optional<RealizationCertificate> transport_to(const RealizationCertificate& cert, const Couple& target);

}  // namespace descartes
