#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descartes/polynomial.hpp"

namespace descartes {

/// Signs of the coefficients from the leading one (index 0) down to the
/// constant term. Always starts with +.
class SignPattern {
 public:
  explicit SignPattern(std::vector<int8_t> signs);
  /// String over {+,-}, leading '+', e.g. "+-----+++++-".
  static SignPattern parse(std::string_view text);

  int degree() const { return static_cast<int>(signs_.size()) - 1; }
  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  /// Sign of the coefficient of x^power.
  int sign_of_power(int power) const { return signs_[static_cast<std::size_t>(degree() - power)]; }
  const std::vector<int8_t>& signs() const { return signs_; }
  std::string to_string() const;

  // + sorts before -, which makes "++-" < "+-+".
  std::strong_ordering operator<=>(const SignPattern& o) const;
  bool operator==(const SignPattern& o) const = default;

 private:
  std::vector<int8_t> signs_;
};

struct DescartesPair {
  int changes = 0;
  int preservations = 0;
  bool operator==(const DescartesPair&) const = default;
};

struct AdmissiblePair {
  int pos = 0;
  int neg = 0;
  auto operator<=>(const AdmissiblePair&) const = default;
};

struct Couple {
  SignPattern pattern;
  AdmissiblePair pair;

  /// Throws InadmissiblePair when the pair violates Descartes' conditions.
  Couple(SignPattern p, AdmissiblePair a);
  std::string key() const;
  std::strong_ordering operator<=>(const Couple& o) const;
  bool operator==(const Couple& o) const = default;
};

struct ComplexPair {
  Rational re;
  Rational im;  // > 0
};

/// Roots of a monic real polynomial. Negative roots are stored by absolute value.
struct RootConfiguration {
  std::vector<Rational> negative_roots;
  std::vector<Rational> positive_roots;
  std::vector<ComplexPair> complex_pairs;

  int degree() const {
    return static_cast<int>(negative_roots.size() + positive_roots.size() + 2 * complex_pairs.size());
  }
};

int sign_changes(std::span<const int8_t> signs);
DescartesPair descartes_pair(const SignPattern& pattern);
bool is_admissible(const SignPattern& pattern, const AdmissiblePair& pair);
std::vector<AdmissiblePair> admissible_pairs(const SignPattern& pattern);

/// Sign pattern of the coefficients, normalized so the leading sign is +.
/// Throws ZeroPolynomial or ZeroCoefficient.
SignPattern pattern_of(const Polynomial& poly);

Polynomial expand_from_roots(const RootConfiguration& config);

/// eps^deg * P(x/eps): the coefficient of x^i is scaled by eps^(deg-i).
Polynomial scale_substitute(const Polynomial& poly, const Rational& epsilon);

/// Every pattern of the given degree (2^degree of them), in lexicographic order.
std::vector<SignPattern> all_patterns(int degree);

}  // namespace descartes
