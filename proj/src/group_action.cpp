#include "descartes/group_action.hpp"

#include <algorithm>

#include "descartes/error.hpp"

namespace descartes {

std::optional<RealizationCertificate> certify(const Polynomial& poly, const Couple& couple) {
  if (poly.is_zero() || poly.leading() != 1) return std::nullopt;
  if (poly.degree() != couple.pattern.degree()) return std::nullopt;
  try {
    if (pattern_of(poly) != couple.pattern) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;  // a vanishing coefficient
  }
  auto s = root_summary(poly);
  bool simple = s.pos_distinct == s.pos_with_mult && s.neg_distinct == s.neg_with_mult && s.zero_mult == 0;
  if (!simple || s.pos_distinct != couple.pair.pos || s.neg_distinct != couple.pair.neg) return std::nullopt;
  return RealizationCertificate{poly, couple, s, true};
}

bool verify_certificate(const RealizationCertificate& cert) {
  auto fresh = certify(cert.poly, cert.couple);
  return fresh && fresh->summary == cert.summary && cert.all_roots_simple;
}

SignPattern revert(const SignPattern& pattern) {
  std::vector<int8_t> s(pattern.signs().rbegin(), pattern.signs().rend());
  int8_t lead = s.front();
  for (auto& v : s) v = static_cast<int8_t>(v * lead);
  return SignPattern(std::move(s));
}

SignPattern mirror(const SignPattern& pattern) {
  const int d = pattern.degree();
  std::vector<int8_t> s = pattern.signs();
  for (int i = 0; i <= d; ++i) {
    int power = d - i;
    // (-1)^d P(-x) multiplies x^power by (-1)^(d+power).
    if ((d + power) % 2 != 0) s[static_cast<std::size_t>(i)] = static_cast<int8_t>(-s[static_cast<std::size_t>(i)]);
  }
  return SignPattern(std::move(s));
}

Couple revert(const Couple& c) { return Couple(revert(c.pattern), c.pair); }
Couple mirror(const Couple& c) { return Couple(mirror(c.pattern), AdmissiblePair{c.pair.neg, c.pair.pos}); }

Polynomial revert(const Polynomial& poly) {
  if (poly.is_zero() || poly.coeff(0) == 0) throw Error(ErrorCode::ZeroConstantTerm, "revert needs P(0) != 0");
  std::vector<Rational> c(poly.coeffs().rbegin(), poly.coeffs().rend());
  Rational p0 = poly.coeff(0);
  for (auto& v : c) v /= p0;
  return Polynomial(std::move(c));
}

Polynomial mirror(const Polynomial& poly) {
  const int d = poly.degree();
  std::vector<Rational> c = poly.coeffs();
  for (int i = 0; i <= d; ++i)
    if ((d + i) % 2 != 0) c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
  return Polynomial(std::move(c));
}

Orbit orbit(const Couple& couple) {
  Couple r = revert(couple);
  Couple m = mirror(couple);
  Couple rm = revert(m);
  std::vector<Couple> all{couple, r, m, rm};
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return Orbit{std::move(all)};
}

Couple canonical(const Couple& couple) { return orbit(couple).canonical(); }

RealizationCertificate transport_certificate(const RealizationCertificate& cert, Generator g) {
  Polynomial p = g == Generator::Revert ? revert(cert.poly) : mirror(cert.poly);
  Couple c = g == Generator::Revert ? revert(cert.couple) : mirror(cert.couple);
  auto out = certify(p, c);
  if (!out) throw Error(ErrorCode::InvalidArgument, "transported certificate failed verification");
  return *out;
}

std::optional<RealizationCertificate> transport_to(const RealizationCertificate& cert, const Couple& target) {
  if (cert.couple == target) return cert;
  auto r = transport_certificate(cert, Generator::Revert);
  if (r.couple == target) return r;
  auto m = transport_certificate(cert, Generator::Mirror);
  if (m.couple == target) return m;
  auto rm = transport_certificate(m, Generator::Revert);
  if (rm.couple == target) return rm;
  return std::nullopt;
}

}  // namespace descartes
