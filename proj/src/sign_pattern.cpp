#include "descartes/sign_pattern.hpp"

#include "descartes/error.hpp"

namespace descartes {

SignPattern::SignPattern(std::vector<int8_t> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw Error(ErrorCode::BadPattern, "empty sign pattern");
  for (auto s : signs_)
    if (s != 1 && s != -1) throw Error(ErrorCode::BadPattern, "signs must be +1 or -1");
  if (signs_.front() != 1) throw Error(ErrorCode::BadPattern, "sign pattern must lead with +");
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<int8_t> signs;
  for (char c : text) {
    if (c == '+') signs.push_back(1);
    else if (c == '-') signs.push_back(-1);
    else throw Error(ErrorCode::BadPattern, "bad pattern character '" + std::string(1, c) + "'");
  }
  return SignPattern(std::move(signs));
}

std::string SignPattern::to_string() const {
  std::string s;
  for (auto c : signs_) s.push_back(c > 0 ? '+' : '-');
  return s;
}

std::strong_ordering SignPattern::operator<=>(const SignPattern& o) const {
  if (auto c = signs_.size() <=> o.signs_.size(); c != 0) return c;
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] != o.signs_[i]) return signs_[i] > o.signs_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Couple::Couple(SignPattern p, AdmissiblePair a) : pattern(std::move(p)), pair(a) {
  if (!is_admissible(pattern, pair)) {
    auto dp = descartes_pair(pattern);
    throw Error(ErrorCode::InadmissiblePair,
                "pair (" + std::to_string(pair.pos) + "," + std::to_string(pair.neg) +
                    ") is not admissible for " + pattern.to_string() + " with Descartes pair (" +
                    std::to_string(dp.changes) + "," + std::to_string(dp.preservations) + ")");
  }
}

std::string Couple::key() const {
  return pattern.to_string() + "|" + std::to_string(pair.pos) + "|" + std::to_string(pair.neg);
}

std::strong_ordering Couple::operator<=>(const Couple& o) const {
  if (auto c = pattern <=> o.pattern; c != 0) return c;
  return pair <=> o.pair;
}

int sign_changes(std::span<const int8_t> signs) {
  int c = 0;
  for (std::size_t i = 1; i < signs.size(); ++i)
    if (signs[i] != signs[i - 1]) ++c;
  return c;
}

DescartesPair descartes_pair(const SignPattern& pattern) {
  int c = sign_changes(pattern.signs());
  return {c, pattern.degree() - c};
}

bool is_admissible(const SignPattern& pattern, const AdmissiblePair& pair) {
  auto [c, p] = descartes_pair(pattern);
  return pair.pos >= 0 && pair.neg >= 0 && pair.pos <= c && (c - pair.pos) % 2 == 0 &&
         pair.neg <= p && (p - pair.neg) % 2 == 0;
}

std::vector<AdmissiblePair> admissible_pairs(const SignPattern& pattern) {
  auto [c, p] = descartes_pair(pattern);
  std::vector<AdmissiblePair> out;
  for (int pos = c % 2; pos <= c; pos += 2)
    for (int neg = p % 2; neg <= p; neg += 2) out.push_back({pos, neg});
  return out;
}

SignPattern pattern_of(const Polynomial& poly) {
  if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no sign pattern");
  const int d = poly.degree();
  const int lead = sign(poly.leading());
  std::vector<int8_t> signs;
  signs.reserve(static_cast<std::size_t>(d) + 1);
  for (int i = d; i >= 0; --i) {
    int s = sign(poly.coeff(i));
    if (s == 0)
      throw Error(ErrorCode::ZeroCoefficient, "coefficient of x^" + std::to_string(i) + " vanishes");
    signs.push_back(static_cast<int8_t>(s * lead));
  }
  return SignPattern(std::move(signs));
}

Polynomial expand_from_roots(const RootConfiguration& config) {
  std::vector<Rational> acc{Rational(1)};
  auto multiply = [&acc](const std::vector<Rational>& factor) {
    std::vector<Rational> next(acc.size() + factor.size() - 1);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += acc[i] * factor[j];
    acc = std::move(next);
  };
  for (const auto& r : config.negative_roots) multiply({r, Rational(1)});
  for (const auto& r : config.positive_roots) multiply({Rational(-r), Rational(1)});
  for (const auto& c : config.complex_pairs) {
    if (c.im <= 0) throw Error(ErrorCode::InvalidArgument, "complex pair needs positive imaginary part");
    multiply({Rational(c.re * c.re + c.im * c.im), Rational(-2 * c.re), Rational(1)});
  }
  return Polynomial(std::move(acc));
}

Polynomial scale_substitute(const Polynomial& poly, const Rational& epsilon) {
  if (epsilon <= 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  const int d = poly.degree();
  std::vector<Rational> v(poly.coeffs());
  Rational power(1);
  for (int i = d; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] *= power;
    power *= epsilon;
  }
  return Polynomial(std::move(v));
}

std::vector<SignPattern> all_patterns(int degree) {
  std::vector<SignPattern> out;
  const unsigned long count = 1UL << degree;
  out.reserve(count);
  for (unsigned long mask = 0; mask < count; ++mask) {
    std::vector<int8_t> signs{1};
    for (int i = degree - 1; i >= 0; --i) signs.push_back((mask >> i) & 1 ? -1 : 1);
    out.emplace_back(std::move(signs));
  }
  return out;
}

}  // namespace descartes
