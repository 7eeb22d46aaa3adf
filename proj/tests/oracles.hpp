#pragma once
// Independent reference computations. Nothing here calls into the library, so
// tests can compare engine output against values derived a second way.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Coeffs = std::vector<Q>;  // ascending powers

inline Q q(long n, long d = 1) {
  Q r(n, d);
  r.canonicalize();
  return r;
}

inline Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// Schoolbook convolution.
inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, Q(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

inline Coeffs add(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), Q(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return trim(a);
}

inline Q horner(const Coeffs& c, const Q& x) {
  Q acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Product of (x - r) over the given real roots and (x^2 - 2 re x + re^2 + im^2) over pairs.
inline Coeffs from_roots(const std::vector<Q>& real_roots, const std::vector<std::pair<Q, Q>>& pairs = {}) {
  Coeffs p{Q(1)};
  for (const auto& r : real_roots) p = mul(p, Coeffs{-r, Q(1)});
  for (const auto& [re, im] : pairs) p = mul(p, Coeffs{re * re + im * im, -2 * re, Q(1)});
  return p;
}

/// Leading-first signs of the nonzero coefficients, times the leading sign.
inline std::string pattern(const Coeffs& c) {
  std::string s;
  int lead = sgn(c.back());
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    if (*it != 0) s += sgn(*it) * lead > 0 ? '+' : '-';
  return s;
}

inline int changes(const std::string& pattern) {
  int n = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) n += pattern[i] != pattern[i - 1];
  return n;
}

/// Pairs (pos, neg) with pos <= c, neg <= p, and matching parities, by brute force.
inline std::vector<std::pair<int, int>> admissible(const std::string& pattern) {
  int c = changes(pattern), p = static_cast<int>(pattern.size()) - 1 - c;
  std::vector<std::pair<int, int>> out;
  for (int pos = 0; pos <= c; ++pos)
    for (int neg = 0; neg <= p; ++neg)
      if ((c - pos) % 2 == 0 && (p - neg) % 2 == 0) out.emplace_back(pos, neg);
  return out;
}

/// x^d P(1/x) / P(0) reversed signs, normalized to a leading '+'.
inline std::string revert(const std::string& s) {
  std::string r(s.rbegin(), s.rend());
  if (r[0] == '-')
    for (char& ch : r) ch = ch == '+' ? '-' : '+';
  return r;
}

/// Signs of (-1)^d P(-x): position i (leading = 0) holds the power d - i.
inline std::string mirror(const std::string& s) {
  std::string r = s;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i % 2 == 1) r[i] = s[i] == '+' ? '-' : '+';
  return r;
}

/// Counts of real roots by sign for a product of linear factors, from the roots themselves.
struct Counts {
  int pos = 0, neg = 0;
};
inline Counts count_by_sign(const std::vector<Q>& roots) {
  Counts c;
  for (const auto& r : roots) (r > 0 ? c.pos : c.neg) += 1;
  return c;
}

/// kappa = (d-m-1)/m * (d-q-1)/q for m pluses, n minuses, q pluses.
inline Q kappa(int m, int n, int q) {
  int d = m + n + q - 1;
  return oracle::q(d - m - 1, m) * oracle::q(d - q - 1, q);
}

/// Random positive rational with numerator and denominator in the given ranges.
inline Q rnd(std::mt19937_64& rng, int maxnum, int maxden) {
  std::uniform_int_distribution<int> n(1, maxnum), d(1, maxden);
  return q(n(rng), d(rng));
}

}  // namespace oracle
