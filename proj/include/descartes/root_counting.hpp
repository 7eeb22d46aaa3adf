#pragma once

#include <vector>

#include "descartes/polynomial.hpp"

namespace descartes {

/// p, p', then negated remainders scaled by positive constants.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);

  const std::vector<Polynomial>& polys() const { return polys_; }
  /// Sign variations at x; zeros are skipped.
  int variations_at(const Rational& x) const;
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;

 private:
  std::vector<Polynomial> polys_;
};

struct RootInterval {
  Rational lo;
  Rational hi;  // lo == hi for an exact rational root
  int multiplicity = 1;
};

struct RootCountSummary {
  int pos_distinct = 0;
  int neg_distinct = 0;
  int pos_with_mult = 0;
  int neg_with_mult = 0;
  int zero_mult = 0;
  int complex_pairs = 0;
  bool operator==(const RootCountSummary&) const = default;
};

/// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);

/// Yun decomposition: factors[i] collects the roots of multiplicity i+1.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// Distinct real roots in (lo, hi); a root sitting on an endpoint is counted, as
/// if that endpoint were pushed outward by a small enough power of 1/2.
int count_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi);

int count_real_roots(const Polynomial& p);

/// 1 + max|a_i| / |a_lead|.
Rational cauchy_bound(const Polynomial& p);

RootCountSummary root_summary(const Polynomial& p);

/// One interval per distinct real root, sorted, each no wider than `width`.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& width);

/// Shrinks an isolating interval of a square-free polynomial to the given width.
RootInterval refine_root(const Polynomial& squarefree, RootInterval interval, const Rational& width);

}  // namespace descartes
