#include "descartes/root_counting.hpp"

#include <algorithm>

#include "descartes/error.hpp"

namespace descartes {

namespace {

void require_nonzero(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root counting on the zero polynomial");
}

int count_variations(const std::vector<int>& signs) {
  int last = 0, v = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Strips the x^k factor; returns k.
int strip_zero_roots(Polynomial& p) {
  int k = 0;
  while (k <= p.degree() && p.coeff(k) == 0) ++k;
  if (k == 0) return 0;
  std::vector<Rational> v(p.coeffs().begin() + k, p.coeffs().end());
  p = Polynomial(std::move(v));
  return k;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
  require_nonzero(p);
  polys_.push_back(p.primitive());
  if (p.degree() == 0) return;
  polys_.push_back(p.derivative().primitive());
  while (true) {
    auto r = polys_[polys_.size() - 2].divmod(polys_.back()).second;
    if (r.is_zero()) break;
    polys_.push_back((-r).primitive());
  }
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(polys_.size());
  for (const auto& q : polys_) s.push_back(q.sign_at(x));
  return count_variations(s);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& q : polys_) s.push_back(sign(q.leading()));
  return count_variations(s);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& q : polys_) s.push_back(q.degree() % 2 == 0 ? sign(q.leading()) : -sign(q.leading()));
  return count_variations(s);
}

Polynomial squarefree_part(const Polynomial& p) {
  require_nonzero(p);
  if (p.degree() == 0) return Polynomial::constant(1);
  auto g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  require_nonzero(p);
  std::vector<Polynomial> factors;
  if (p.degree() == 0) return factors;
  Polynomial a = p.monic();
  Polynomial b = gcd(a, a.derivative());
  Polynomial c = a.divmod(b).first;
  Polynomial d = a.derivative().divmod(b).first - c.derivative();
  while (c.degree() > 0) {
    Polynomial y = gcd(c, d);
    factors.push_back(y);
    c = c.divmod(y).first;
    d = d.divmod(y).first - c.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

namespace {

// Distinct roots of a square-free sf strictly inside (lo, hi).
int open_count(const Polynomial& sf, const Rational& lo, const Rational& hi) {
  if (sf.degree() <= 0) return 0;
  SturmChain chain(sf);
  // The variation count at a root equals the count just to its right, so
  // V(lo) - V(hi) counts roots in (lo, hi].
  int n = chain.variations_at(lo) - chain.variations_at(hi);
  if (sf.sign_at(hi) == 0) --n;
  return n;
}

}  // namespace

int count_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
  require_nonzero(p);
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "count_roots_in needs lo < hi");
  Polynomial sf = squarefree_part(p);
  if (sf.degree() == 0) return 0;
  // An endpoint root is counted, as if the endpoint had been pushed outward by
  // a power of 1/2 small enough to admit no other root.
  return open_count(sf, lo, hi) + (sf.sign_at(lo) == 0) + (sf.sign_at(hi) == 0);
}

int count_real_roots(const Polynomial& p) {
  Polynomial sf = squarefree_part(p);
  if (sf.degree() == 0) return 0;
  SturmChain chain(sf);
  return chain.variations_at_neg_infinity() - chain.variations_at_pos_infinity();
}

Rational cauchy_bound(const Polynomial& p) {
  require_nonzero(p);
  Rational m(0);
  Rational lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational a = abs(p.coeff(i));
    if (a > m) m = a;
  }
  return Rational(1 + m / lead);
}

namespace {

struct SignedCounts {
  int pos = 0;
  int neg = 0;
};

SignedCounts distinct_signed(const Polynomial& p) {
  SignedCounts out;
  if (p.degree() <= 0) return out;
  SturmChain chain(p);
  Rational zero(0);
  int at0 = chain.variations_at(zero);
  out.neg = chain.variations_at_neg_infinity() - at0;
  out.pos = at0 - chain.variations_at_pos_infinity();
  if (p.sign_at(zero) == 0) --out.neg;  // (−inf, 0] counted a root at 0
  return out;
}

}  // namespace

RootCountSummary root_summary(const Polynomial& input) {
  require_nonzero(input);
  Polynomial p = input;
  RootCountSummary s;
  s.zero_mult = strip_zero_roots(p);
  auto dist = distinct_signed(squarefree_part(p));
  s.pos_distinct = dist.pos;
  s.neg_distinct = dist.neg;
  auto factors = squarefree_decomposition(p);
  int real_with_mult = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto c = distinct_signed(factors[i]);
    int m = static_cast<int>(i) + 1;
    s.pos_with_mult += m * c.pos;
    s.neg_with_mult += m * c.neg;
  }
  real_with_mult = s.pos_with_mult + s.neg_with_mult;
  s.complex_pairs = (p.degree() - real_with_mult) / 2;
  return s;
}

RootInterval refine_root(const Polynomial& sf, RootInterval iv, const Rational& width) {
  if (iv.lo == iv.hi) return iv;
  int slo = sf.sign_at(iv.lo);
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = sf.sign_at(mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      break;
    }
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& width) {
  require_nonzero(p);
  if (width <= 0) throw Error(ErrorCode::InvalidArgument, "isolation width must be positive");
  std::vector<RootInterval> out;
  Polynomial sf = squarefree_part(p);
  if (sf.degree() <= 0) return out;
  SturmChain chain(sf);
  Rational bound = cauchy_bound(sf);

  struct Pending {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Pending> stack{{-bound, bound, chain.variations_at(-bound), chain.variations_at(bound)}};
  std::vector<RootInterval> found;
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    int n = cur.vlo - cur.vhi;  // endpoints are never roots here
    if (n == 0) continue;
    if (n == 1) {
      found.push_back({cur.lo, cur.hi, 1});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    int vm = chain.variations_at(mid);
    if (sf.sign_at(mid) == 0) {
      found.push_back({mid, mid, 1});
      // Nudge the split point off the root for the two halves.
      Rational delta = (cur.hi - cur.lo) / 4;
      Rational left = mid - delta, right = mid + delta;
      while (open_count(sf, left, mid) + open_count(sf, mid, right) > 0 ||
             sf.sign_at(left) == 0 || sf.sign_at(right) == 0) {
        delta /= 2;
        left = mid - delta;
        right = mid + delta;
      }
      stack.push_back({cur.lo, left, cur.vlo, chain.variations_at(left)});
      stack.push_back({right, cur.hi, chain.variations_at(right), cur.vhi});
      continue;
    }
    stack.push_back({cur.lo, mid, cur.vlo, vm});
    stack.push_back({mid, cur.hi, vm, cur.vhi});
  }
  std::sort(found.begin(), found.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

  auto factors = squarefree_decomposition(p);
  for (auto& iv : found) {
    iv = refine_root(sf, iv, width);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() <= 0) continue;
      bool has = iv.lo == iv.hi ? factors[i].sign_at(iv.lo) == 0
                                : open_count(factors[i], iv.lo, iv.hi) > 0;
      if (has) {
        iv.multiplicity = static_cast<int>(i) + 1;
        break;
      }
    }
  }
  // Bisection can leave neighbours sharing a (non-root) endpoint; shrink until disjoint.
  for (std::size_t i = 0; i + 1 < found.size(); ++i) {
    auto& a = found[i];
    auto& b = found[i + 1];
    while (a.hi >= b.lo) {
      if (a.lo != a.hi) a = refine_root(sf, a, (a.hi - a.lo) / 2);
      if (b.lo != b.hi) b = refine_root(sf, b, (b.hi - b.lo) / 2);
    }
  }
  return found;
}

}  // namespace descartes
