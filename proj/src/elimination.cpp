#include "descartes/elimination.hpp"

#include <algorithm>
#include <functional>

#include "descartes/error.hpp"

namespace descartes {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

int rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

namespace {

Rational sylvester_resultant(const Polynomial& f, int m, const Polynomial& g, int n) {
  const int size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = g.coeff(n - k);
  return determinant(std::move(s));
}

// Interpolates a polynomial with the given per-variable degree bounds from
// values on the grid {0..bound} per variable.
MultiPoly interpolate(const std::vector<int>& vars, const std::vector<int>& bounds,
                      const std::function<Rational(const std::map<int, Rational>&)>& value,
                      std::map<int, Rational>& point, std::size_t level) {
  if (level == vars.size()) return MultiPoly::constant(value(point));
  const int v = vars[level];
  const int b = bounds[level];
  MultiPoly x = MultiPoly::variable(v);
  MultiPoly out;
  for (int i = 0; i <= b; ++i) {
    point[v] = Rational(i);
    MultiPoly yi = interpolate(vars, bounds, value, point, level + 1);
    if (yi.is_zero()) continue;
    // Lagrange basis for node i over nodes 0..b.
    MultiPoly li = MultiPoly::constant(1);
    Rational denom(1);
    for (int j = 0; j <= b; ++j) {
      if (j == i) continue;
      li = li * (x - MultiPoly::constant(j));
      denom *= i - j;
    }
    out += yi * li * Rational(1 / denom);
  }
  point.erase(v);
  return out;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  const int m = f.degree_in(var), n = g.degree_in(var);
  if (m < 0 || n < 0) return {};
  std::set<int> others = f.variables();
  for (int v : g.variables()) others.insert(v);
  others.erase(var);
  std::vector<int> vs(others.begin(), others.end()), bounds;
  for (int v : vs) bounds.push_back(n * std::max(0, f.degree_in(v)) + m * std::max(0, g.degree_in(v)));
  auto value = [&](const std::map<int, Rational>& pt) {
    return sylvester_resultant(f.evaluate(pt).to_univariate(var), m, g.evaluate(pt).to_univariate(var), n);
  };
  std::map<int, Rational> point;
  return interpolate(vs, bounds, value, point, 0);
}

namespace {

bool excludes_zero(const std::vector<MultiPoly>& eqs, const Box& box) {
  for (const auto& e : eqs) {
    auto [lo, hi] = enclose(e, box);
    if (lo > 0 || hi < 0) return true;
  }
  return false;
}

Polynomial eliminant_for(const std::vector<MultiPoly>& eqs, const std::vector<int>& vars, int keep) {
  std::vector<MultiPoly> cur = eqs;
  std::vector<int> rest;
  for (int v : vars)
    if (v != keep) rest.push_back(v);
  for (int v : rest) {
    // Pivot on the equation of lowest positive degree in v.
    std::size_t piv = cur.size();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      int d = cur[i].degree_in(v);
      if (d > 0 && (piv == cur.size() || d < cur[piv].degree_in(v))) piv = i;
    }
    if (piv == cur.size()) continue;
    std::vector<MultiPoly> next;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (i == piv) continue;
      MultiPoly r = cur[i].degree_in(v) > 0 ? resultant(cur[piv], cur[i], v) : cur[i];
      r.strip_monomial_content();  // factors vanishing on coordinate hyperplanes only
      next.push_back(std::move(r));
    }
    cur = std::move(next);
  }
  for (const auto& p : cur)
    if (!p.is_zero() && p.degree_in(keep) > 0) return p.to_univariate(keep);
  return {};
}

EliminationResult subdivision(const std::vector<MultiPoly>& eqs, const std::vector<int>& vars,
                              const PositivityOptions& opts, EliminationResult res) {
  res.method = "subdivision";
  Box root;
  for (int v : vars) root.push_back({v, Rational(1, 1000000), Rational(1000)});
  std::vector<Box> stack{root};
  while (!stack.empty()) {
    if (res.boxes >= opts.max_boxes) {
      res.verdict = Verdict::Inconclusive;
      res.note += "box budget exhausted during subdivision";
      return res;
    }
    Box b = std::move(stack.back());
    stack.pop_back();
    ++res.boxes;
    if (excludes_zero(eqs, b)) continue;
    std::size_t axis = 0;
    for (std::size_t i = 1; i < b.size(); ++i)
      if (*b[i].hi - b[i].lo > *b[axis].hi - b[axis].lo) axis = i;
    if (*b[axis].hi - b[axis].lo < opts.floor) {
      res.verdict = Verdict::Inconclusive;
      res.note += "subdivision floor reached";
      return res;
    }
    Rational mid = (b[axis].lo + *b[axis].hi) / 2;
    Box l = b, r = b;
    l[axis].hi = mid;
    r[axis].lo = mid;
    stack.push_back(std::move(l));
    stack.push_back(std::move(r));
  }
  res.verdict = Verdict::Verified;
  res.note += "no positive solution in [1e-6, 1000]^n";
  return res;
}

}  // namespace

EliminationResult verify_no_positive_solution(std::vector<MultiPoly> eqs, const std::vector<int>& vars,
                                              const PositivityOptions& opts) {
  if (eqs.size() != vars.size()) throw Error(ErrorCode::InvalidArgument, "system must be square");
  for (auto& e : eqs) e.strip_monomial_content();
  EliminationResult res;
  res.method = "elimination";

  std::vector<std::vector<RootInterval>> roots;
  for (int v : vars) {
    Polynomial p = eliminant_for(eqs, vars, v);
    if (p.is_zero() || p.degree() < 1) {
      res.note = "eliminant for " + vars::name(v) + " degenerates; ";
      return subdivision(eqs, vars, opts, res);
    }
    res.eliminants.emplace_back(v, p);
    std::vector<RootInterval> pos;
    for (auto& r : isolate_real_roots(p, Rational(1, 1000000)))
      if (r.lo > 0 || (r.lo == r.hi ? r.lo > 0 : r.lo >= 0 && p.sign_at(Rational(0)) != 0)) pos.push_back(r);
    roots.push_back(std::move(pos));
  }

  // Every positive solution projects onto positive roots of each eliminant.
  std::vector<std::size_t> idx(vars.size(), 0);
  bool any = std::all_of(roots.begin(), roots.end(), [](const auto& r) { return !r.empty(); });
  while (any) {
    ++res.candidate_boxes;
    std::vector<RootInterval> cell;
    for (std::size_t i = 0; i < vars.size(); ++i) cell.push_back(roots[i][idx[i]]);
    bool excluded = false;
    Rational width(1, 1000000);
    for (int round = 0; round < 8 && !excluded; ++round, width /= 1000) {
      Box b;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& p = res.eliminants[i].second;
        cell[i] = refine_root(squarefree_part(p), cell[i], width);
        b.push_back({vars[i], cell[i].lo, cell[i].hi});
      }
      ++res.boxes;
      excluded = excludes_zero(eqs, b);
    }
    if (!excluded) {
      res.verdict = Verdict::Inconclusive;
      res.note = "a candidate box could not be excluded";
      return res;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == roots[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  res.verdict = Verdict::Verified;
  return res;
}

}  // namespace descartes
