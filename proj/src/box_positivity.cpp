#include "descartes/box_positivity.hpp"

#include <algorithm>

#include "descartes/error.hpp"

namespace descartes {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

// Dense coefficient tensor over the box variables, row-major in dims.
struct Tensor {
  std::vector<int> deg;
  std::vector<Rational> c;

  std::size_t stride(std::size_t axis) const {
    std::size_t s = 1;
    for (std::size_t i = axis + 1; i < deg.size(); ++i) s *= static_cast<std::size_t>(deg[i] + 1);
    return s;
  }
};

Tensor to_tensor(const MultiPoly& f, const std::vector<int>& vars) {
  Tensor t;
  for (int v : vars) t.deg.push_back(std::max(0, f.degree_in(v)));
  std::size_t n = 1;
  for (int d : t.deg) n *= static_cast<std::size_t>(d + 1);
  t.c.assign(n, Rational(0));
  for (const auto& [e, coef] : f.terms()) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::size_t v = static_cast<std::size_t>(vars[i]);
      idx = idx * static_cast<std::size_t>(t.deg[i] + 1) + (v < e.size() ? e[v] : 0);
    }
    t.c[idx] += coef;
  }
  return t;
}

// Applies a per-fiber transform along one axis.
template <class F>
void along_axis(Tensor& t, std::size_t axis, F fn) {
  const std::size_t n = static_cast<std::size_t>(t.deg[axis] + 1);
  const std::size_t s = t.stride(axis);
  const std::size_t block = n * s;
  std::vector<Rational> fiber(n);
  for (std::size_t base = 0; base < t.c.size(); base += block) {
    for (std::size_t off = 0; off < s; ++off) {
      for (std::size_t k = 0; k < n; ++k) fiber[k] = t.c[base + off + k * s];
      fn(fiber);
      for (std::size_t k = 0; k < n; ++k) t.c[base + off + k * s] = fiber[k];
    }
  }
}

// p(x) -> p(a + h y) for every axis.
Tensor affine(Tensor t, const std::vector<Rational>& a, const std::vector<Rational>& h) {
  for (std::size_t ax = 0; ax < t.deg.size(); ++ax) {
    if (t.deg[ax] == 0) continue;
    along_axis(t, ax, [&](std::vector<Rational>& p) {
      const std::size_t n = p.size();
      if (a[ax] != 0)
        for (std::size_t i = 0; i + 1 < n; ++i)
          for (std::size_t j = n - 1; j > i; --j) p[j - 1] += a[ax] * p[j];
      Rational hp(1);
      for (std::size_t k = 0; k < n; ++k, hp *= h[ax]) p[k] *= hp;
    });
  }
  return t;
}

Rational binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// Power basis on [0,1]^n to Bernstein basis.
Tensor bernstein(Tensor t) {
  for (std::size_t ax = 0; ax < t.deg.size(); ++ax) {
    const int n = t.deg[ax];
    if (n == 0) continue;
    std::vector<Rational> w(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) w[static_cast<std::size_t>(j)] = 1 / binom(n, j);
    along_axis(t, ax, [&](std::vector<Rational>& p) {
      std::vector<Rational> out(p.size(), Rational(0));
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= k; ++j)
          out[static_cast<std::size_t>(k)] += binom(k, j) * w[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(j)];
      p.swap(out);
    });
  }
  return t;
}

struct Cell {
  std::vector<Rational> lo, hi;
};

struct BernsteinData {
  Rational min, max;
  Tensor coeffs;
};

BernsteinData bernstein_on(const Tensor& base, const Cell& cell) {
  std::vector<Rational> h(cell.lo.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = cell.hi[i] - cell.lo[i];
  BernsteinData d{Rational(0), Rational(0), bernstein(affine(base, cell.lo, h))};
  d.min = *std::min_element(d.coeffs.c.begin(), d.coeffs.c.end());
  d.max = *std::max_element(d.coeffs.c.begin(), d.coeffs.c.end());
  return d;
}

// Vertex coefficients equal the values of f at the corners.
std::optional<std::vector<Rational>> bad_vertex(const BernsteinData& d, const Cell& cell, bool strict) {
  const std::size_t dims = cell.lo.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << dims); ++mask) {
    std::size_t idx = 0;
    std::vector<Rational> pt(dims);
    for (std::size_t i = 0; i < dims; ++i) {
      bool up = (mask >> i) & 1U;
      idx = idx * static_cast<std::size_t>(d.coeffs.deg[i] + 1) + (up ? static_cast<std::size_t>(d.coeffs.deg[i]) : 0);
      pt[i] = up ? cell.hi[i] : cell.lo[i];
    }
    const Rational& v = d.coeffs.c[idx];
    if (v < 0 || (strict && v == 0)) return pt;
  }
  return std::nullopt;
}

PositivityResult compact_bnb(const MultiPoly& f, const std::vector<int>& vars, const Cell& root, bool strict,
                             const PositivityOptions& opts) {
  PositivityResult res;
  Tensor base = to_tensor(f, vars);
  std::vector<Cell> stack{root};
  bool hit_floor = false;
  while (!stack.empty()) {
    if (res.boxes >= opts.max_boxes) {
      res.verdict = Verdict::Inconclusive;
      res.note = "box budget exhausted";
      return res;
    }
    Cell cell = std::move(stack.back());
    stack.pop_back();
    ++res.boxes;
    auto d = bernstein_on(base, cell);
    if (d.min > 0 || (!strict && d.min >= 0)) continue;
    if (auto pt = bad_vertex(d, cell, strict)) {
      res.verdict = Verdict::Refuted;
      for (std::size_t i = 0; i < vars.size(); ++i) res.witness[vars[i]] = (*pt)[i];
      return res;
    }
    // Split the widest side among variables f depends on.
    std::size_t axis = 0;
    Rational widest(-1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (base.deg[i] == 0) continue;
      Rational w = cell.hi[i] - cell.lo[i];
      if (w > widest) {
        widest = w;
        axis = i;
      }
    }
    if (widest < opts.floor) {
      hit_floor = true;
      continue;
    }
    Rational mid = (cell.lo[axis] + cell.hi[axis]) / 2;
    Cell left = cell, right = cell;
    left.hi[axis] = mid;
    right.lo[axis] = mid;
    stack.push_back(std::move(right));
    stack.push_back(std::move(left));
  }
  res.verdict = hit_floor ? Verdict::Inconclusive : Verdict::Verified;
  if (hit_floor) res.note = "subdivision floor reached";
  return res;
}

PositivityResult verify_rec(const MultiPoly& f, Box box, bool strict, const PositivityOptions& opts);

// Checks every Taylor coefficient of f at var = c in that variable over the rest of the box.
PositivityResult taylor_tail(const MultiPoly& f, const Box& box, std::size_t dim, const Rational& c, bool strict,
                             const PositivityOptions& opts) {
  const int v = box[dim].var;
  MultiPoly shifted = f.substitute(v, MultiPoly::variable(v) + MultiPoly::constant(c));
  Box rest = box;
  rest.erase(rest.begin() + static_cast<long>(dim));
  PositivityResult out;
  out.verdict = Verdict::Verified;
  const int deg = shifted.degree_in(v);
  for (int k = 0; k <= deg; ++k) {
    MultiPoly ck = shifted.coeff_in(v, k);
    auto r = verify_rec(ck, rest, strict && k == 0, opts);
    out.boxes += r.boxes;
    if (r.verdict != Verdict::Verified) {
      out.verdict = Verdict::Inconclusive;
      out.note = "Taylor coefficient of degree " + std::to_string(k) + " in " + vars::name(v) + " at " +
                 to_string(c) + " not certified nonnegative";
      return out;
    }
  }
  return out;
}

PositivityResult verify_rec(const MultiPoly& f, Box box, bool strict, const PositivityOptions& opts) {
  // Drop sides f does not depend on.
  box.erase(std::remove_if(box.begin(), box.end(), [&](const BoxDim& d) { return f.degree_in(d.var) <= 0; }),
            box.end());
  for (int v : f.variables())
    if (std::none_of(box.begin(), box.end(), [&](const BoxDim& d) { return d.var == v; }))
      throw Error(ErrorCode::InvalidArgument, "variable " + vars::name(v) + " has no box side");
  if (box.empty()) {
    PositivityResult r;
    Rational c = f.constant_term();
    bool ok = strict ? c > 0 : c >= 0;
    r.verdict = ok ? Verdict::Verified : Verdict::Refuted;
    return r;
  }
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (box[i].hi) continue;
    // Unbounded side: Taylor coefficients at the lower end first.
    auto direct = taylor_tail(f, box, i, box[i].lo, strict, opts);
    if (direct.verdict == Verdict::Verified) return direct;
    Rational cut = std::max<Rational>(opts.truncation, box[i].lo + 1);
    Box head = box;
    head[i].hi = cut;
    auto near = verify_rec(f, head, strict, opts);
    if (near.verdict != Verdict::Verified) {
      near.truncation = cut;
      return near;
    }
    auto tail = taylor_tail(f, box, i, cut, strict, opts);
    tail.boxes += near.boxes + direct.boxes;
    tail.truncation = cut;
    return tail;
  }
  std::vector<int> vars;
  Cell cell;
  for (const auto& d : box) {
    if (*d.hi < d.lo) throw Error(ErrorCode::InvalidArgument, "empty box side");
    vars.push_back(d.var);
    cell.lo.push_back(d.lo);
    cell.hi.push_back(*d.hi);
  }
  return compact_bnb(f, vars, cell, strict, opts);
}

}  // namespace

PositivityResult verify_box_positivity(const MultiPoly& f, const Box& box, bool strict, const PositivityOptions& opts) {
  auto r = verify_rec(f, box, strict, opts);
  if (r.verdict == Verdict::Refuted) {
    // Complete the witness with the lower corner for sides f ignores.
    for (const auto& d : box) r.witness.try_emplace(d.var, d.lo);
    Rational v = f.evaluate_all(r.witness);
    if (!(v < 0 || (strict && v == 0))) throw Error(ErrorCode::InvalidArgument, "internal: witness does not refute");
  }
  return r;
}

std::pair<Rational, Rational> enclose(const MultiPoly& f, const Box& box) {
  std::vector<int> vars;
  Cell cell;
  for (const auto& d : box) {
    if (!d.hi) throw Error(ErrorCode::InvalidArgument, "enclose needs a compact box");
    vars.push_back(d.var);
    cell.lo.push_back(d.lo);
    cell.hi.push_back(*d.hi);
  }
  for (int v : f.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw Error(ErrorCode::InvalidArgument, "variable " + vars::name(v) + " has no box side");
  auto d = bernstein_on(to_tensor(f, vars), cell);
  return {d.min, d.max};
}

}  // namespace descartes
