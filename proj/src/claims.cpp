#include "descartes/claims.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "descartes/elimination.hpp"
#include "descartes/error.hpp"
#include "descartes/root_counting.hpp"

namespace descartes {

using ojson = nlohmann::ordered_json;

const char* to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::PolyIdentity: return "PolyIdentity";
    case ClaimKind::UnivariateRoots: return "UnivariateRoots";
    case ClaimKind::BoxPositivity: return "BoxPositivity";
    case ClaimKind::CoeffPositivity: return "CoeffPositivity";
    case ClaimKind::RankClaim: return "RankClaim";
    case ClaimKind::RadicalChain: return "RadicalChain";
    case ClaimKind::SearchConsistency: return "SearchConsistency";
    case ClaimKind::KappaList: return "KappaList";
    case ClaimKind::DescartesConsequences: return "DescartesConsequences";
    case ClaimKind::NoPositiveSolution: return "NoPositiveSolution";
  }
  return "Unknown";
}

ClaimKind parse_claim_kind(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ClaimKind::NoPositiveSolution); ++i)
    if (s == to_string(static_cast<ClaimKind>(i))) return static_cast<ClaimKind>(i);
  throw Error(ErrorCode::UnknownClaimKind, "unknown claim kind '" + s + "'");
}

std::string to_decimal(const Rational& r, int digits) {
  Rational a = abs(r);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = (a.get_num() * scale) / a.get_den();  // truncation
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s = std::string(static_cast<std::size_t>(digits) + 1 - s.size(), '0') + s;
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (r < 0 ? "-" : "") + s;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ojson point_json(const std::map<int, Rational>& pt) {
  ojson j = ojson::object();
  for (const auto& [v, x] : pt) j[vars::name(v)] = to_string(x);
  return j;
}

Rational constant_value(const RatFunc& f, const std::string& what) {
  if (!f.num.is_constant() || !f.den.is_constant())
    throw Error(ErrorCode::InvalidArgument, what + " did not evaluate to a number");
  Rational d = f.den.constant_term();
  if (d == 0) throw Error(ErrorCode::InvalidArgument, what + " has a vanishing denominator");
  return f.num.constant_term() / d;
}

// Iterates the tensor grid {1..b_v+1}; fn returns false to stop early.
bool for_each_grid_point(const std::vector<int>& vs, const std::vector<long>& bounds,
                         const std::function<bool(const std::map<int, Rational>&)>& fn) {
  std::map<int, Rational> pt;
  std::vector<long> idx(vs.size(), 1);
  for (std::size_t i = 0; i < vs.size(); ++i) pt[vs[i]] = Rational(1);
  while (true) {
    if (!fn(pt)) return false;
    std::size_t k = 0;
    while (k < vs.size()) {
      if (++idx[k] <= bounds[k] + 1) {
        pt[vs[k]] = Rational(idx[k]);
        break;
      }
      idx[k] = 1;
      pt[vs[k]] = Rational(1);
      ++k;
    }
    if (k == vs.size()) return true;
  }
}

// A point where the nonzero polynomial n and both denominators are nonzero.
// Variables that occur only in `extra` are bound too (to 1) so both sides evaluate.
std::map<int, Rational> nonvanishing_point(const MultiPoly& n, const MultiPoly& d1, const MultiPoly& d2,
                                           const std::vector<const MultiPoly*>& extra = {}) {
  std::set<int> vs = n.variables();
  for (int v : d1.variables()) vs.insert(v);
  for (int v : d2.variables()) vs.insert(v);
  for (const auto* e : extra)
    for (int v : e->variables()) vs.insert(v);
  std::vector<int> vv(vs.begin(), vs.end());
  long bound = 0;
  for (int v : vv) bound = std::max<long>(bound, n.degree_in(v) + d1.degree_in(v) + d2.degree_in(v));
  std::vector<long> bounds;
  for (int v : vv) bounds.push_back(n.degree_in(v) + d1.degree_in(v) + d2.degree_in(v) > 0 ? bound : 0);
  std::map<int, Rational> found;
  for_each_grid_point(vv, bounds, [&](const std::map<int, Rational>& pt) {
    if (n.evaluate_all(pt) != 0 && d1.evaluate_all(pt) != 0 && d2.evaluate_all(pt) != 0) {
      found = pt;
      return false;
    }
    return true;
  });
  return found;
}

struct ClaimContext {
  Scope scope;
  ClaimContext(const Claim& c, const Scope& globals) : scope(&globals) {
    for (const auto& [name, text] : c.definitions) scope.define(name, text);
  }
};

const std::string& expr_of(const Claim& c, const std::string& key) {
  auto it = c.expressions.find(key);
  if (it == c.expressions.end())
    throw Error(ErrorCode::ManifestParse, "claim '" + c.id + "' needs expression '" + key + "'");
  return it->second;
}

ClaimResult identity_impl(const ExprPtr& l, const ExprPtr& r, Evaluator& ev, const std::string& strategy,
                          const std::optional<Rational>& tol, const VerifyOptions& opts) {
  ClaimResult res;
  auto& ev_json = res.evidence;
  bool want_expand = strategy == "auto" || strategy == "expand" || strategy == "both" || tol.has_value();
  bool want_grid = strategy == "grid" || strategy == "both";
  std::optional<bool> expand_zero, grid_zero;

  if (want_expand) {
    try {
      RatFunc L = ev.eval(l), R = ev.eval(r);
      MultiPoly n = L.num * R.den - R.num * L.den;
      ev_json["expanded_terms"] = n.size();
      if (tol) {
        // Truncated decimals: accept coefficient-wise agreement within tol.
        Rational worst(0);
        Exponents worst_e;
        for (const auto& [e, c] : n.terms())
          if (abs(c) > worst) {
            worst = abs(c);
            worst_e = e;
          }
        ev_json["coeff_tolerance"] = to_string(*tol);
        ev_json["max_coeff_deviation"] = to_decimal(worst, 12);
        ev_json["exact_equal"] = n.is_zero();
        if (worst > *tol) {
          MultiPoly mono;
          mono.add_term(worst_e, Rational(1));
          ev_json["witness_monomial"] = mono.to_string();
          ev_json["witness_deviation"] = to_string(n.terms().at(worst_e));
          res.verdict = Verdict::Refuted;
        } else {
          res.verdict = Verdict::Verified;
        }
        ev_json["strategy"] = "expand";
        return res;
      }
      expand_zero = n.is_zero();
      if (!*expand_zero) {
        auto pt = nonvanishing_point(n, L.den, R.den, {&L.num, &R.num});
        ev_json["witness"] = point_json(pt);
        Rational lv = L.num.evaluate_all(pt) / L.den.evaluate_all(pt);
        Rational rv = R.num.evaluate_all(pt) / R.den.evaluate_all(pt);
        ev_json["lhs_value"] = to_string(lv);
        ev_json["rhs_value"] = to_string(rv);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExpressionTooLarge || strategy == "expand") throw;
      ev_json["expand_skipped"] = e.what();
      want_grid = true;
    }
  }

  if (want_grid) {
    DegreeBound b = difference_bound(ev.bound(l), ev.bound(r));
    std::vector<int> vs;
    std::vector<long> bounds;
    long double points = 1;
    for (const auto& [v, d] : b.num)
      if (d > 0) {
        vs.push_back(v);
        bounds.push_back(d);
        points *= static_cast<long double>(d + 1);
      }
    ojson bj = ojson::object();
    for (std::size_t i = 0; i < vs.size(); ++i) bj[vars::name(vs[i])] = bounds[i];
    ev_json["grid_degree_bounds"] = bj;
    if (points > static_cast<long double>(opts.grid_point_cap))
      throw Error(ErrorCode::ExpressionTooLarge, "identity grid exceeds the point cap");
    std::uint64_t evaluated = 0;
    std::map<int, Rational> bad;
    bool zero = for_each_grid_point(vs, bounds, [&](const std::map<int, Rational>& pt) {
      ++evaluated;
      RatFunc L = ev.eval(l, pt), R = ev.eval(r, pt);
      MultiPoly n = L.num * R.den - R.num * L.den;
      if (n.is_zero()) return true;
      bad = pt;
      return false;
    });
    ev_json["grid_points"] = evaluated;
    grid_zero = zero;
    if (!zero && !ev_json.contains("witness")) {
      ev_json["witness"] = point_json(bad);
      RatFunc L = ev.eval(l, bad), R = ev.eval(r, bad);
      ev_json["lhs_value"] = L.num.to_string() + (L.den.is_constant() && L.den.constant_term() == 1 ? "" : " / (" + L.den.to_string() + ")");
      ev_json["rhs_value"] = R.num.to_string() + (R.den.is_constant() && R.den.constant_term() == 1 ? "" : " / (" + R.den.to_string() + ")");
    }
  }

  if (expand_zero && grid_zero && *expand_zero != *grid_zero)
    throw Error(ErrorCode::InvalidArgument, "expansion and grid strategies disagree");
  bool zero = expand_zero ? *expand_zero : *grid_zero;
  ev_json["strategy"] = expand_zero && grid_zero ? "both" : expand_zero ? "expand" : "grid";
  res.verdict = zero ? Verdict::Verified : Verdict::Refuted;
  return res;
}

// Tightens a root enclosure until it is inside or outside [a, b].
int classify_against(const Polynomial& sf, RootInterval& r, const Rational& a, const Rational& b) {
  Rational width = r.hi - r.lo;
  for (int i = 0; i < 200; ++i) {
    if (r.lo >= a && r.hi <= b) return 1;
    if (r.hi < a || r.lo > b) return 0;
    if (r.lo == r.hi) return (r.lo >= a && r.lo <= b) ? 1 : 0;
    width = (r.hi - r.lo) / 16;
    r = refine_root(sf, r, width);
  }
  return -1;
}

ClaimResult positivity_impl(const RatFunc& fr, const std::vector<std::vector<BoxSpec>>& boxes, bool strict,
                            const VerifyOptions& opts) {
  ClaimResult res;
  if (!fr.den.is_constant() || fr.den.constant_term() == 0)
    throw Error(ErrorCode::NotCertifiable, "box positivity needs a polynomial (constant denominator)");
  MultiPoly f = fr.num * (1 / fr.den.constant_term());
  res.evidence["strict"] = strict;
  res.evidence["boxes"] = ojson::array();
  res.verdict = Verdict::Verified;
  for (const auto& spec : boxes) {
    Box box;
    std::set<int> covered;
    for (const auto& s : spec) {
      int v = vars::intern(s.var);
      box.push_back({v, s.lo, s.hi});
      covered.insert(v);
    }
    for (int v : f.variables())
      if (!covered.count(v))
        throw Error(ErrorCode::ManifestParse, "box does not bound variable '" + vars::name(v) + "'");
    PositivityResult pr = verify_box_positivity(f, box, strict, opts.positivity);
    ojson bj;
    ojson dims = ojson::object();
    for (const auto& s : spec) dims[s.var] = ojson::array({to_string(s.lo), s.hi ? to_string(*s.hi) : "inf"});
    bj["box"] = dims;
    bj["verdict"] = to_string(pr.verdict);
    bj["subdivisions"] = pr.boxes;
    if (pr.truncation) bj["truncation"] = to_string(*pr.truncation);
    if (!pr.note.empty()) bj["note"] = pr.note;
    if (pr.verdict == Verdict::Refuted) {
      bj["witness"] = point_json(pr.witness);
      bj["value_at_witness"] = to_string(f.evaluate_all(pr.witness));
    }
    res.evidence["boxes"].push_back(bj);
    if (pr.verdict == Verdict::Refuted) res.verdict = Verdict::Refuted;
    else if (pr.verdict == Verdict::Inconclusive && res.verdict == Verdict::Verified)
      res.verdict = Verdict::Inconclusive;
  }
  return res;
}

ClaimResult rank_impl(const Claim& c, Evaluator& ev) {
  ClaimResult res;
  if (!c.expected_rank) throw Error(ErrorCode::ManifestParse, "rank claim '" + c.id + "' needs expected_rank");
  std::vector<std::vector<ExprPtr>> m;
  for (const auto& row : c.matrix) {
    m.emplace_back();
    for (const auto& s : row) m.back().push_back(parse_expression(s));
  }
  std::vector<ExprPtr> pos, nz;
  for (const auto& s : c.positive) pos.push_back(parse_expression(s));
  for (const auto& s : c.nonzero) nz.push_back(parse_expression(s));
  std::vector<std::pair<int, ExprPtr>> solve;
  for (const auto& s : c.solve) solve.emplace_back(vars::intern(s.var), parse_expression(s.equation));

  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> tick(1, 999);
  int valid = 0;
  long attempts = 0;
  const long max_attempts = 2000L * c.trials;
  std::map<int, int> ranks;
  while (valid < c.trials && attempts < max_attempts) {
    ++attempts;
    std::map<int, Rational> pt;
    for (const auto& [name, range] : c.parameters)
      pt[vars::intern(name)] = range.first + (range.second - range.first) * (Rational(tick(rng)) / 1000);
    bool ok = true;
    for (const auto& [v, eq] : solve) {
      RatFunc f = ev.eval(eq, pt);
      if (!f.den.is_constant() || f.den.constant_term() == 0 || f.num.degree_in(v) > 1) {
        ok = false;
        break;
      }
      MultiPoly a = f.num.coeff_in(v, 1), b = f.num.coeff_in(v, 0);
      if (!a.is_constant() || !b.is_constant() || a.constant_term() == 0) {
        ok = false;
        break;
      }
      pt[v] = -b.constant_term() / a.constant_term();
    }
    try {
      for (const auto& e : pos)
        if (ok && constant_value(ev.eval(e, pt), "constraint") <= 0) ok = false;
      for (const auto& e : nz)
        if (ok && constant_value(ev.eval(e, pt), "constraint") == 0) ok = false;
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) continue;
    std::vector<std::vector<Rational>> mat;
    for (const auto& row : m) {
      mat.emplace_back();
      for (const auto& e : row) mat.back().push_back(constant_value(ev.eval(e, pt), "matrix entry"));
    }
    int rk = rank(mat);
    ++valid;
    ++ranks[rk];
    if (rk != *c.expected_rank) {
      res.verdict = Verdict::Refuted;
      res.evidence["witness"] = point_json(pt);
      res.evidence["rank_at_witness"] = rk;
      break;
    }
  }
  res.evidence["expected_rank"] = *c.expected_rank;
  res.evidence["valid_points"] = valid;
  res.evidence["attempts"] = attempts;
  res.evidence["caveat"] = "rank sampled at random valid rational points; genericity is assumed, not proven";
  if (res.verdict == Verdict::Refuted) return res;
  if (valid < c.trials) {
    res.verdict = Verdict::Inconclusive;
    res.evidence["note"] = "not enough parameter points satisfy the side conditions";
  } else {
    res.verdict = Verdict::Verified;
  }
  return res;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Refuted || b == Verdict::Refuted) return Verdict::Refuted;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Verified;
}

// Free variables with a positive degree must be declared by the claim.
void check_declared(const Claim& c, Evaluator& ev, const std::vector<std::string>& texts) {
  if (c.variables.empty()) return;
  std::set<std::string> declared(c.variables.begin(), c.variables.end());
  for (const auto& [name, range] : c.parameters) declared.insert(name);
  for (const auto& s : c.solve) declared.insert(s.var);
  for (const auto& t : texts) {
    const DegreeBound& b = ev.bound(parse_expression(t));
    for (const auto* m : {&b.num, &b.den})
      for (const auto& [v, d] : *m)
        if (d > 0 && !declared.count(vars::name(v)))
          throw Error(ErrorCode::ManifestParse,
                      "claim '" + c.id + "' uses undeclared variable '" + vars::name(v) + "'");
  }
}

ClaimResult dispatch(const Claim& c, Scope& scope, const VerifyOptions& opts) {
  Evaluator ev(scope);
  std::vector<std::string> texts;
  for (const auto& [k, t] : c.expressions) texts.push_back(t);
  for (const auto& t : c.equations) texts.push_back(t);
  for (const auto& row : c.matrix) texts.insert(texts.end(), row.begin(), row.end());
  check_declared(c, ev, texts);

  switch (c.kind) {
    case ClaimKind::PolyIdentity:
      return identity_impl(parse_expression(expr_of(c, "lhs")), parse_expression(expr_of(c, "rhs")), ev, c.strategy,
                           c.coeff_tolerance, opts);
    case ClaimKind::UnivariateRoots: {
      RatFunc f = ev.eval(parse_expression(expr_of(c, "p")));
      if (!f.den.is_constant()) throw Error(ErrorCode::NotCertifiable, "root claims need a polynomial");
      MultiPoly p = f.num;
      auto vs = p.variables();
      if (vs.size() > 1) throw Error(ErrorCode::InvalidArgument, "root claim polynomial is not univariate");
      Polynomial up = vs.empty() ? Polynomial::constant(p.constant_term()) : p.to_univariate(*vs.begin());
      return verify_univariate_roots(up, c.expected_roots, c.expected_count, c.range_lo, c.range_hi);
    }
    case ClaimKind::BoxPositivity:
      return positivity_impl(ev.eval(parse_expression(expr_of(c, "f"))), c.boxes, c.strict, opts);
    case ClaimKind::CoeffPositivity:
      return verify_coeff_positivity(ev.eval(parse_expression(expr_of(c, "f"))));
    case ClaimKind::RankClaim:
      return rank_impl(c, ev);
    case ClaimKind::NoPositiveSolution: {
      std::vector<MultiPoly> eqs;
      std::vector<int> vs;
      for (const auto& t : c.equations) eqs.push_back(ev.eval(parse_expression(t)).num);
      for (const auto& v : c.variables) vs.push_back(vars::intern(v));
      EliminationResult er = verify_no_positive_solution(eqs, vs, opts.positivity);
      ClaimResult res;
      res.verdict = er.verdict;
      res.evidence["method"] = er.method;
      ojson el = ojson::array();
      for (const auto& [v, p] : er.eliminants) {
        ojson e;
        e["variable"] = vars::name(v);
        e["degree"] = p.degree();
        int positive = 0;
        for (const auto& r : isolate_real_roots(p, Rational(1, 1000000)))
          if (r.lo > 0) ++positive;
        e["positive_roots"] = positive;
        el.push_back(e);
      }
      res.evidence["eliminants"] = el;
      res.evidence["candidate_boxes"] = er.candidate_boxes;
      res.evidence["boxes"] = er.boxes;
      if (!er.note.empty()) res.evidence["note"] = er.note;
      return res;
    }
    case ClaimKind::RadicalChain: {
      ClaimResult res;
      res.verdict = Verdict::Verified;
      res.evidence["steps"] = ojson::array();
      for (const auto& step : c.steps) {
        Scope inner(&scope);
        for (const auto& [name, text] : step.definitions) inner.define(name, text);
        ClaimResult sr = dispatch(step, inner, opts);
        ojson sj;
        sj["id"] = step.id;
        sj["kind"] = to_string(step.kind);
        sj["verdict"] = to_string(sr.verdict);
        sj["evidence"] = sr.evidence;
        res.evidence["steps"].push_back(sj);
        res.verdict = combine(res.verdict, sr.verdict);
      }
      return res;
    }
    case ClaimKind::SearchConsistency: {
      ClaimResult res;
      std::uint64_t budget = opts.search_budget.value_or(c.budget);
      Couple target(SignPattern::parse(c.pattern), {c.pos, c.neg});
      SearchOutcome out = search_realizer(target, {budget, c.seed, 3});
      res.evidence["couple"] = target.key();
      res.evidence["budget"] = budget;
      res.evidence["seed"] = c.seed;
      res.evidence["samples"] = out.samples;
      if (!c.control_pattern.empty()) {
        Couple control(SignPattern::parse(c.control_pattern), {c.control_pos, c.control_neg});
        auto cert = base_construction(control);
        std::uint64_t csamples = 0;
        if (!cert) {
          SearchOutcome co = search_realizer(control, {std::max<std::uint64_t>(budget, 1), c.seed, 3});
          cert = co.certificate;
          csamples = co.samples;
        }
        res.evidence["control"] = control.key();
        res.evidence["control_found"] = cert.has_value();
        res.evidence["control_samples"] = csamples;
        if (cert) res.evidence["control_certificate"] = cert->poly.to_string();
        if (!cert) {
          res.verdict = Verdict::Inconclusive;
          return res;
        }
      }
      if (out.certificate) {
        res.verdict = Verdict::Refuted;
        res.evidence["certificate"] = out.certificate->poly.to_string();
      } else {
        res.verdict = budget == 0 ? Verdict::Inconclusive : Verdict::Verified;
        res.evidence["result"] = "NotFound";
      }
      return res;
    }
    case ClaimKind::KappaList:
      return verify_kappa_list(c.m, c.n, c.q, c.expected_values);
    case ClaimKind::DescartesConsequences:
      return verify_descartes_consequences(c.samples, c.seed);
  }
  throw Error(ErrorCode::UnknownClaimKind, "unhandled claim kind");
}

}  // namespace

ClaimResult verify_identity(const std::string& lhs, const std::string& rhs, const Scope& scope,
                            const std::string& strategy, const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  Evaluator ev(scope);
  ClaimResult res = identity_impl(parse_expression(lhs), parse_expression(rhs), ev, strategy, std::nullopt, opts);
  res.kind = ClaimKind::PolyIdentity;
  res.seconds = seconds_since(t0);
  return res;
}

ClaimResult verify_univariate_roots(const Polynomial& p, const std::vector<ExpectedRoot>& expected,
                                    std::optional<int> expected_count, std::optional<Rational> lo,
                                    std::optional<Rational> hi) {
  ClaimResult res;
  res.kind = ClaimKind::UnivariateRoots;
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root claim on the zero polynomial");
  Polynomial sf = squarefree_part(p);
  Rational bound = cauchy_bound(p) + 1;
  Rational a = lo.value_or(-bound), b = hi.value_or(bound);
  int count = 0;
  if (p.degree() > 0) count = count_roots_in(p, a, b) - (sf.sign_at(a) == 0) - (sf.sign_at(b) == 0);

  // Enclosures of the roots inside (a, b), refined until membership is decided.
  std::vector<RootInterval> roots;
  if (p.degree() > 0)
    for (auto r : isolate_real_roots(p, Rational(1, 1000000))) {
      if (r.lo == r.hi) {
        if (r.lo > a && r.lo < b) roots.push_back(r);
        continue;
      }
      bool on_boundary = false;
      while (true) {
        bool has_a = r.lo <= a && a <= r.hi, has_b = r.lo <= b && b <= r.hi;
        if (!has_a && !has_b) break;
        // The single root of an isolating interval that contains a zero of sf is that zero.
        if ((has_a && sf.sign_at(a) == 0) || (has_b && sf.sign_at(b) == 0)) {
          on_boundary = true;
          break;
        }
        r = refine_root(sf, r, (r.hi - r.lo) / 16);
      }
      if (!on_boundary && r.lo > a && r.hi < b) roots.push_back(r);
    }
  res.evidence["degree"] = p.degree();
  res.evidence["distinct_real_roots_in_range"] = count;
  if (lo) res.evidence["range_lo"] = to_string(*lo);
  if (hi) res.evidence["range_hi"] = to_string(*hi);
  bool ok = static_cast<int>(roots.size()) == count;  // enclosures agree with the Sturm count
  if (expected_count && *expected_count != count) ok = false;
  res.evidence["expected_count"] = expected_count ? ojson(*expected_count) : ojson(nullptr);

  std::vector<int> used(roots.size(), 0);
  ojson matches = ojson::array();
  for (const auto& e : expected) {
    int hits = 0;
    std::size_t which = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      int m = classify_against(sf, roots[i], e.value - e.tolerance, e.value + e.tolerance);
      if (m == 1) {
        ++hits;
        which = i;
      }
    }
    ojson mj;
    mj["expected"] = to_string(e.value);
    mj["tolerance"] = to_string(e.tolerance);
    mj["matches"] = hits;
    if (hits == 1) {
      used[which]++;
      mj["enclosure"] = ojson::array({to_string(roots[which].lo), to_string(roots[which].hi)});
    } else {
      ok = false;
    }
    matches.push_back(mj);
  }
  for (int u : used)
    if (u > 1) ok = false;
  ojson rj = ojson::array();
  for (const auto& r : roots) {
    ojson j;
    j["lo"] = to_string(r.lo);
    j["hi"] = to_string(r.hi);
    j["approx"] = to_decimal((r.lo + r.hi) / 2, 6);
    j["multiplicity"] = r.multiplicity;
    rj.push_back(j);
  }
  res.evidence["roots"] = rj;
  res.evidence["expected_roots"] = matches;
  res.verdict = ok ? Verdict::Verified : Verdict::Refuted;
  return res;
}

ClaimResult verify_coeff_positivity(const RatFunc& f) {
  ClaimResult res;
  res.kind = ClaimKind::CoeffPositivity;
  auto signs = [](const MultiPoly& p) {
    int s = 0;
    for (const auto& [e, c] : p.terms()) {
      int cs = sgn(c);
      if (s == 0) s = cs;
      else if (s != cs) return 0;
    }
    return s;
  };
  int ds = signs(f.den);
  if (f.den.is_zero() || ds == 0)
    throw Error(ErrorCode::NotCertifiable, "denominator coefficients are not of one sign");
  MultiPoly num = ds > 0 ? f.num : -f.num;
  res.evidence["numerator_terms"] = num.size();
  res.evidence["denominator_terms"] = f.den.size();
  if (num.is_zero()) throw Error(ErrorCode::NotCertifiable, "numerator is identically zero");
  int ns = signs(num);
  if (ns <= 0) {
    MultiPoly neg;
    for (const auto& [e, c] : num.terms())
      if (c < 0) neg.add_term(e, c);
    res.evidence["negative_terms"] = neg.size();
    res.evidence["sample_negative_term"] = neg.to_string().substr(0, 200);
    throw Error(ErrorCode::NotCertifiable, "numerator has coefficients of both signs");
  }
  res.verdict = Verdict::Verified;
  return res;
}

ClaimResult verify_rank(const std::vector<std::vector<Rational>>& matrix, int expected_rank) {
  ClaimResult res;
  res.kind = ClaimKind::RankClaim;
  int r = rank(matrix);
  res.evidence["rank"] = r;
  res.evidence["expected_rank"] = expected_rank;
  res.verdict = r == expected_rank ? Verdict::Verified : Verdict::Refuted;
  return res;
}

ClaimResult verify_kappa_list(int m, int n, const std::vector<int>& q, const std::vector<Rational>& expected) {
  ClaimResult res;
  res.kind = ClaimKind::KappaList;
  if (q.size() != expected.size()) throw Error(ErrorCode::ManifestParse, "kappa list length mismatch");
  bool ok = true;
  ojson list = ojson::array();
  for (std::size_t i = 0; i < q.size(); ++i) {
    TwoChangePattern tp{m, n, q[i]};
    Rational k = kappa(tp);
    auto verdict = two_change_verdict(tp);
    ojson j;
    j["pattern"] = tp.pattern().to_string();
    j["q"] = q[i];
    j["kappa"] = to_string(k);
    j["expected"] = to_string(expected[i]);
    j["excludes_0_d-2"] = verdict.nonrealizable.has_value();
    if (k != expected[i]) ok = false;
    list.push_back(j);
  }
  res.evidence["values"] = list;
  res.verdict = ok ? Verdict::Verified : Verdict::Refuted;
  return res;
}

ClaimResult verify_descartes_consequences(int samples, std::uint64_t seed) {
  ClaimResult res;
  res.kind = ClaimKind::DescartesConsequences;
  std::mt19937_64 rng(seed);
  auto rnd_rat = [&](int maxnum) -> Rational {
    std::uniform_int_distribution<int> num(1, maxnum), den(1, 6);
    return Rational(num(rng)) / den(rng);
  };
  std::uniform_int_distribution<int> coin(0, 9), degd(1, 10);
  ojson failures = ojson::array();
  auto fail = [&](const std::string& what, const Polynomial& p) {
    if (failures.size() < 5) failures.push_back(what + ": " + p.to_string());
  };

  // Hyperbolic polynomials: zero coefficients isolated and flanked by opposite
  // signs, sign changes equal to positive-root counts.
  int hyperbolic = 0;
  for (int s = 0; s < samples; ++s) {
    RootConfiguration rc;
    int d = degd(rng);
    while (rc.degree() < d) {
      Rational r = rnd_rat(12);
      if (coin(rng) < 3 && rc.degree() + 2 <= d) {  // symmetric pairs create zero coefficients
        rc.positive_roots.push_back(r);
        rc.negative_roots.push_back(r);
      } else if (coin(rng) < 5) {
        rc.positive_roots.push_back(r);
      } else {
        rc.negative_roots.push_back(r);
      }
    }
    Polynomial p = expand_from_roots(rc);
    const auto& c = p.coeffs();
    bool ok = true;
    for (std::size_t j = 1; j + 1 < c.size(); ++j)
      if (c[j] == 0 && (c[j - 1] == 0 || c[j + 1] == 0 || sgn(c[j - 1]) * sgn(c[j + 1]) >= 0)) ok = false;
    std::vector<int8_t> signs, msigns;
    for (int j = p.degree(); j >= 0; --j) {
      int sj = sgn(c[static_cast<std::size_t>(j)]);
      if (sj == 0) continue;
      signs.push_back(static_cast<int8_t>(sj));
      msigns.push_back(static_cast<int8_t>(j % 2 ? -sj : sj));
    }
    if (sign_changes(signs) != static_cast<int>(rc.positive_roots.size())) ok = false;
    if (sign_changes(msigns) != static_cast<int>(rc.negative_roots.size())) ok = false;
    if (ok) ++hyperbolic;
    else fail("hyperbolic", p);
  }

  // Quartics with the four-sign pattern ++-++ and two positive roots u < v are
  // negative at +-(u+v)/2.
  int quartic = 0, quartic_tried = 0;
  const SignPattern star = SignPattern::parse("++-++");
  while (quartic_tried < samples) {
    Rational u = rnd_rat(10), v = u + rnd_rat(10), beta = rnd_rat(40), gamma = rnd_rat(40);
    Polynomial p = Polynomial{u * v, -(u + v), 1} * Polynomial{gamma, beta, 1};
    if (std::any_of(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c == 0; })) continue;
    if (pattern_of(p) != star) continue;
    if (root_summary(p).pos_distinct != 2) continue;
    ++quartic_tried;
    Rational mid = (u + v) / 2;
    if (p.evaluate(mid) < 0 && p.evaluate(-mid) < 0) ++quartic;
    else fail("quartic", p);
  }

  // P1 (negative roots, degree 8) * (x - w) * (x^2 + b1 x + b0) with b1 >= 0 and
  // complex roots never has the pattern +-----+++++- ; when a10 < 0, a8..a4 < 0.
  const SignPattern sigma0 = SignPattern::parse("+-----+++++-");
  int convolution = 0;
  int conv_samples = std::max(1, samples / 10);
  for (int s = 0; s < conv_samples; ++s) {
    RootConfiguration rc;
    for (int i = 0; i < 8; ++i) rc.negative_roots.push_back(rnd_rat(20));
    rc.positive_roots.push_back(rnd_rat(20));
    Rational b1 = coin(rng) == 0 ? Rational(0) : rnd_rat(10);
    Rational b0 = b1 * b1 / 4 + rnd_rat(10);
    Polynomial p = expand_from_roots(rc) * Polynomial{b0, b1, 1};
    bool ok = true;
    try {
      if (pattern_of(p) == sigma0) ok = false;
    } catch (const Error&) {
    }
    if (p.coeff(10) < 0)
      for (int j = 4; j <= 8; ++j)
        if (p.coeff(j) >= 0) ok = false;
    if (ok) ++convolution;
    else fail("convolution", p);
  }

  res.evidence["hyperbolic_passed"] = hyperbolic;
  res.evidence["hyperbolic_samples"] = samples;
  res.evidence["quartic_passed"] = quartic;
  res.evidence["quartic_samples"] = samples;
  res.evidence["convolution_passed"] = convolution;
  res.evidence["convolution_samples"] = conv_samples;
  res.evidence["seed"] = seed;
  if (!failures.empty()) res.evidence["failures"] = failures;
  res.verdict = failures.empty() ? Verdict::Verified : Verdict::Refuted;
  return res;
}

ClaimResult theorem_consistency_search(const SearchBudget& budget) {
  Claim c;
  c.id = "theorem-consistency";
  c.kind = ClaimKind::SearchConsistency;
  c.pattern = "+-----+++++-";
  c.pos = 1;
  c.neg = 8;
  c.control_pattern = "++++++++++++";
  c.control_pos = 0;
  c.control_neg = 11;
  c.budget = budget.max_samples;
  c.seed = budget.rng_seed;
  Scope empty;
  return verify_claim(c, empty);
}

ClaimResult verify_claim(const Claim& claim, const Scope& globals, const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ClaimResult res;
  try {
    ClaimContext ctx(claim, globals);
    res = dispatch(claim, ctx.scope, opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ManifestParse || e.code() == ErrorCode::UnknownClaimKind) throw;
    // NotCertifiable and resource limits are reported, never turned into refutations.
    res.verdict = Verdict::Inconclusive;
    res.evidence["error"] = to_string(e.code());
    res.evidence["message"] = e.what();
  }
  res.id = claim.id;
  res.kind = claim.kind;
  res.citation = claim.citation;
  res.seconds = seconds_since(t0);
  return res;
}

std::vector<ClaimResult> run_manifest(const Manifest& m, const VerifyOptions& opts,
                                      const std::vector<std::string>& only, int workers) {
  Scope globals;
  for (const auto& [name, text] : m.definitions) globals.define(name, text);
  std::vector<const Claim*> selected;
  for (const auto& c : m.claims)
    if (only.empty() || std::find(only.begin(), only.end(), c.id) != only.end()) selected.push_back(&c);
  MultiPoly::set_term_cap(opts.expand_term_cap);
  std::vector<ClaimResult> out(selected.size());
  parallel_for(selected.size(), workers, [&](std::size_t i) { out[i] = verify_claim(*selected[i], globals, opts); });
  return out;
}

}  // namespace descartes
