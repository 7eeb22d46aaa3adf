#include <random>

#include "descartes/claims.hpp"
#include "descartes/elimination.hpp"
#include "descartes/error.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace descartes;
using oracle::q;

namespace {

const std::string kManifest = std::string(DESCARTES_SOURCE_DIR) + "/claims/paper.json";

MultiPoly V(const char* n) { return MultiPoly::variable(n); }
MultiPoly K(const Rational& c) { return MultiPoly::constant(c); }

MultiPoly eval_poly(const std::string& text) {
  Scope s;
  Evaluator ev(s);
  return ev.eval_polynomial(parse_expression(text));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::map<std::string, ClaimResult> run_ids(const std::string& path, const std::vector<std::string>& ids) {
  auto m = load_manifest(path);
  std::map<std::string, ClaimResult> out;
  for (auto& r : run_manifest(m, {}, ids)) out[r.id] = r;
  REQUIRE(out.size() == ids.size());
  return out;
}

}  // namespace

TEST_CASE("expressions") {
  auto x = V("x"), y = V("y");
  CHECK(eval_poly("(x+y)^2") == x * x + x * y * Rational(2) + y * y);
  CHECK(eval_poly("2.5*x - 1/2") == x * q(5, 2) - K(q(1, 2)));
  CHECK(eval_poly("coeff((x+1)^3, x, 2)") == K(3));
  CHECK(eval_poly("coeff((x+y)^3, x, 1)") == y * y * Rational(3));
  CHECK(eval_poly("diff(x^3*y, x)") == x * x * y * Rational(3));
  CHECK(eval_poly("diff(x^3, x, 2)") == x * Rational(6));
  CHECK(eval_poly("subs(x^2+y, x, y-1)") == y * y - y + K(1));
  CHECK(eval_poly("det([x,1],[y,2])") == x * Rational(2) - y);
  // Y^2 replaced by R.
  CHECK(eval_poly("sqrt_reduce((1+Y)^2, Y, x)") == K(1) + V("Y") * Rational(2) + x);

  Scope s;
  s.define("P", "(x-a)*(x-b)");
  Scope inner(&s);
  inner.define("a", "2");
  Evaluator ev(inner);
  CHECK(ev.eval_polynomial(parse_expression("P")) == (x - K(2)) * (x - V("b")));
  auto r = ev.eval(parse_expression("1/(x+1) + 1"));
  CHECK_FALSE(r.is_polynomial());
  CHECK(r.num == x + K(2));

  CHECK(code_of([] { parse_expression("1+"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_expression("coeff(x)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_expression("(x"); }) == ErrorCode::ParseError);
}

TEST_CASE("sparse polynomials") {
  auto x = V("x"), y = V("y");
  auto f = (x + y).pow(3);
  CHECK(f.size() == 4);
  CHECK(f.degree_in(vars::intern("x")) == 3);
  CHECK(f.coeff_in(vars::intern("x"), 1) == y * y * Rational(3));
  CHECK(f.substitute(vars::intern("y"), -x).is_zero());
  std::map<int, Rational> pt{{vars::intern("x"), 2}, {vars::intern("y"), 1}};
  CHECK(f.evaluate_all(pt) == 27);
  CHECK((f - f).is_zero());
}

TEST_CASE("identity checking") {
  Scope s;
  auto ok = verify_identity("(x+y)^2", "x^2+2*x*y+y^2", s);
  CHECK(ok.verdict == Verdict::Verified);
  auto bad = verify_identity("(x+y)^2", "x^2+y^2", s);
  CHECK(bad.verdict == Verdict::Refuted);
  REQUIRE(bad.evidence.contains("witness"));
  CHECK(bad.evidence["lhs_value"] != bad.evidence["rhs_value"]);

  // Expansion and grid evaluation agree on random products.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-4, 4), e(0, 3);
  for (int t = 0; t < 40; ++t) {
    std::string a = "(" + std::to_string(c(rng)) + "*x+y^" + std::to_string(e(rng)) + "+z)";
    std::string b = "(x-" + std::to_string(c(rng)) + "*z^" + std::to_string(e(rng)) + ")";
    std::string lhs = a + "*" + b + "^2";
    std::string rhs = t % 2 ? lhs + "+0" : lhs + "+x*y*z";
    auto both = verify_identity(lhs, rhs, s, "both");
    CHECK(both.evidence["strategy"] == "both");
    CHECK((both.verdict == Verdict::Verified) == (t % 2 == 1));
  }
}

TEST_CASE("univariate root claims") {
  auto a30 = verify_univariate_roots(Polynomial{112, -98, 28, -2}, {{parse_rational("9.436"), q(5, 1000)}}, 1);
  CHECK(a30.verdict == Verdict::Verified);
  auto d = verify_univariate_roots(Polynomial{-40, 444, -1345, 502, -300, 64}, {{parse_rational("3.939"), q(5, 1000)}}, 1);
  CHECK(d.verdict == Verdict::Verified);
  CHECK(verify_univariate_roots(Polynomial{1, 0, 1}, {}, 0).verdict == Verdict::Verified);
  CHECK(verify_univariate_roots(Polynomial{1, 0, 1}, {}, 1).verdict == Verdict::Refuted);
  auto off = verify_univariate_roots(Polynomial{112, -98, 28, -2}, {{parse_rational("9.5"), q(5, 1000)}}, 1);
  CHECK(off.verdict == Verdict::Refuted);
  // Range restriction: x^2 - 1 has one root in (0, inf).
  CHECK(verify_univariate_roots(Polynomial{-1, 0, 1}, {{1, q(1, 1000)}}, 1, Rational(0)).verdict == Verdict::Verified);
}

TEST_CASE("box positivity") {
  auto x = V("x"), y = V("y");
  int xi = vars::intern("x"), yi = vars::intern("y");
  Box sq{{xi, -1, Rational(1)}, {yi, -1, Rational(1)}};
  CHECK(verify_box_positivity(x * x + y * y + K(1), sq, true).verdict == Verdict::Verified);
  CHECK(verify_box_positivity(x * x + y * y, sq, false).verdict == Verdict::Verified);
  CHECK(verify_box_positivity(x * x + y * y, sq, true).verdict == Verdict::Refuted);

  auto neg = verify_box_positivity(x * x - K(q(1, 4)) + y * Rational(0), sq, true);
  REQUIRE(neg.verdict == Verdict::Refuted);
  CHECK((x * x - K(q(1, 4))).evaluate_all(neg.witness) <= 0);

  // Unbounded side: (x-1)^2 + 1 on [0, inf).
  Box half{{xi, 0, std::nullopt}};
  CHECK(verify_box_positivity((x - K(1)) * (x - K(1)) + K(1), half, true).verdict == Verdict::Verified);

  // Enclosures contain the exact values on a dense grid of random polynomials.
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int t = 0; t < 30; ++t) {
    MultiPoly f;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 2; ++j) f += x.pow(static_cast<unsigned>(i)) * y.pow(static_cast<unsigned>(j)) * Rational(c(rng));
    Box b{{xi, q(-1, 2), Rational(1)}, {yi, 0, Rational(2)}};
    auto [lo, hi] = enclose(f, b);
    for (int i = 0; i <= 12; ++i)
      for (int j = 0; j <= 12; ++j) {
        std::map<int, Rational> pt{{xi, q(-1, 2) + q(i, 8)}, {yi, q(j, 6)}};
        auto v = f.evaluate_all(pt);
        CHECK(lo <= v);
        CHECK(v <= hi);
      }
    auto r = verify_box_positivity(f, b, true);
    if (r.verdict == Verdict::Refuted) CHECK(f.evaluate_all(r.witness) <= 0);
  }
}

TEST_CASE("coefficient positivity") {
  Scope s;
  Evaluator ev(s);
  auto f = ev.eval(parse_expression("(2+v+w) - v*w/(5*v*w+v+w)"));
  CHECK(verify_coeff_positivity(f).verdict == Verdict::Verified);
  // The numerator is (2+v+w)(5vw+v+w) - vw; its vw coefficient is 10 + 2 - 1 = 11.
  auto num = f.num;
  int v = vars::intern("v"), w = vars::intern("w");
  CHECK(num.coeff_in(v, 1).coeff_in(w, 1).constant_term() == 11);
  CHECK(verify_coeff_positivity(ev.eval(parse_expression("1+x"))).verdict == Verdict::Verified);
  CHECK(code_of([&] { verify_coeff_positivity(ev.eval(parse_expression("1-x"))); }) == ErrorCode::NotCertifiable);

  // Spot check: positive at random positive points.
  std::mt19937_64 rng(2);
  for (int t = 0; t < 1000; ++t) {
    std::map<int, Rational> pt{{v, oracle::rnd(rng, 50, 9)}, {w, oracle::rnd(rng, 50, 9)}};
    CHECK(f.num.evaluate_all(pt) / f.den.evaluate_all(pt) > 0);
  }
}

TEST_CASE("rank and elimination") {
  CHECK(verify_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3).verdict == Verdict::Verified);
  CHECK(verify_rank({{1, 2}, {2, 4}}, 2).verdict == Verdict::Refuted);
  CHECK(determinant({{2, 1}, {7, 4}}) == 1);
  CHECK(rank({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);

  auto x = V("x"), y = V("y");
  auto r = resultant(x * x - K(2), x - y, vars::intern("x"));
  auto want = y * y - K(2);
  CHECK((r == want || r == -want));

  auto none = verify_no_positive_solution({x + y + K(1), x - y}, {vars::intern("x"), vars::intern("y")});
  CHECK(none.verdict == Verdict::Verified);
  auto some = verify_no_positive_solution({x - K(1), y - K(2)}, {vars::intern("x"), vars::intern("y")});
  CHECK(some.verdict != Verdict::Verified);
}

TEST_CASE("worked examples from the shipped manifest") {
  std::vector<std::string> ids{"caseC-27a10",         "caseD-H-strip",        "caseC-Sigma6",
                               "caseA-a30-roots",     "caseB-D-roots",        "caseB-C-roots",
                               "caseD-tau-chain",     "caseD-C2-largest-root", "triple-root-Xi-positive",
                               "triple-root-27a1",    "three-roots-detJ1",    "four-roots-Jstar-rank-a6",
                               "six-roots-M-rank-a5", "three-roots-system-a5", "kappa-list",
                               "five-roots-case1-a6-a10-positive"};
  for (const auto& [id, r] : run_ids(kManifest, ids)) {
    INFO(id);
    CHECK(r.verdict == Verdict::Verified);
  }
}

TEST_CASE("printed determinant constant is refuted") {
  auto r = run_ids(std::string(DESCARTES_SOURCE_DIR) + "/claims/errata.json", {"errata-detJ1-printed"});
  auto& res = r.at("errata-detJ1-printed");
  CHECK(res.verdict == Verdict::Refuted);
  CHECK(res.evidence.contains("witness"));
}

TEST_CASE("manifest handling") {
  CHECK(parse_manifest(R"({"schema":"descartes-manifest/1","claims":[]})").claims.empty());
  CHECK(run_manifest(parse_manifest(R"({"schema":"descartes-manifest/1","claims":[]})")).empty());
  CHECK(code_of([] { parse_manifest("{not json"); }) == ErrorCode::ManifestParse);
  CHECK(code_of([] {
          parse_manifest(R"({"schema":"descartes-manifest/1","claims":[{"id":"a","kind":"Nope","citation":"c"}]})");
        }) == ErrorCode::UnknownClaimKind);
  CHECK(code_of([] {
          parse_manifest(R"({"schema":"descartes-manifest/1","claims":[
            {"id":"a","kind":"PolyIdentity","citation":"c","variables":["x"],"expressions":{"lhs":"x","rhs":"x"}},
            {"id":"a","kind":"PolyIdentity","citation":"c","variables":["x"],"expressions":{"lhs":"x","rhs":"x"}}]})");
        }) == ErrorCode::ManifestParse);
  CHECK(code_of([] { load_manifest("/nonexistent/manifest.json"); }) == ErrorCode::ManifestParse);

  // Corrupting one coefficient of the polynomial S turns its identity into a refutation.
  auto m = load_manifest(kManifest);
  Manifest one;
  one.schema = m.schema;
  for (auto c : m.claims)
    if (c.id == "caseC-27a10") {
      for (auto& [name, text] : c.definitions)
        if (name == "S") {
          REQUIRE(text.rfind("10*w*t^2", 0) == 0);
          text.replace(0, 2, "11");
        }
      one.claims.push_back(c);
    }
  REQUIRE(one.claims.size() == 1);
  auto res = run_manifest(one);
  CHECK(res[0].verdict == Verdict::Refuted);
  CHECK(res[0].evidence.contains("witness"));
}

TEST_CASE("consistency batteries") {
  auto dc = verify_descartes_consequences(500, 4);
  CHECK(dc.verdict == Verdict::Verified);
  CHECK(dc.evidence["hyperbolic_passed"] == 500);
  CHECK(verify_kappa_list(1, 5, {1, 2, 3, 4, 5}, {16, 10, 8, 7, q(32, 5)}).verdict == Verdict::Verified);
  CHECK(verify_kappa_list(1, 5, {1}, {15}).verdict == Verdict::Refuted);
  CHECK(theorem_consistency_search({0, 1, 3}).verdict == Verdict::Inconclusive);
  auto small = theorem_consistency_search({2000, 1, 3});
  CHECK(small.verdict == Verdict::Verified);
  CHECK(small.evidence["control_found"] == true);
  CHECK(to_decimal(q(1, 3), 4) == "0.3333");
}
