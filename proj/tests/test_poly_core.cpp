#include <random>

#include "descartes/error.hpp"
#include "descartes/sign_pattern.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace descartes;
using oracle::q;

namespace {

Polynomial P(const oracle::Coeffs& c) { return Polynomial(c); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::string pairs_text(const std::vector<AdmissiblePair>& v) {
  std::string s;
  for (const auto& p : v) s += "(" + std::to_string(p.pos) + "," + std::to_string(p.neg) + ")";
  return s;
}

}  // namespace

TEST_CASE("rationals parse exactly") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-4.791") == q(-4791, 1000));
  CHECK(parse_rational("0.208") == q(26, 125));
  CHECK(parse_rational("007") == 7);
  CHECK(to_string(q(10, 4)) == "5/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_rational("abc"); }) == ErrorCode::ParseError);
}

TEST_CASE("sign patterns and Descartes pairs") {
  auto s = SignPattern::parse("+-----+++++-");
  CHECK(s.degree() == 11);
  auto dp = descartes_pair(s);
  CHECK(dp.changes == 3);
  CHECK(dp.preservations == 8);
  CHECK(descartes_pair(SignPattern::parse("++-++")) == DescartesPair{2, 2});
  CHECK(code_of([] { SignPattern::parse("-+"); }) == ErrorCode::BadPattern);
  CHECK(code_of([] { SignPattern::parse("+x"); }) == ErrorCode::BadPattern);
  CHECK(SignPattern::parse("++-") < SignPattern::parse("+-+"));
}

TEST_CASE("admissible pairs") {
  CHECK(pairs_text(admissible_pairs(SignPattern::parse("++-++"))) == "(0,0)(0,2)(2,0)(2,2)");
  CHECK(pairs_text(admissible_pairs(SignPattern::parse("++"))) == "(0,1)");
  auto sigma0 = admissible_pairs(SignPattern::parse("+-----+++++-"));
  CHECK(std::find(sigma0.begin(), sigma0.end(), AdmissiblePair{1, 8}) != sigma0.end());
  CHECK(code_of([] { Couple(SignPattern::parse("++"), {1, 0}); }) == ErrorCode::InadmissiblePair);

  // Exhaustive agreement with the brute-force oracle for every pattern up to degree 9.
  for (int d = 1; d <= 9; ++d)
    for (const auto& pat : all_patterns(d)) {
      auto got = admissible_pairs(pat);
      auto want = oracle::admissible(pat.to_string());
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].pos == want[i].first);
        CHECK(got[i].neg == want[i].second);
      }
      auto dp = descartes_pair(pat);
      CHECK(dp.changes + dp.preservations == d);
      CHECK(dp.changes == oracle::changes(pat.to_string()));
    }
  CHECK(all_patterns(6).size() == 64);
}

TEST_CASE("pattern_of") {
  CHECK(pattern_of(Polynomial{-1, 3, 1}).to_string() == "++-");
  CHECK(pattern_of(Polynomial{1, -3, -1}).to_string() == "++-");
  CHECK(code_of([] { pattern_of(Polynomial{1, 0, -1, 1}); }) == ErrorCode::ZeroCoefficient);
  CHECK(code_of([] { pattern_of(Polynomial{}); }) == ErrorCode::ZeroPolynomial);

  // (x+1)^7 (x+1/9) (3x-1)^2 (x-1) times a negative constant.
  oracle::Coeffs c{q(-5, 2)};
  for (int i = 0; i < 7; ++i) c = oracle::mul(c, {1, 1});
  c = oracle::mul(c, {q(1, 9), 1});
  c = oracle::mul(c, {-1, 3});
  c = oracle::mul(c, {-1, 3});
  c = oracle::mul(c, {-1, 1});
  CHECK(pattern_of(P(c)).to_string() == oracle::pattern(c));
}

TEST_CASE("expand_from_roots") {
  RootConfiguration a;
  a.negative_roots = {1, 1};
  CHECK(expand_from_roots(a) == (Polynomial{1, 2, 1}));

  RootConfiguration b;
  b.positive_roots = {1};
  b.complex_pairs = {{0, 1}};
  CHECK(expand_from_roots(b) == (Polynomial{-1, 1, -1, 1}));

  RootConfiguration c;
  c.negative_roots.assign(8, Rational(1));
  c.positive_roots = {1, 1, 2};
  std::vector<oracle::Q> roots(8, oracle::Q(-1));
  roots.insert(roots.end(), {1, 1, 2});
  auto want = oracle::from_roots(roots);
  CHECK(expand_from_roots(c) == P(want));
  CHECK(expand_from_roots(c).degree() == 11);
}

TEST_CASE("scale_substitute") {
  CHECK(scale_substitute(Polynomial{-1, 1}, q(1, 2)) == (Polynomial{q(-1, 2), 1}));
  CHECK(scale_substitute(Polynomial{1, 1, 1}, q(1, 3)) == (Polynomial{q(1, 9), q(1, 3), 1}));

  // Roots scale by eps: P(x/eps) vanishes at eps * r.
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<oracle::Q> roots;
    for (int i = 0; i < 5; ++i) roots.push_back(oracle::rnd(rng, 20, 5) * (i % 2 ? 1 : -1));
    auto eps = oracle::rnd(rng, 3, 9);
    auto s = scale_substitute(P(oracle::from_roots(roots)), eps);
    for (const auto& r : roots) CHECK(s.evaluate(eps * r) == 0);
    CHECK(s.leading() == 1);
  }
}

TEST_CASE("ring operations against naive oracles") {
  CHECK(Polynomial{1, 1} * Polynomial{-1, 1} == (Polynomial{-1, 0, 1}));
  CHECK(Polynomial::monomial(1, 3).derivative() == Polynomial::monomial(3, 2));
  // -2t^3+28t^2-98t+112 at t=9: -1458 + 2268 - 882 + 112 = 40.
  CHECK(Polynomial{112, -98, 28, -2}.evaluate(9) == 40);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(0, 12), num(-30, 30), den(1, 7);
  auto random_coeffs = [&] {
    oracle::Coeffs c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = q(num(rng), den(rng));
    c.back() = c.back() == 0 ? oracle::Q(1) : c.back();
    return c;
  };
  for (int t = 0; t < 300; ++t) {
    auto a = random_coeffs(), b = random_coeffs();
    CHECK(P(a) * P(b) == P(oracle::mul(a, b)));
    CHECK(P(a) + P(b) == P(oracle::add(a, b)));
    auto x = q(num(rng), den(rng));
    CHECK(P(a).evaluate(x) == oracle::horner(a, x));
    auto [quo, rem] = P(a).divmod(P(b));
    CHECK(quo * P(b) + rem == P(a));
    CHECK(rem.degree() < P(b).degree());
  }
}

TEST_CASE("degree limit and text form") {
  std::vector<Rational> big(66, Rational(1));
  CHECK(code_of([&] { Polynomial p(big); }) == ErrorCode::DegreeLimitExceeded);
  auto p = Polynomial::parse("1/2,-3,0,1");
  CHECK(p.degree() == 3);
  CHECK(p.coeff(0) == q(1, 2));
  CHECK(Polynomial::parse(p.to_string()) == p);
  CHECK(code_of([] { Polynomial::parse("1,,2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Polynomial{1, 1}.divmod(Polynomial{}); }) == ErrorCode::ZeroPolynomial);
}
