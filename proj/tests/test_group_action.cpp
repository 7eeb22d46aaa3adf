#include "descartes/error.hpp"
#include "descartes/group_action.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace descartes;

namespace {
Couple C(const char* p, int pos, int neg) { return Couple(SignPattern::parse(p), {pos, neg}); }
const char* kSigma0 = "+-----+++++-";
}  // namespace

TEST_CASE("revert and mirror on patterns") {
  CHECK(revert(SignPattern::parse("++-")).to_string() == "+--");
  CHECK(revert(SignPattern::parse("+++")).to_string() == "+++");
  CHECK(revert(SignPattern::parse(kSigma0)).to_string() == kSigma0);
  CHECK(mirror(SignPattern::parse("++")).to_string() == "+-");
  CHECK(mirror(SignPattern::parse("+++")).to_string() == "+-+");
  // Listed mirrored form of the degree-11 pattern.
  CHECK(mirror(SignPattern::parse(kSigma0)).to_string() == "++-+-++-+-++");
  for (int d = 1; d <= 8; ++d)
    for (const auto& s : all_patterns(d)) {
      CHECK(revert(s).to_string() == oracle::revert(s.to_string()));
      CHECK(mirror(s).to_string() == oracle::mirror(s.to_string()));
      CHECK(revert(revert(s)) == s);
      CHECK(mirror(mirror(s)) == s);
      CHECK(revert(mirror(s)) == mirror(revert(s)));
      auto dp = descartes_pair(s), dm = descartes_pair(mirror(s)), dr = descartes_pair(revert(s));
      CHECK(dm.changes == dp.preservations);
      CHECK(dr == dp);
    }
}

TEST_CASE("orbits") {
  // The palindromic four-sign pattern: revert fixes it, mirror gives +---+ with the pair swapped.
  auto o = orbit(C("++-++", 2, 0));
  REQUIRE(o.couples.size() == 2);
  CHECK(o.couples[0].key() == C("++-++", 2, 0).key());
  CHECK(o.couples[1].key() == C("+---+", 0, 2).key());

  auto t = orbit(C("+++", 0, 0));
  REQUIRE(t.couples.size() == 2);
  CHECK(t.couples[1].pattern.to_string() == "+-+");

  auto u = orbit(C("++", 0, 1));
  REQUIRE(u.couples.size() == 2);
  CHECK(u.couples[1].key() == C("+-", 1, 0).key());

  auto f = orbit(C("++-", 1, 1));
  CHECK(f.couples.size() == 2);
  auto g = orbit(C("++-+", 2, 1));
  CHECK(g.couples.size() == 4);

  for (const auto& m : g.couples) {
    auto again = orbit(m);
    CHECK(again.couples == g.couples);
    CHECK(canonical(m) == g.canonical());
  }
}

TEST_CASE("certificate transport") {
  auto plus = certify(Polynomial{1, 1}, C("++", 0, 1));
  REQUIRE(plus);
  auto r = transport_certificate(*plus, Generator::Revert);
  CHECK(r.poly == (Polynomial{1, 1}));

  auto minus = certify(Polynomial{-1, 1}, C("+-", 1, 0));
  REQUIRE(minus);
  auto m = transport_certificate(*minus, Generator::Mirror);
  CHECK(m.poly == (Polynomial{1, 1}));
  CHECK(m.couple.key() == C("++", 0, 1).key());
  CHECK(verify_certificate(m));

  // (x+1)(x+2)(x-3)(x-4) realizes (+,-,-,-,+)? Its pattern is read off exactly by certify.
  Polynomial p(oracle::from_roots({-1, -2, 3, 4}));
  auto cert = certify(p, Couple(pattern_of(p), {2, 2}));
  REQUIRE(cert);
  for (const auto& target : orbit(cert->couple).couples) {
    auto moved = transport_to(*cert, target);
    REQUIRE(moved);
    CHECK(verify_certificate(*moved));
    CHECK(moved->couple == target);
  }
  // Wrong claims are rejected.
  CHECK_FALSE(certify(p, Couple(pattern_of(p), {0, 2})));
  // (x-1)^2 (x+3) has two positive roots counted with multiplicity but only one distinct.
  CHECK_FALSE(certify(Polynomial(oracle::from_roots({1, 1, -3})), C("++-+", 2, 1)));

  auto zero = certify(Polynomial(oracle::from_roots({0, -1})), C("++", 0, 1));
  CHECK_FALSE(zero);
  CHECK_THROWS_AS(revert(Polynomial{0, 1, 1}), Error);
}
