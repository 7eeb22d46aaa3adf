#include "descartes/error.hpp"
#include "descartes/realizability.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace descartes;
using oracle::q;

namespace {
Couple C(const char* p, int pos, int neg) { return Couple(SignPattern::parse(p), {pos, neg}); }
RealizationCertificate cert_of(const Polynomial& p, int pos, int neg) {
  auto c = certify(p, Couple(pattern_of(p), {pos, neg}));
  REQUIRE(c);
  return *c;
}
}  // namespace

TEST_CASE("kappa") {
  CHECK(kappa({1, 5, 1}) == 16);
  CHECK(kappa({1, 5, 5}) == q(32, 5));
  CHECK(kappa({2, 1, 2}) == q(1, 4));
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= 6; ++k) CHECK(kappa({m, n, k}) == oracle::kappa(m, n, k));

  auto v = two_change_verdict({1, 5, 1});
  REQUIRE(v.nonrealizable);
  CHECK(v.nonrealizable->pos == 0);
  CHECK(v.nonrealizable->neg == 4);
  CHECK_FALSE(v.realizable.empty());
  for (const auto& a : v.realizable) CHECK(a.pos == 2);
  CHECK_FALSE(two_change_verdict({2, 1, 2}).nonrealizable);
  auto small = two_change_verdict({1, 1, 1});
  CHECK(small.kappa == 0);
  CHECK_FALSE(small.nonrealizable);

  auto tp = as_two_change(SignPattern::parse("++---+"));
  REQUIRE(tp);
  CHECK(tp->m == 2);
  CHECK(tp->n == 3);
  CHECK(tp->q == 1);
  CHECK_FALSE(as_two_change(SignPattern::parse("++-+-")));
  CHECK(excluded_by_kappa(C("+----+", 0, 3)));
  CHECK_FALSE(excluded_by_kappa(C("+----+", 2, 3)));
}

TEST_CASE("concatenation") {
  auto plus = cert_of(Polynomial{1, 1}, 0, 1);
  auto minus = cert_of(Polynomial{-1, 1}, 1, 0);

  auto a = concatenate(plus, minus);
  CHECK(a.couple.pattern.to_string() == "++-");
  CHECK(a.couple.pair == AdmissiblePair{1, 1});
  CHECK(a.poly == Polynomial(oracle::from_roots({-1, q(1, 2)})));

  auto b = concatenate(minus, plus);
  CHECK(b.couple.pattern.to_string() == "+--");
  CHECK(b.couple.pair == AdmissiblePair{1, 1});
  CHECK(verify_certificate(b));

  auto c = concatenate(plus, plus);
  CHECK(c.couple.pattern.to_string() == "+++");
  CHECK(c.couple.pair == AdmissiblePair{0, 2});

  // Additivity on a larger pair of building blocks.
  auto p1 = cert_of(Polynomial(oracle::from_roots({-1, 3}, {{1, 2}})), 1, 1);
  auto p2 = cert_of(Polynomial(oracle::from_roots({-2, -5, 4})), 1, 2);
  auto glued = concatenate(p1, p2);
  CHECK(glued.couple.pair == AdmissiblePair{2, 3});
  CHECK(glued.couple.pattern == concatenated_pattern(p1.couple.pattern, p2.couple.pattern));
  CHECK(verify_certificate(glued));
}

TEST_CASE("search") {
  SearchBudget budget{20000, 1, 3};
  auto lin = search_realizer(C("++", 0, 1), budget);
  REQUIRE(lin.certificate);
  CHECK(lin.certificate->poly == (Polynomial{1, 1}));

  auto star = search_realizer(C("++-++", 2, 2), budget);
  REQUIRE(star.certificate);
  CHECK(verify_certificate(*star.certificate));

  auto grabiner = search_realizer(C("++-++", 2, 0), budget);
  CHECK_FALSE(grabiner.certificate);
  CHECK(grabiner.samples == budget.max_samples);

  // Same seed, same outcome.
  auto again = search_realizer(C("++-++", 2, 2), budget);
  REQUIRE(again.certificate);
  CHECK(again.certificate->poly == star.certificate->poly);
  CHECK(again.samples == star.samples);
}

TEST_CASE("kappa exclusions are never found by search") {
  SearchBudget budget{5000, 3, 3};
  int checked = 0;
  for (int d = 3; d <= 8; ++d)
    for (const auto& pat : all_patterns(d)) {
      auto tp = as_two_change(pat);
      if (!tp || kappa(*tp) < 4) continue;
      auto out = search_realizer(Couple(pat, {0, d - 2}), budget);
      CHECK_FALSE(out.certificate);
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("classification of low degrees") {
  SearchBudget budget{20000, 1, 3};
  CertificatePool pool;
  for (int d = 1; d <= 3; ++d) {
    auto rep = classify_degree(d, budget, pool);
    CHECK(rep.not_realized() == 0);
    int couples = 0;
    for (const auto& o : rep.orbits) couples += static_cast<int>(o.orbit.couples.size());
    CHECK(couples == rep.couples);
  }
  auto four = classify_degree(4, budget, pool);
  CHECK(four.not_realized() == 1);
  for (const auto& o : four.orbits) {
    if (o.status == OrbitStatus::Realized) {
      REQUIRE(o.certificate);
      CHECK(verify_certificate(*o.certificate));
    } else {
      CHECK(o.orbit.canonical().key() == C("++-++", 2, 0).key());
    }
  }

  // Every admissible couple of degree 4 is covered exactly once.
  std::size_t total = 0;
  for (const auto& pat : all_patterns(4)) total += admissible_pairs(pat).size();
  CHECK(four.couples == static_cast<int>(total));

  CertificatePool fresh;
  auto again = classify_degree(4, budget, fresh);
  REQUIRE(again.orbits.size() == four.orbits.size());
  for (std::size_t i = 0; i < again.orbits.size(); ++i) {
    CHECK(again.orbits[i].method == four.orbits[i].method);
    if (again.orbits[i].certificate) CHECK(again.orbits[i].certificate->poly == four.orbits[i].certificate->poly);
  }
  CHECK_THROWS_AS(classify_degree(0, budget, fresh), Error);
}
