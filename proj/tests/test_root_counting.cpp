#include <random>
#include <set>

#include "descartes/root_counting.hpp"
#include "descartes/sign_pattern.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace descartes;
using oracle::q;

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(Polynomial{1, -2, 1}) == (Polynomial{-1, 1}));
  CHECK(squarefree_part(Polynomial{1, 0, 1}) == (Polynomial{1, 0, 1}));
  // (x+2)^3 (x-5) -> (x+2)(x-5) = x^2 - 3x - 10.
  auto p = Polynomial(oracle::from_roots({-2, -2, -2, 5}));
  CHECK(squarefree_part(p) == (Polynomial{-10, -3, 1}));
  auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0] == (Polynomial{-5, 1}));
  CHECK(dec[2] == (Polynomial{2, 1}));
}

TEST_CASE("Sturm counts") {
  CHECK(count_roots_in(Polynomial{-1, 0, 1}, 0, 2) == 1);
  CHECK(count_roots_in(Polynomial{1, 0, 1}, -10, 10) == 0);
  CHECK(count_roots_in(Polynomial{112, -98, 28, -2}, -1000000, 1000000) == 1);
  CHECK(count_real_roots(Polynomial(oracle::from_roots({-3, q(1, 2), 7, 7}))) == 3);
  // Endpoint roots are nudged outward, so a root at an endpoint is counted.
  CHECK(count_roots_in(Polynomial{-1, 0, 1}, 1, 2) == 1);

  // Additivity over a partition whose cut points avoid the roots.
  auto p = Polynomial(oracle::from_roots({-5, -1, q(1, 3), 2, 9}));
  CHECK(count_roots_in(p, -10, q(1, 7)) + count_roots_in(p, q(1, 7), 10) == count_roots_in(p, -10, 10));
  CHECK(cauchy_bound(Polynomial{-6, 1, 1}) == 7);
}

TEST_CASE("root summary") {
  auto s = root_summary(Polynomial{-1, 0, 1});
  CHECK(s.pos_distinct == 1);
  CHECK(s.neg_distinct == 1);
  CHECK(s.complex_pairs == 0);

  std::vector<oracle::Q> roots(8, oracle::Q(-1));
  roots.insert(roots.end(), {2, 2, 2});
  auto t = root_summary(Polynomial(oracle::from_roots(roots)));
  CHECK(t.neg_with_mult == 8);
  CHECK(t.pos_with_mult == 3);
  CHECK(t.neg_distinct == 1);
  CHECK(t.pos_distinct == 1);

  auto z = root_summary(Polynomial(oracle::from_roots({0, 0, 1}, {{1, 1}})));
  CHECK(z.zero_mult == 2);
  CHECK(z.complex_pairs == 1);
  CHECK(z.pos_with_mult == 1);
}

TEST_CASE("isolation") {
  auto iv = isolate_real_roots(Polynomial{-2, 0, 1}, q(1, 1000));
  REQUIRE(iv.size() == 2);
  for (const auto& r : iv) {
    CHECK(r.hi - r.lo <= q(1, 1000));
    CHECK((r.lo * r.lo - 2) * (r.hi * r.hi - 2) <= 0);
  }
  CHECK(iv[0].hi < -q(1413, 1000));
  CHECK(iv[1].lo > q(1413, 1000));

  auto c = isolate_real_roots(Polynomial{-64, 300, -502, 1345, -444, 40}, q(1, 10000));
  REQUIRE(c.size() == 1);
  CHECK(c[0].lo >= q(252, 1000));
  CHECK(c[0].hi <= q(254, 1000));

  auto c1 = isolate_real_roots(Polynomial{64, -136, -1355, 4730, -4064, 632, -2496, 384}, q(1, 1000));
  REQUIRE(c1.size() == 3);
  const double near[] = {-0.192, 0.269, 6.455};
  for (int i = 0; i < 3; ++i) {
    CHECK(to_double(c1[static_cast<std::size_t>(i)].lo) > near[i] - 0.002);
    CHECK(to_double(c1[static_cast<std::size_t>(i)].hi) < near[i] + 0.002);
  }

  // Exact rational roots come back as degenerate intervals or enclosing ones, with multiplicities.
  auto m = isolate_real_roots(Polynomial(oracle::from_roots({-1, -1, q(1, 2), 3, 3, 3})), q(1, 100));
  REQUIRE(m.size() == 3);
  CHECK(m[0].multiplicity == 2);
  CHECK(m[1].multiplicity == 1);
  CHECK(m[2].multiplicity == 3);
  for (std::size_t i = 0; i + 1 < m.size(); ++i) CHECK(m[i].hi < m[i + 1].lo);
}

TEST_CASE("isolation invariants on random products") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> nroots(1, 7), coin(0, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<oracle::Q> roots;
    std::vector<std::pair<oracle::Q, oracle::Q>> pairs;
    int n = nroots(rng);
    for (int i = 0; i < n; ++i) {
      auto r = oracle::rnd(rng, 40, 6) * (coin(rng) < 2 ? -1 : 1);
      roots.push_back(r);
      if (coin(rng) == 0) roots.push_back(r);  // a double root now and then
    }
    if (coin(rng) == 0) pairs.push_back({oracle::rnd(rng, 5, 3), oracle::rnd(rng, 5, 3)});
    auto p = Polynomial(oracle::from_roots(roots, pairs));
    auto iv = isolate_real_roots(p, q(1, 50));
    std::set<oracle::Q> distinct(roots.begin(), roots.end());
    REQUIRE(iv.size() == distinct.size());
    int mult = 0;
    auto it = distinct.begin();
    for (std::size_t i = 0; i < iv.size(); ++i, ++it) {
      CHECK(iv[i].lo <= *it);
      CHECK(*it <= iv[i].hi);
      CHECK(iv[i].hi - iv[i].lo <= q(1, 50));
      if (i + 1 < iv.size()) CHECK(iv[i].hi < iv[i + 1].lo);
      if (iv[i].lo < iv[i].hi && iv[i].multiplicity % 2 == 1)
        CHECK(p.sign_at(iv[i].lo) * p.sign_at(iv[i].hi) < 0);
      mult += iv[i].multiplicity;
    }
    CHECK(mult == static_cast<int>(roots.size()));
    auto b = cauchy_bound(p);
    CHECK(count_roots_in(p, -b, b) == static_cast<int>(distinct.size()));
  }
}
