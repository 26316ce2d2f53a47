#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "polymap/classify.hpp"
#include "polymap/inject_z.hpp"
#include "test_util.hpp"

using namespace polymap;
using testutil::Rng;

namespace {

MultiPoly uni(std::vector<long> coeffs) {  // ascending
  MultiPoly p(1, CoeffRing::integers());
  for (unsigned i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.add_term({i}, Scalar::integer(coeffs[i]));
  return p;
}

mpz_class eval_at(const MultiPoly& f, const mpz_class& x) {
  return f.eval({Scalar::integer(x)}).as_integer();
}

}  // namespace

TEST_CASE("pinned integer injectivity verdicts") {
  SUBCASE("odd power maps inject") {
    CHECK(injectivity_over_Z_univariate(uni({0, 0, 0, 1})).injective);   // x^3
    CHECK(injectivity_over_Z_univariate(uni({0, 0, 0, 0, 0, 1})).injective);
  }
  SUBCASE("x^2 collides at (-1, 1)") {
    auto r = injectivity_over_Z_univariate(uni({0, 0, 1}));
    CHECK_FALSE(r.injective);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->first == -1);
    CHECK(r.witness->second == 1);
  }
  SUBCASE("x^3 - 48x collides far from the origin") {
    // f(-8) = -128 = f(4): a wide-band collision; the two points straddle
    // the critical band but sit well outside the naive coefficient bounds.
    auto r = injectivity_over_Z_univariate(uni({0, -48, 0, 1}));
    CHECK_FALSE(r.injective);
    REQUIRE(r.witness.has_value());
    mpz_class a = r.witness->first, b = r.witness->second;
    CHECK(a < b);
    CHECK(eval_at(uni({0, -48, 0, 1}), a) == eval_at(uni({0, -48, 0, 1}), b));
  }
  SUBCASE("x(x-1)(2x-1) collides at (0, 1)") {
    auto r = injectivity_over_Z_univariate(uni({0, 1, -3, 2}));
    CHECK_FALSE(r.injective);
    REQUIRE(r.witness.has_value());
    CHECK(eval_at(uni({0, 1, -3, 2}), r.witness->first) ==
          eval_at(uni({0, 1, -3, 2}), r.witness->second));
  }
  SUBCASE("x(2x-1)(3x-1) is injective on Z") {
    CHECK(injectivity_over_Z_univariate(uni({0, 1, -5, 6})).injective);
  }
  SUBCASE("even-degree maps with an axis of symmetry collide") {
    // (x - 3)^2: symmetric about 3, witness on opposite sides.
    MultiPoly f = uni({9, -6, 1});
    auto r = injectivity_over_Z_univariate(f);
    CHECK_FALSE(r.injective);
    REQUIRE(r.witness.has_value());
    CHECK(eval_at(f, r.witness->first) == eval_at(f, r.witness->second));
  }
  SUBCASE("x^4 + 2x is injective") {
    // Candidate sums solve exactly: (a+b)(a^2+b^2) = -2 has no integer
    // solutions, so no collision exists despite the even degree.
    CHECK(injectivity_over_Z_univariate(uni({0, 2, 0, 0, 1})).injective);
  }
  SUBCASE("degenerate degrees") {
    auto r = injectivity_over_Z_univariate(uni({5}));  // constant
    CHECK_FALSE(r.injective);
    REQUIRE(r.witness.has_value());
    CHECK(eval_at(uni({5}), r.witness->first) ==
          eval_at(uni({5}), r.witness->second));
    CHECK(injectivity_over_Z_univariate(uni({3, -7})).injective);  // linear
    auto z = injectivity_over_Z_univariate(MultiPoly(1, CoeffRing::integers()));
    CHECK_FALSE(z.injective);
  }
  SUBCASE("negative leading coefficient mirrors the positive case") {
    CHECK(injectivity_over_Z_univariate(uni({0, -48, 0, -1})).injective ==
          injectivity_over_Z_univariate(uni({0, 48, 0, 1})).injective);
    auto r = injectivity_over_Z_univariate(uni({0, 48, 0, -1}));
    CHECK_FALSE(r.injective);  // -(x^3 - 48x)
  }
}

TEST_CASE("integer injectivity agrees with a brute-force window scan") {
  Rng rng(661);
  int witnesses = 0;
  for (int trial = 0; trial < 300; ++trial) {
    MultiPoly f = testutil::random_poly(rng, 1, 4, 20, 5);
    if (f.is_zero()) continue;
    IntegerInjectivity r;
    try {
      r = injectivity_over_Z_univariate(f);
    } catch (const BudgetError&) {
      continue;  // window too large to scan; the bound itself is under test
    }
    if (r.injective) {
      // Independent check: no collision among |a|, |b| <= 40.  (The library
      // window always contains this range when a collision could hide there;
      // an injective verdict must survive any finite scan.)
      std::map<mpz_class, mpz_class> seen;
      bool clean = true;
      for (long x = -40; x <= 40 && clean; ++x) {
        mpz_class v = eval_at(f, x);
        auto [it, fresh] = seen.try_emplace(v, x);
        clean = fresh;
      }
      CHECK(clean);
    } else {
      ++witnesses;
      REQUIRE(r.witness.has_value());
      CHECK(r.witness->first < r.witness->second);
      CHECK(eval_at(f, r.witness->first) == eval_at(f, r.witness->second));
    }
  }
  CHECK(witnesses > 50);  // both verdicts exercised
}

TEST_CASE("forced large collisions are found (randomized family)") {
  Rng rng(662);
  for (long n = 3; n <= 60; n += 3) {
    // x^2 - n x collides at (x, n - x) for every x.
    auto r = injectivity_over_Z_univariate(uni({0, -n, 1}));
    CHECK_FALSE(r.injective);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->first + r.witness->second == n);
  }
}

TEST_CASE("budget is enforced, never silently truncated") {
  // Huge coefficients make the derived window astronomically wide.
  MultiPoly f = uni({0, -2000000, 0, 1});
  CHECK_THROWS_AS(injectivity_over_Z_univariate(f, 1000), BudgetError);
}

TEST_CASE("non-univariate input is rejected") {
  MultiPoly g(2, CoeffRing::integers());
  g.add_term({1, 1}, Scalar::integer(1));
  CHECK_THROWS_AS(injectivity_over_Z_univariate(g), PreconditionError);
}

TEST_CASE("membership in Z_(p)") {
  CHECK(zloc_membership(mpq_class(3, 4), 5));
  CHECK_FALSE(zloc_membership(mpq_class(3, 4), 2));
  CHECK(zloc_membership(mpq_class(7), 7));     // integers always belong
  CHECK_FALSE(zloc_membership(mpq_class(1, 7), 7));
  CHECK(zloc_membership(mpq_class(0), 2));
  // Reduction happens first: 2/4 = 1/2 is not 2-integral, 2/6 = 1/3 is.
  CHECK_FALSE(zloc_membership(mpq_class(2, 4), 2));
  CHECK(zloc_membership(mpq_class(2, 6), 2));
}

TEST_CASE("rational non-injectivity witnesses in Z_(p)") {
  // f = x(2x - 1)(3x - 1) = 6x^3 - 5x^2 + x: fiber over 0 is {0, 1/2, 1/3}.
  MultiPoly f = uni({0, 1, -5, 6});

  SUBCASE("p = 5 pairs 0 with 1/2") {
    auto w = rational_noninjectivity_witness(f, 5);
    REQUIRE(w.has_value());
    CHECK(w->p == 5);
    CHECK(w->a == 0);
    CHECK(w->b == mpq_class(1, 2));
    CHECK(w->value == 0);
  }
  SUBCASE("p = 2 pairs 0 with 1/3") {
    auto w = rational_noninjectivity_witness(f, 2);
    REQUIRE(w.has_value());
    CHECK(w->a == 0);
    CHECK(w->b == mpq_class(1, 3));
  }
  SUBCASE("p = 3 avoids 1/3") {
    auto w = rational_noninjectivity_witness(f, 3);
    REQUIRE(w.has_value());
    CHECK(w->a == 0);
    CHECK(w->b == mpq_class(1, 2));
  }
  SUBCASE("witnesses exist at every prime up to 100") {
    for (std::uint64_t p : primes_up_to(100)) {
      auto w = rational_noninjectivity_witness(f, p);
      REQUIRE(w.has_value());
      CHECK(w->a != w->b);
      CHECK(zloc_membership(w->a, p));
      CHECK(zloc_membership(w->b, p));
      // Re-verify the collision exactly over Q.
      MultiPoly fq = f.to_ring(CoeffRing::rationals());
      Scalar va = fq.eval({Scalar::rational(w->a)});
      Scalar vb = fq.eval({Scalar::rational(w->b)});
      CHECK(va == vb);
      CHECK(va == Scalar::rational(w->value));
    }
  }
}

TEST_CASE("maps injective on all of Q have no rational witness") {
  // x + 3 is a bijection of Q; no witness at any prime.
  MultiPoly f = uni({3, 1});
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    CHECK_FALSE(rational_noninjectivity_witness(f, p).has_value());
  }
  // x^3 is injective on Q.
  CHECK_FALSE(rational_noninjectivity_witness(uni({0, 0, 0, 1}), 2).has_value());
}

TEST_CASE("constant maps give the trivial witness") {
  auto w = rational_noninjectivity_witness(uni({7}), 3);
  REQUIRE(w.has_value());
  CHECK(w->a != w->b);
  CHECK(w->value == 7);
}
