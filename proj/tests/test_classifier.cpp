#include "doctest.h"

#include <random>
#include <vector>

#include "polymap/classify.hpp"
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

MultiPoly var(unsigned n, unsigned i) {
  return MultiPoly::variable(n, i, CoeffRing::integers());
}

}  // namespace

TEST_CASE("primes_up_to matches a sieve oracle") {
  auto primes = primes_up_to(100);
  std::vector<std::uint64_t> expect = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                       29, 31, 37, 41, 43, 47, 53, 59, 61,
                                       67, 71, 73, 79, 83, 89, 97};
  CHECK(primes == expect);
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
}

TEST_CASE("classification of 2x: one local obstruction, at 2") {
  Verdict v = classify_over_Z(PolyMap({uni({0, 2})}), 20);
  CHECK_FALSE(v.surjective_invertible);
  CHECK(v.inv.obstruction ==
        InvertibilityCertificate::Obstruction::DeterminantNotUnit);
  REQUIRE(v.failing_prime.has_value());
  CHECK(*v.failing_prime == 2);
  CHECK(v.consistency_ok);
  for (const auto& row : v.local_table) {
    if (row.p == 2) {
      CHECK_FALSE(row.surjective);
      CHECK(row.missed_target_mod_p.has_value());
    } else {
      CHECK(row.surjective);  // 2x is a bijection of Z_p for odd p
    }
  }
}

TEST_CASE("classification of an automorphism: all local rows positive") {
  PolyMap f({var(2, 0) + var(2, 1) * var(2, 1), var(2, 1)});
  Verdict v = classify_over_Z(f, 20);
  CHECK(v.surjective_invertible);
  CHECK(v.inv.invertible());
  CHECK_FALSE(v.failing_prime.has_value());
  CHECK(v.consistency_ok);
  CHECK(v.local_table.size() == primes_up_to(20).size());
  for (const auto& row : v.local_table) CHECK(row.surjective);
}

TEST_CASE("classification of the injective non-surjective cubic") {
  // x(2x-1)(3x-1) is injective on Z but fails locally at every prime.
  Verdict v = classify_over_Z(PolyMap({uni({0, 1, -5, 6})}), 10);
  CHECK_FALSE(v.surjective_invertible);
  REQUIRE(v.failing_prime.has_value());
  CHECK(*v.failing_prime == 2);
  for (const auto& row : v.local_table) CHECK_FALSE(row.surjective);
}

TEST_CASE("classification never lets the routes disagree (randomized)") {
  Rng rng(881);
  for (int trial = 0; trial < 40; ++trial) {
    unsigned n = static_cast<unsigned>(testutil::rand_int(rng, 1, 2));
    PolyMap f = testutil::random_map(rng, n, 2, 5, 3);
    Verdict v = classify_over_Z(f, 10);  // throws if inconsistent
    CHECK(v.consistency_ok);
    // Invertible => every local row is surjective; a local failure =>
    // not invertible.
    if (v.surjective_invertible) {
      CHECK_FALSE(v.failing_prime.has_value());
      for (const auto& row : v.local_table) CHECK(row.surjective);
    }
    if (v.failing_prime.has_value()) CHECK_FALSE(v.surjective_invertible);
  }
}

TEST_CASE("budget pressure is reported per prime, not hidden") {
  // n = 2 at p = 7 means 49 evaluation points; a budget of 30 cannot scan it.
  PolyMap f({var(2, 0), var(2, 1)});
  Verdict v = classify_over_Z(f, 7, 30);
  CHECK(v.surjective_invertible);  // the global route is budget-free
  bool p7_deferred = false;
  for (std::uint64_t q : v.budget_exceeded_primes) p7_deferred |= (q == 7);
  CHECK(p7_deferred);
}

TEST_CASE("diophantine profile of (2x+1)(3x+1)") {
  // Solvable in every Z_p yet has no rational integer roots: the fiber is
  // {-1/2, -1/3}.
  PolyMap f({uni({1, 5, 6})});
  DiophantineProfile prof =
      diophantine_profile(f, {mpz_class(0)}, 50, 3);
  CHECK(prof.all_solvable);
  CHECK_FALSE(prof.any_budget_exceeded);
  CHECK(prof.rows.size() == primes_up_to(50).size());
  for (const auto& row : prof.rows) {
    CHECK(row.solvable);
    CHECK(row.n_solutions >= 1);
    REQUIRE(row.example.has_value());
    // Re-verify each example solution independently.
    mpz_class m = row.example->m.modulus;
    CHECK(testutil::ref_eval_mod(f, row.example->entries, m) ==
          std::vector<mpz_class>{0});
  }
  CHECK(prof.integer_solutions.empty());
  REQUIRE(prof.rational_solutions.size() == 2);
  CHECK(prof.rational_solutions[0] == mpq_class(-1, 2));
  CHECK(prof.rational_solutions[1] == mpq_class(-1, 3));
}

TEST_CASE("diophantine profile finds integer solutions when they exist") {
  PolyMap f({uni({-7, 0, 0, 1})});  // x^3 - 7 = 0 over Q: no rational root
  DiophantineProfile prof = diophantine_profile(f, {mpz_class(1)}, 20, 2);
  // x^3 = 8: the integer root 2.
  REQUIRE(prof.integer_solutions.size() == 1);
  CHECK(prof.integer_solutions[0] == 2);
  CHECK(prof.all_solvable);
}

TEST_CASE("diophantine profile reports unsolvable primes") {
  // x^2 = 3 mod 4 is impossible: 3 is not a square mod 4.
  PolyMap f({uni({0, 0, 1})});
  DiophantineProfile prof = diophantine_profile(f, {mpz_class(3)}, 10, 2);
  CHECK_FALSE(prof.all_solvable);
  bool p2_unsolvable = false;
  for (const auto& row : prof.rows)
    if (row.p == 2) p2_unsolvable = !row.solvable;
  CHECK(p2_unsolvable);
}

TEST_CASE("gallery runs clean end to end") {
  auto results = run_gallery("all");
  CHECK(results.size() == 7);
  for (const auto& r : results) {
    INFO(r.name);
    CHECK(r.passed);
    CHECK_FALSE(r.notes.empty());
  }
}

TEST_CASE("gallery cases run individually") {
  for (const char* name : {"2x", "px2_plus_x", "prop51_cubic", "bs_polynomial",
                           "example31_series", "intro_counterexample"}) {
    auto results = run_gallery(name);
    REQUIRE(results.size() == 1);
    CHECK(results[0].name == name);
    CHECK(results[0].passed);
  }
  CHECK_THROWS_AS(run_gallery("no_such_case"), PreconditionError);
}
