#pragma once

// Top-level verdicts over Z.
//
// The global surjectivity/invertibility decision is complete: a polynomial
// self-map of Z^n is surjective iff it is invertible, which
// decide_invertibility settles by exact formal-inverse construction.  The
// per-prime local table is independent diagnostic evidence; the two routes
// are cross-checked against each other on every run.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polymap/inject_z.hpp"
#include "polymap/local.hpp"
#include "polymap/series.hpp"

namespace polymap {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

struct Verdict {
  bool surjective_invertible = false;
  // Global route: complete decision with certificate.
  InvertibilityCertificate inv;
  // Local route: one-prime criteria for all primes <= the requested bound.
  std::vector<LocalSurjectivityVerdict> local_table;
  std::vector<std::uint64_t> budget_exceeded_primes;
  std::optional<std::uint64_t> failing_prime;  // smallest local obstruction
  bool consistency_ok = false;
  std::string consistency_note;
};

// Decide surjectivity/invertibility of f : Z^n -> Z^n and scan all primes
// p <= prime_bound for local corroboration.  Throws Error if the two routes
// ever disagree (they cannot, unless the implementation is wrong — the
// redundancy is deliberate).
Verdict classify_over_Z(const PolyMap& f, std::uint64_t prime_bound = 100,
                        std::uint64_t budget = kDefaultBudget);

struct PrimeSolvability {
  std::uint64_t p = 0;
  unsigned k = 0;
  bool solvable = false;
  std::uint64_t n_solutions = 0;
  std::optional<ResidueVector> example;
  bool budget_exceeded = false;
};

struct DiophantineProfile {
  std::vector<PrimeSolvability> rows;  // ascending primes
  bool all_solvable = false;           // among rows that completed
  bool any_budget_exceeded = false;
  // Exact solutions of f(x) = target, available in the univariate case.
  std::vector<mpq_class> rational_solutions;
  std::vector<mpz_class> integer_solutions;
};

// Solvability profile of f(x) = target mod p^k for every prime p <= bound,
// plus exact rational/integer solutions when n = 1.
DiophantineProfile diophantine_profile(const PolyMap& f,
                                       const std::vector<mpz_class>& target,
                                       std::uint64_t prime_bound, unsigned k,
                                       std::uint64_t budget = kDefaultBudget);

struct GalleryCaseResult {
  std::string name;
  std::string title;
  bool passed = false;
  std::vector<std::string> notes;
};

// Run a named gallery case, or all of them ("all").  Cases:
//   2x, px2_plus_x, prop51_cubic, prop52_powers, bs_polynomial,
//   example31_series, intro_counterexample
std::vector<GalleryCaseResult> run_gallery(const std::string& which,
                                           std::uint64_t budget =
                                               kDefaultBudget);

}  // namespace polymap
