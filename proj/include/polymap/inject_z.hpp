#pragma once

// Injectivity of univariate integer polynomials over Z itself and over the
// localizations Z_(p) (rationals with denominator prime to p).
//
// Over Z the decision is complete: every possible collision f(a) = f(b) is
// either produced exactly by the candidate-sum solve (even degree) or lies
// inside an explicitly computed scan window derived from Cauchy-style bounds
// on f and its derivative.

#include <cstdint>
#include <optional>
#include <utility>

#include "polymap/local.hpp"
#include "polymap/multipoly.hpp"

namespace polymap {

struct IntegerInjectivity {
  bool injective = false;
  // Witness a < b with f(a) = f(b) when not injective.
  std::optional<std::pair<mpz_class, mpz_class>> witness;
  // Scanned window [window_lo, window_hi] (both zero when no scan ran).
  mpz_class window_lo = 0;
  mpz_class window_hi = 0;
  std::uint64_t points_checked = 0;
};

// Decide injectivity of f : Z -> Z for univariate f with integer
// coefficients.  Throws BudgetError when the derived window exceeds `budget`
// evaluation points.
IntegerInjectivity injectivity_over_Z_univariate(
    const MultiPoly& f, std::uint64_t budget = kDefaultBudget);

// Is q an element of Z_(p), i.e. is its reduced denominator prime to p?
bool zloc_membership(const mpq_class& q, std::uint64_t p);

struct ZlocWitness {
  std::uint64_t p = 0;
  mpq_class a, b;   // a != b, both in Z_(p), with f(a) = f(b)
  mpq_class value;  // the common value
};

// Search for a noninjectivity witness of f inside Z_(p): a pair of distinct
// p-integral rationals with equal image.  Target values are tried in the
// order 0, f(0), f(1), f(-1), f(2), ... up to |center| <= center_budget; for
// each target the rational preimages are ordered by (denominator, value) and
// the first pair lying in Z_(p) wins.  Returns nullopt when no witness is
// found within the target budget.
std::optional<ZlocWitness> rational_noninjectivity_witness(
    const MultiPoly& f, std::uint64_t p, unsigned center_budget = 50);

}  // namespace polymap
