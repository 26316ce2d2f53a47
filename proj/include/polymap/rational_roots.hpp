#pragma once

// Exact rational roots of univariate polynomials over Z or Q, found by
// divisor enumeration of the trailing and leading coefficients of the
// primitive integer model, with multiplicities via synthetic deflation.

#include <vector>

#include "polymap/multipoly.hpp"

namespace polymap {

struct RationalRoot {
  mpq_class value;
  unsigned multiplicity = 0;

  bool operator==(const RationalRoot& o) const {
    return value == o.value && multiplicity == o.multiplicity;
  }
};

// All positive divisors of |n| (n != 0), ascending.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

// All rational roots of p (univariate, Integer or Rational coefficients,
// p != 0), sorted ascending by value.
std::vector<RationalRoot> rational_roots(const MultiPoly& p);

}  // namespace polymap
