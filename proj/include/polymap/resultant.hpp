#pragma once

// Sylvester resultants, the squarefreeness test they induce, and simple
// roots modulo a prime.

#include <vector>

#include "polymap/multipoly.hpp"

namespace polymap {

// Sylvester matrix of univariate f, g: size (deg f + deg g), the first deg g
// rows carry shifted coefficients of f, the remaining deg f rows carry
// shifted coefficients of g.  Requires both nonzero with deg f + deg g >= 1.
class SylvesterMatrix {
public:
  SylvesterMatrix(const MultiPoly& f, const MultiPoly& g);

  unsigned size() const { return n_; }
  const Scalar& at(unsigned i, unsigned j) const {
    return entries_.at(static_cast<std::size_t>(i) * n_ + j);
  }

  // Exact determinant (fraction-free elimination over the scalar domain).
  Scalar det() const;

private:
  unsigned n_;
  CoeffRing ring_;
  std::vector<Scalar> entries_;
};

// Res(f, g): determinant of the Sylvester matrix under the row convention
// above.  Both univariate, nonzero, over an integral-domain kind.
Scalar resultant(const MultiPoly& f, const MultiPoly& g);

struct SquarefreeResult {
  bool squarefree = false;
  Scalar evidence;  // the resultant Res(f, f')
};

// f squarefree over a characteristic-zero domain iff Res(f, f') != 0.
// Univariate, deg f >= 1.
SquarefreeResult is_squarefree(const MultiPoly& f);

// Roots r of f mod p with f'(r) != 0 mod p, by exhaustive scan of F_p,
// sorted ascending.  f has integer coefficients and f mod p must not vanish
// identically; p is bounded by the scan budget.
std::vector<std::uint64_t> simple_roots_mod_p(
    const MultiPoly& f, std::uint64_t p,
    std::uint64_t budget = 10'000'000);

}  // namespace polymap
