#pragma once

// Square matrices of polynomials: Jacobians and exact determinants.

#include <vector>

#include "polymap/polymap.hpp"

namespace polymap {

class PolyMatrix {
public:
  // n x n matrix; entries row-major, all sharing nvars and ring.
  PolyMatrix(unsigned n, std::vector<MultiPoly> entries);

  static PolyMatrix identity(unsigned n, unsigned nvars,
                             const CoeffRing& ring);

  unsigned size() const { return n_; }
  unsigned nvars() const { return entries_.front().nvars(); }
  const CoeffRing& ring() const { return entries_.front().ring(); }

  const MultiPoly& at(unsigned i, unsigned j) const {
    return entries_.at(static_cast<std::size_t>(i) * n_ + j);
  }

  // Entry-wise evaluation at a point (a matrix of scalars, row-major).
  std::vector<Scalar> eval(const std::vector<Scalar>& point) const;

  bool operator==(const PolyMatrix& rhs) const {
    return n_ == rhs.n_ && entries_ == rhs.entries_;
  }

private:
  unsigned n_;
  std::vector<MultiPoly> entries_;
};

// Entry (i, j) = d f_i / d x_j.
PolyMatrix jacobian_matrix(const PolyMap& f);

// Exact determinant: cofactor expansion for n <= 6, fraction-free
// Bareiss elimination above (requires an exact coefficient ring).
MultiPoly det_poly(const PolyMatrix& m);

// Determinant by cofactor expansion at any size; the oracle partner of
// det_poly in tests.
MultiPoly det_poly_cofactor(const PolyMatrix& m);

}  // namespace polymap
