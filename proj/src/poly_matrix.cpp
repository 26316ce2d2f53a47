#include "polymap/poly_matrix.hpp"

namespace polymap {

PolyMatrix::PolyMatrix(unsigned n, std::vector<MultiPoly> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw DimensionError("empty matrix");
  if (entries_.size() != static_cast<std::size_t>(n_) * n_)
    throw DimensionError("matrix entry count does not match dimension");
  for (const auto& e : entries_) {
    if (e.nvars() != entries_.front().nvars() ||
        e.ring() != entries_.front().ring())
      throw KindError("matrix entries disagree in shape or ring");
  }
}

PolyMatrix PolyMatrix::identity(unsigned n, unsigned nvars,
                                const CoeffRing& ring) {
  std::vector<MultiPoly> entries(static_cast<std::size_t>(n) * n,
                                 MultiPoly(nvars, ring));
  for (unsigned i = 0; i < n; ++i)
    entries[static_cast<std::size_t>(i) * n + i] =
        MultiPoly::constant(nvars, ring.one());
  return PolyMatrix(n, std::move(entries));
}

std::vector<Scalar> PolyMatrix::eval(const std::vector<Scalar>& point) const {
  std::vector<Scalar> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.eval(point));
  return out;
}

PolyMatrix jacobian_matrix(const PolyMap& f) {
  const unsigned n = f.dim();
  std::vector<MultiPoly> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      entries.push_back(f.component(i).derivative(j));
  return PolyMatrix(n, std::move(entries));
}

namespace {

MultiPoly det_cofactor_impl(const PolyMatrix& m, std::vector<unsigned> rows,
                            std::vector<unsigned> cols) {
  const unsigned n = static_cast<unsigned>(rows.size());
  if (n == 1) return m.at(rows[0], cols[0]);
  MultiPoly acc(m.nvars(), m.ring());
  std::vector<unsigned> subrows(rows.begin() + 1, rows.end());
  for (unsigned j = 0; j < n; ++j) {
    const MultiPoly& pivot = m.at(rows[0], cols[j]);
    if (pivot.is_zero()) continue;
    std::vector<unsigned> subcols;
    subcols.reserve(n - 1);
    for (unsigned t = 0; t < n; ++t)
      if (t != j) subcols.push_back(cols[t]);
    MultiPoly minor = det_cofactor_impl(m, subrows, subcols);
    MultiPoly contrib = pivot * minor;
    acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}

}  // namespace

MultiPoly det_poly_cofactor(const PolyMatrix& m) {
  std::vector<unsigned> idx(m.size());
  for (unsigned i = 0; i < m.size(); ++i) idx[i] = i;
  return det_cofactor_impl(m, idx, idx);
}

namespace {

// Fraction-free (Bareiss) elimination: every division is exact in the
// coefficient ring, so the result stays a polynomial throughout.
MultiPoly det_bareiss(const PolyMatrix& m) {
  const unsigned n = m.size();
  std::vector<MultiPoly> a;
  a.reserve(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) a.push_back(m.at(i, j));
  auto at = [&](unsigned i, unsigned j) -> MultiPoly& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  MultiPoly prev = MultiPoly::constant(m.nvars(), m.ring().one());
  int sign = 1;
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      unsigned swap_row = k + 1;
      while (swap_row < n && at(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly(m.nvars(), m.ring());  // det = 0
      for (unsigned j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (unsigned i = k + 1; i < n; ++i) {
      for (unsigned j = k + 1; j < n; ++j) {
        MultiPoly num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        at(i, j) = divide_exact(num, prev);
      }
      at(i, k) = MultiPoly(m.nvars(), m.ring());
    }
    prev = at(k, k);
  }
  MultiPoly det = at(n - 1, n - 1);
  return sign == 1 ? det : -det;
}

}  // namespace

MultiPoly det_poly(const PolyMatrix& m) {
  if (!m.ring().is_exact())
    throw PreconditionError("det_poly requires an exact coefficient ring");
  // Bareiss needs exact interior divisions, i.e. an integral domain; outside
  // that (Z/p^k, k >= 2) fall back to cofactor expansion at any size.
  if (m.size() <= 6 || !m.ring().is_integral_domain())
    return det_poly_cofactor(m);
  return det_bareiss(m);
}

}  // namespace polymap
