#include "polymap/residues.hpp"

namespace polymap {

namespace {

mpz_class mod_into(const mpz_class& v, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

ResidueVector ResidueVector::reduce(std::vector<mpz_class> raw, PrimePower m) {
  for (auto& v : raw) v = mod_into(v, m.modulus);
  return ResidueVector{std::move(m), std::move(raw)};
}

ResidueVector ResidueVector::reduced_to(unsigned k2) const {
  if (k2 > m.k)
    throw PreconditionError("reduced_to: cannot raise residue precision");
  PrimePower m2 = PrimePower::make(m.p, k2);
  return reduce(entries, std::move(m2));
}

std::vector<Scalar> ResidueVector::to_scalars() const {
  std::vector<Scalar> out;
  out.reserve(entries.size());
  for (const auto& v : entries) out.push_back(Scalar::residue(v, m));
  return out;
}

bool ResidueVector::operator<(const ResidueVector& o) const {
  return entries < o.entries;
}

std::string ResidueVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += entries[i].get_str();
  }
  return out + ")";
}

std::vector<mpz_class> eval_map_mod(const PolyMap& f,
                                    const std::vector<mpz_class>& point,
                                    const PrimePower& m) {
  if (f.ring().kind != Scalar::Kind::Integer)
    throw KindError("eval_map_mod: map must have integer coefficients");
  if (point.size() != f.dim())
    throw DimensionError("eval_map_mod: point has wrong dimension");
  const unsigned n = f.dim();
  // Power tables per coordinate, mod m.
  std::vector<std::vector<mpz_class>> pows(n);
  for (unsigned i = 0; i < n; ++i) {
    int d = 0;
    for (unsigned c = 0; c < n; ++c)
      d = std::max(d, f.component(c).degree_in(i));
    pows[i].reserve(d + 1);
    pows[i].emplace_back(1);
    mpz_class base = mod_into(point[i], m.modulus);
    for (int j = 1; j <= d; ++j)
      pows[i].push_back(mod_into(pows[i].back() * base, m.modulus));
  }
  std::vector<mpz_class> out;
  out.reserve(n);
  for (unsigned c = 0; c < n; ++c) {
    mpz_class acc = 0;
    for (const auto& [e, coeff] : f.component(c).terms()) {
      mpz_class t = coeff.as_integer();
      for (unsigned i = 0; i < n; ++i)
        if (e[i] > 0) t *= pows[i][e[i]];
      acc += t;
    }
    out.push_back(mod_into(acc, m.modulus));
  }
  return out;
}

std::optional<std::vector<mpz_class>> invert_matrix_mod(
    const std::vector<mpz_class>& a_in, unsigned n, const PrimePower& m) {
  if (a_in.size() != static_cast<std::size_t>(n) * n)
    throw DimensionError("invert_matrix_mod: wrong entry count");
  std::vector<mpz_class> a = a_in;
  std::vector<mpz_class> inv(static_cast<std::size_t>(n) * n, mpz_class(0));
  for (unsigned i = 0; i < n; ++i)
    inv[static_cast<std::size_t>(i) * n + i] = 1;
  auto A = [&](unsigned i, unsigned j) -> mpz_class& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  auto B = [&](unsigned i, unsigned j) -> mpz_class& {
    return inv[static_cast<std::size_t>(i) * n + j];
  };
  auto red = [&](mpz_class& v) { v = mod_into(v, m.modulus); };
  for (auto& v : a) red(v);
  for (unsigned col = 0; col < n; ++col) {
    // A pivot must be a unit mod p^k, i.e. not divisible by p.
    unsigned pivot = col;
    while (pivot < n && mpz_divisible_ui_p(A(pivot, col).get_mpz_t(), m.p))
      ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (unsigned j = 0; j < n; ++j) {
        std::swap(A(pivot, j), A(col, j));
        std::swap(B(pivot, j), B(col, j));
      }
    mpz_class pinv;
    mpz_invert(pinv.get_mpz_t(), A(col, col).get_mpz_t(),
               m.modulus.get_mpz_t());
    for (unsigned j = 0; j < n; ++j) {
      A(col, j) *= pinv;
      red(A(col, j));
      B(col, j) *= pinv;
      red(B(col, j));
    }
    for (unsigned i = 0; i < n; ++i) {
      if (i == col || A(i, col) == 0) continue;
      mpz_class factor = A(i, col);
      for (unsigned j = 0; j < n; ++j) {
        A(i, j) -= factor * A(col, j);
        red(A(i, j));
        B(i, j) -= factor * B(col, j);
        red(B(i, j));
      }
    }
  }
  return inv;
}

std::optional<std::vector<mpz_class>> kernel_vector_mod_p(
    const std::vector<mpz_class>& a_in, unsigned n, std::uint64_t p) {
  if (a_in.size() != static_cast<std::size_t>(n) * n)
    throw DimensionError("kernel_vector_mod_p: wrong entry count");
  PrimePower m = PrimePower::make(p, 1);
  std::vector<mpz_class> a = a_in;
  auto A = [&](unsigned i, unsigned j) -> mpz_class& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  for (auto& v : a) v = mod_into(v, m.modulus);

  // Row echelon over F_p, tracking which column each pivot lands in.
  std::vector<int> pivot_col_of_row(n, -1);
  unsigned row = 0;
  for (unsigned col = 0; col < n && row < n; ++col) {
    unsigned pr = row;
    while (pr < n && A(pr, col) == 0) ++pr;
    if (pr == n) continue;
    if (pr != row)
      for (unsigned j = 0; j < n; ++j) std::swap(A(pr, j), A(row, j));
    mpz_class pinv;
    mpz_invert(pinv.get_mpz_t(), A(row, col).get_mpz_t(),
               m.modulus.get_mpz_t());
    for (unsigned j = 0; j < n; ++j)
      A(row, j) = mod_into(A(row, j) * pinv, m.modulus);
    for (unsigned i = 0; i < n; ++i) {
      if (i == row || A(i, col) == 0) continue;
      mpz_class factor = A(i, col);
      for (unsigned j = 0; j < n; ++j)
        A(i, j) = mod_into(A(i, j) - factor * A(row, j), m.modulus);
    }
    pivot_col_of_row[row] = static_cast<int>(col);
    ++row;
  }
  if (row == n) return std::nullopt;  // full rank: trivial kernel

  // Pick the first free column, set it to 1, back-substitute pivots.
  std::vector<bool> is_pivot(n, false);
  for (unsigned r = 0; r < row; ++r)
    is_pivot[static_cast<unsigned>(pivot_col_of_row[r])] = true;
  unsigned free_col = 0;
  while (free_col < n && is_pivot[free_col]) ++free_col;
  std::vector<mpz_class> x(n, mpz_class(0));
  x[free_col] = 1;
  for (unsigned r = 0; r < row; ++r) {
    unsigned pc = static_cast<unsigned>(pivot_col_of_row[r]);
    // Row reads x_pc + sum_{j != pc} A(r, j) x_j = 0.
    x[pc] = mod_into(-A(r, free_col), m.modulus);
  }
  return x;
}

}  // namespace polymap
