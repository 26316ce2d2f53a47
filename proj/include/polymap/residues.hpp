#pragma once

// Vectors over Z/p^k and the modular linear algebra the lifting machinery
// needs: matrix inversion mod p^k (unit pivots exist whenever the determinant
// is prime to p) and kernel vectors mod p.

#include <optional>
#include <string>
#include <vector>

#include "polymap/polymap.hpp"

namespace polymap {

struct ResidueVector {
  PrimePower m;
  std::vector<mpz_class> entries;  // each reduced into [0, p^k)

  static ResidueVector reduce(std::vector<mpz_class> raw, PrimePower m);

  unsigned dim() const { return static_cast<unsigned>(entries.size()); }

  // Reinterpret at a smaller exponent k2 <= m.k.
  ResidueVector reduced_to(unsigned k2) const;

  std::vector<Scalar> to_scalars() const;

  bool operator==(const ResidueVector& o) const {
    return m == o.m && entries == o.entries;
  }
  bool operator!=(const ResidueVector& o) const { return !(*this == o); }
  // Lexicographic on entries (for deterministic sorted output).
  bool operator<(const ResidueVector& o) const;

  std::string str() const;  // "(a, b)"
};

// Evaluate f (integer coefficients) at an integer point, reduced mod m.
std::vector<mpz_class> eval_map_mod(const PolyMap& f,
                                    const std::vector<mpz_class>& point,
                                    const PrimePower& m);

// Row-major n x n matrix inverse mod p^k; nullopt when det is divisible by p.
std::optional<std::vector<mpz_class>> invert_matrix_mod(
    const std::vector<mpz_class>& a, unsigned n, const PrimePower& m);

// A nonzero kernel vector of the n x n matrix mod p (entries in [0, p)), or
// nullopt when the matrix is invertible mod p.
std::optional<std::vector<mpz_class>> kernel_vector_mod_p(
    const std::vector<mpz_class>& a, unsigned n, std::uint64_t p);

}  // namespace polymap
