#pragma once

// MultiPoly: sparse multivariate polynomial over one of the Scalar domains.
//
// Terms are stored in a std::map keyed by exponent vector under *descending*
// graded lexicographic order, so iteration (and therefore printing) always
// starts at the leading term: higher total degree first, ties broken by the
// earlier variable.  All arithmetic preserves canonical form: no zero
// coefficients are ever stored, and every coefficient lives in the
// polynomial's declared CoeffRing.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polymap/scalar.hpp"

namespace polymap {

using Exponents = std::vector<unsigned>;

inline unsigned exponents_degree(const Exponents& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

// Descending graded lexicographic order: x^a before x^b when deg a > deg b,
// or degrees tie and a is lexicographically larger (earlier variables weigh
// more).  With vars (x, y): x^2 > x*y > y^2 > x > y > 1.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = exponents_degree(a), db = exponents_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on the exponent vectors
  }
};

class MultiPoly {
public:
  using TermMap = std::map<Exponents, Scalar, GrlexDescending>;

  // The zero polynomial in `nvars` variables.
  MultiPoly(unsigned nvars, CoeffRing ring)
      : nvars_(nvars), ring_(std::move(ring)) {}

  // Empty placeholder (zero polynomial in no variables over Z).
  MultiPoly() : MultiPoly(0, CoeffRing::integers()) {}

  static MultiPoly constant(unsigned nvars, const Scalar& c);
  static MultiPoly variable(unsigned nvars, unsigned index,
                            const CoeffRing& ring);

  unsigned nvars() const { return nvars_; }
  const CoeffRing& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (coefficient of the all-zero exponent), zero if absent.
  Scalar constant_term() const;
  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(unsigned var) const;

  Scalar coefficient(const Exponents& e) const;
  // Adds c * x^e, merging and pruning zeros.  The workhorse of arithmetic.
  void add_term(const Exponents& e, const Scalar& c);

  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& rhs) const;
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  MultiPoly scaled(const Scalar& c) const;
  // Product discarding every term of total degree > max_deg.
  MultiPoly mul_truncated(const MultiPoly& rhs, unsigned max_deg) const;
  // Power by binary exponentiation; optionally truncated.
  MultiPoly pow(unsigned e,
                std::optional<unsigned> max_deg = std::nullopt) const;
  // Discard terms of total degree > max_deg.
  MultiPoly truncated(unsigned max_deg) const;

  MultiPoly derivative(unsigned var) const;

  Scalar eval(const std::vector<Scalar>& point) const;
  // Substitute repl[i] for variable i (composition).  All repl share one
  // variable count and ring; optionally truncate at max_deg while composing.
  MultiPoly subst(const std::vector<MultiPoly>& repl,
                  std::optional<unsigned> max_deg = std::nullopt) const;

  // Coefficient-wise conversion to another domain.  Integer -> Rational,
  // Integer/Rational -> Residue (denominators must be units), Rational ->
  // Integer (throws if any denominator != 1), exact -> Complex.
  MultiPoly to_ring(const CoeffRing& target) const;

  // -- univariate helpers (nvars() == 1) --------------------------------------
  // Coefficients c[0..deg] ascending; PreconditionError unless univariate.
  std::vector<Scalar> dense_coeffs() const;
  static MultiPoly from_dense_coeffs(const std::vector<Scalar>& coeffs,
                                     const CoeffRing& ring);

private:
  void check_compatible(const MultiPoly& rhs, const char* op) const;

  unsigned nvars_;
  CoeffRing ring_;
  TermMap terms_;
};

// Render with the given variable names, descending grlex term order:
//   "6*x^3 - 5*x^2 + x",  "y^2 + x",  "1/2*x - 3",  "0".
std::string canonical_string(const MultiPoly& p,
                             const std::vector<std::string>& var_names);

// Free-function forms used throughout.
inline MultiPoly derivative(const MultiPoly& p, unsigned var) {
  return p.derivative(var);
}
inline Scalar evaluate(const MultiPoly& p, const std::vector<Scalar>& at) {
  return p.eval(at);
}

// Exact polynomial division: returns q with a == q * b.  PreconditionError
// when b is zero or does not divide a exactly.  Requires an exact ring whose
// leading-coefficient divisions succeed along the way (always the case for
// the fraction-free eliminations this library performs).
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

}  // namespace polymap
