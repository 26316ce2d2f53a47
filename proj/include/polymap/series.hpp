#pragma once

// Truncated power series maps, the formal inverse function theorem, and the
// complete invertibility decision over Z and Q.
//
// A map f with f(0) = 0 whose linear part is invertible over the coefficient
// ring has a unique formal series inverse g (g(0) = 0, f(g(x)) = g(f(x)) =
// x).  We compute g degree-by-degree to a cutoff D via the fixed-point form
// g = L^-1 (x - h(g)), where f = L + h splits f into its linear part and the
// terms of degree >= 2.
//
// Invertibility over R in {Z, Q} is decided completely: det(Jf) must be a
// unit constant of R (necessary), and then the series inverse truncated at
// D = d^(n-1) — the classical degree bound for polynomial automorphism
// inverses — is verified by exact two-sided composition.  Soundness never
// depends on the bound; it only guarantees completeness.

#include <optional>

#include "polymap/poly_matrix.hpp"
#include "polymap/polymap.hpp"

namespace polymap {

// f(0) != 0 passed to formal_inverse.
class BasePointError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// det((Jf)(0)) is not invertible (0 over a field; 0 over Z as well).
class NonInvertibleLinearPartError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// Over Z: the series inverse requires a division that leaves Z.  Carries the
// first offending coefficient in (component, graded-lex) order.
class NonIntegerCoefficientError : public Error {
public:
  NonIntegerCoefficientError(unsigned component, Exponents monomial,
                             mpq_class coefficient);

  unsigned component() const { return component_; }
  const Exponents& monomial() const { return monomial_; }
  const mpq_class& coefficient() const { return coefficient_; }

private:
  unsigned component_;
  Exponents monomial_;
  mpq_class coefficient_;
};

class TruncatedSeriesMap {
public:
  // Truncates each component at total degree `cutoff` eagerly.
  TruncatedSeriesMap(unsigned cutoff, std::vector<MultiPoly> components);

  unsigned dim() const { return static_cast<unsigned>(comps_.size()); }
  unsigned cutoff() const { return cutoff_; }
  const CoeffRing& ring() const { return comps_.front().ring(); }
  const MultiPoly& component(unsigned i) const { return comps_.at(i); }
  const std::vector<MultiPoly>& components() const { return comps_; }

  // The components, reinterpreted as an honest polynomial map.
  PolyMap to_polymap() const { return PolyMap(comps_); }

  bool operator==(const TruncatedSeriesMap& rhs) const {
    return cutoff_ == rhs.cutoff_ && comps_ == rhs.comps_;
  }

private:
  unsigned cutoff_;
  std::vector<MultiPoly> comps_;
};

// The unique g with g(0) = 0 and f(g(x)) = g(f(x)) = x modulo total degree
// D+1.  Preconditions: f over Z or Q; f(0) = 0; det((Jf)(0)) a unit of the
// coefficient ring (Z: +-1, Q: nonzero).  Errors: BasePointError,
// NonInvertibleLinearPartError, NonIntegerCoefficientError (Z only).
TruncatedSeriesMap formal_inverse(const PolyMap& f, unsigned D);

// True iff p is a unit constant of its (integral-domain) coefficient ring.
bool is_unit_polynomial(const MultiPoly& p);

struct InvertibilityCertificate {
  enum class Outcome { Invertible, NotInvertible };
  enum class Obstruction {
    None,
    DeterminantNotUnit,     // det(Jf) is not a unit constant of R
    NonIntegerCoefficient,  // series inverse leaves Z (direct series calls)
    NoPolynomialInverse     // residual after truncation at the degree bound
  };

  Outcome outcome = Outcome::NotInvertible;
  std::optional<PolyMap> inverse;   // engaged iff Invertible; both-sided
  Obstruction obstruction = Obstruction::None;
  MultiPoly det_jacobian;           // always computed
  // Obstruction payloads:
  std::optional<mpq_class> offending_coefficient;
  std::optional<Exponents> offending_monomial;
  std::optional<unsigned> offending_component;
  std::optional<MultiPoly> residual;  // first nonzero component of f(g) - x
  unsigned degree_bound = 0;          // the D used for the candidate

  bool invertible() const { return outcome == Outcome::Invertible; }
};

// Complete decision of polynomial invertibility over Z or Q (no basepoint
// hypothesis: translation is handled internally).  Never throws for
// mathematical reasons; every failure mode is a NotInvertible outcome.
InvertibilityCertificate decide_invertibility(const PolyMap& f);

}  // namespace polymap
