#pragma once

// Scalar: the coefficient domains used throughout the library.
//
// A Scalar is a tagged value in exactly one of four coefficient domains:
//
//   Integer   -- arbitrary-precision integer (GMP mpz)
//   Rational  -- arbitrary-precision rational, always canonical (GMP mpq)
//   Residue   -- element of Z/p^k for a prime p, stored as the unique
//                representative in [0, p^k)
//   Complex   -- double-precision complex, used only for numeric root
//                extraction in the truncated power-series routines
//
// Arithmetic is deliberately strict: operands must live in the same domain
// (and, for residues, have the same modulus).  Mixing domains is a KindError,
// never a silent coercion.  Explicit conversions are provided instead
// (to_rational, reduce_mod, ...).

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace polymap {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Base class for every error the library raises intentionally.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands from different coefficient domains (or different moduli).
class KindError : public Error {
public:
  using Error::Error;
};

// Structural mismatch: wrong number of variables, non-square system, ...
class DimensionError : public Error {
public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// An enumeration would exceed the configured work budget.  Raised instead of
// silently skipping work; callers may catch it and report "inconclusive".
class BudgetError : public Error {
public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

// Deterministic Miller-Rabin, valid for every n < 2^64.
bool is_prime_u64(std::uint64_t n);

// ---------------------------------------------------------------------------
// PrimePower: the modulus p^k of a residue domain
// ---------------------------------------------------------------------------

struct PrimePower {
  std::uint64_t p = 0;  // prime
  unsigned k = 0;       // exponent >= 1
  mpz_class modulus;    // p^k, cached

  // Validates primality of p and k >= 1.
  static PrimePower make(std::uint64_t p, unsigned k);

  bool operator==(const PrimePower& other) const {
    return p == other.p && k == other.k;
  }
  bool operator!=(const PrimePower& other) const { return !(*this == other); }

  std::string str() const;  // "p^k" (or "p" when k == 1)
};

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

class Scalar {
public:
  enum class Kind { Integer, Rational, Residue, Complex };

  // Default: integer 0.
  Scalar() : rep_(mpz_class(0)) {}

  // -- factories ------------------------------------------------------------
  static Scalar integer(mpz_class v) { return Scalar(std::move(v)); }
  static Scalar integer(long v) { return Scalar(mpz_class(v)); }
  static Scalar rational(mpq_class v);
  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar rational(long num, long den);
  static Scalar residue(mpz_class v, PrimePower m);
  static Scalar complex(std::complex<double> z) { return Scalar(z); }

  // -- classification ---------------------------------------------------------
  Kind kind() const;
  bool same_domain(const Scalar& other) const;

  bool is_zero() const;
  bool is_one() const;
  // Multiplicative unit of its domain (nonzero for fields; +-1 over Z;
  // prime-to-p value over Z/p^k).
  bool is_unit() const;

  // -- arithmetic (same-domain only; KindError otherwise) --------------------
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  // Multiplicative inverse; PreconditionError unless is_unit().
  Scalar inverse() const;
  // Exact division; PreconditionError if rhs does not divide *this exactly
  // (integers) or rhs is not a unit (other domains).
  Scalar div_exact(const Scalar& rhs) const;
  Scalar pow(unsigned long e) const;

  bool operator==(const Scalar& rhs) const;
  bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }
  // Total order inside {Integer, Rational}: numeric; Residue: representative;
  // used for canonical sorting of witnesses.  Complex compares lexicographic.
  bool operator<(const Scalar& rhs) const;

  // -- accessors (checked) ----------------------------------------------------
  const mpz_class& as_integer() const;
  const mpq_class& as_rational() const;
  const mpz_class& residue_value() const;
  const PrimePower& residue_modulus() const;
  std::complex<double> as_complex() const;

  // -- conversions ------------------------------------------------------------
  // Integer -> Rational (identity on rationals).
  Scalar to_rational() const;
  // Rational with denominator 1 (or Integer) -> Integer; PreconditionError
  // otherwise.
  Scalar to_integer() const;
  // Integer or Rational -> Residue mod m.  For rationals the denominator must
  // be a unit mod m (PreconditionError when p divides it).
  Scalar reduce_mod(const PrimePower& m) const;
  // Any exact kind -> Complex (numeric value).
  Scalar to_complex() const;

  std::string str() const;

private:
  struct ResidueRep {
    mpz_class v;   // in [0, m.modulus)
    PrimePower m;
  };

  explicit Scalar(mpz_class v) : rep_(std::move(v)) {}
  explicit Scalar(mpq_class v) : rep_(std::move(v)) {}
  explicit Scalar(ResidueRep r) : rep_(std::move(r)) {}
  explicit Scalar(std::complex<double> z) : rep_(z) {}

  std::variant<mpz_class, mpq_class, ResidueRep, std::complex<double>> rep_;
};

// ---------------------------------------------------------------------------
// CoeffRing: runtime descriptor of a coefficient domain
// ---------------------------------------------------------------------------

// Polynomials and maps carry one of these so that the empty polynomial still
// knows its domain and so that residue moduli are checked once, structurally.
struct CoeffRing {
  Scalar::Kind kind = Scalar::Kind::Integer;
  std::optional<PrimePower> mod;  // engaged iff kind == Residue

  static CoeffRing integers() { return {Scalar::Kind::Integer, std::nullopt}; }
  static CoeffRing rationals() { return {Scalar::Kind::Rational, std::nullopt}; }
  static CoeffRing residues(PrimePower m) {
    return {Scalar::Kind::Residue, std::move(m)};
  }
  static CoeffRing complexes() { return {Scalar::Kind::Complex, std::nullopt}; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;

  bool accepts(const Scalar& s) const;
  // True when the domain has no zero divisors (Z, Q, C, and F_p = Z/p^1).
  bool is_integral_domain() const;
  bool is_exact() const { return kind != Scalar::Kind::Complex; }

  bool operator==(const CoeffRing& o) const {
    if (kind != o.kind) return false;
    if (kind == Scalar::Kind::Residue) return *mod == *o.mod;
    return true;
  }
  bool operator!=(const CoeffRing& o) const { return !(*this == o); }

  std::string str() const;
};

}  // namespace polymap
