#include "polymap/scalar.hpp"

#include <array>
#include <sstream>

#include "polymap/detail/modarith.hpp"

namespace polymap {

// ===========================================================================
// Primality (deterministic Miller-Rabin below 2^64)
// ===========================================================================

using detail::mulmod_u64;
using detail::powmod_u64;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is known to be a deterministic witness set for n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ===========================================================================
// PrimePower
// ===========================================================================

PrimePower PrimePower::make(std::uint64_t p, unsigned k) {
  if (!is_prime_u64(p))
    throw PreconditionError("modulus base " + std::to_string(p) +
                            " is not prime");
  if (k == 0) throw PreconditionError("modulus exponent must be >= 1");
  PrimePower m;
  m.p = p;
  m.k = k;
  mpz_ui_pow_ui(m.modulus.get_mpz_t(), p, k);
  return m;
}

std::string PrimePower::str() const {
  if (k == 1) return std::to_string(p);
  return std::to_string(p) + "^" + std::to_string(k);
}

// ===========================================================================
// Scalar
// ===========================================================================

namespace {

mpz_class reduce_into_range(const mpz_class& v, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());  // always in [0, m)
  return r;
}

[[noreturn]] void kind_mismatch(const char* op) {
  throw KindError(std::string("scalar operands of '") + op +
                  "' live in different coefficient domains");
}

}  // namespace

Scalar Scalar::rational(mpq_class v) {
  v.canonicalize();
  return Scalar(std::move(v));
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  mpq_class q(num);
  q /= mpq_class(den);
  return Scalar(std::move(q));
}

Scalar Scalar::rational(long num, long den) {
  return rational(mpz_class(num), mpz_class(den));
}

Scalar Scalar::residue(mpz_class v, PrimePower m) {
  ResidueRep r{reduce_into_range(v, m.modulus), std::move(m)};
  return Scalar(std::move(r));
}

Scalar::Kind Scalar::kind() const {
  switch (rep_.index()) {
    case 0: return Kind::Integer;
    case 1: return Kind::Rational;
    case 2: return Kind::Residue;
    default: return Kind::Complex;
  }
}

bool Scalar::same_domain(const Scalar& other) const {
  if (kind() != other.kind()) return false;
  if (kind() == Kind::Residue)
    return std::get<ResidueRep>(rep_).m == std::get<ResidueRep>(other.rep_).m;
  return true;
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case Kind::Integer: return std::get<mpz_class>(rep_) == 0;
    case Kind::Rational: return std::get<mpq_class>(rep_) == 0;
    case Kind::Residue: return std::get<ResidueRep>(rep_).v == 0;
    case Kind::Complex: return std::get<std::complex<double>>(rep_) == 0.0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (kind()) {
    case Kind::Integer: return std::get<mpz_class>(rep_) == 1;
    case Kind::Rational: return std::get<mpq_class>(rep_) == 1;
    case Kind::Residue: {
      const auto& r = std::get<ResidueRep>(rep_);
      return r.v == 1 || r.m.modulus == 1;
    }
    case Kind::Complex:
      return std::get<std::complex<double>>(rep_) == std::complex<double>(1.0);
  }
  return false;
}

bool Scalar::is_unit() const {
  switch (kind()) {
    case Kind::Integer: {
      const auto& v = std::get<mpz_class>(rep_);
      return v == 1 || v == -1;
    }
    case Kind::Rational: return std::get<mpq_class>(rep_) != 0;
    case Kind::Residue: {
      const auto& r = std::get<ResidueRep>(rep_);
      return mpz_divisible_ui_p(r.v.get_mpz_t(), r.m.p) == 0;
    }
    case Kind::Complex: return !is_zero();
  }
  return false;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  if (!same_domain(rhs)) kind_mismatch("+");
  switch (kind()) {
    case Kind::Integer:
      return Scalar(mpz_class(std::get<mpz_class>(rep_) +
                              std::get<mpz_class>(rhs.rep_)));
    case Kind::Rational:
      return Scalar(mpq_class(std::get<mpq_class>(rep_) +
                              std::get<mpq_class>(rhs.rep_)));
    case Kind::Residue: {
      const auto& a = std::get<ResidueRep>(rep_);
      const auto& b = std::get<ResidueRep>(rhs.rep_);
      mpz_class s = a.v + b.v;
      if (s >= a.m.modulus) s -= a.m.modulus;
      return Scalar(ResidueRep{std::move(s), a.m});
    }
    case Kind::Complex:
      return Scalar(std::get<std::complex<double>>(rep_) +
                    std::get<std::complex<double>>(rhs.rep_));
  }
  throw Error("unreachable");
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  if (!same_domain(rhs)) kind_mismatch("*");
  switch (kind()) {
    case Kind::Integer:
      return Scalar(mpz_class(std::get<mpz_class>(rep_) *
                              std::get<mpz_class>(rhs.rep_)));
    case Kind::Rational:
      return Scalar(mpq_class(std::get<mpq_class>(rep_) *
                              std::get<mpq_class>(rhs.rep_)));
    case Kind::Residue: {
      const auto& a = std::get<ResidueRep>(rep_);
      const auto& b = std::get<ResidueRep>(rhs.rep_);
      return Scalar(ResidueRep{reduce_into_range(a.v * b.v, a.m.modulus), a.m});
    }
    case Kind::Complex:
      return Scalar(std::get<std::complex<double>>(rep_) *
                    std::get<std::complex<double>>(rhs.rep_));
  }
  throw Error("unreachable");
}

Scalar Scalar::operator-() const {
  switch (kind()) {
    case Kind::Integer: return Scalar(mpz_class(-std::get<mpz_class>(rep_)));
    case Kind::Rational: return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
    case Kind::Residue: {
      const auto& r = std::get<ResidueRep>(rep_);
      if (r.v == 0) return *this;
      return Scalar(ResidueRep{mpz_class(r.m.modulus - r.v), r.m});
    }
    case Kind::Complex:
      return Scalar(-std::get<std::complex<double>>(rep_));
  }
  throw Error("unreachable");
}

Scalar Scalar::inverse() const {
  if (!is_unit())
    throw PreconditionError("inverse of non-unit scalar " + str());
  switch (kind()) {
    case Kind::Integer: return *this;  // 1 and -1 are self-inverse
    case Kind::Rational:
      return Scalar(mpq_class(1 / std::get<mpq_class>(rep_)));
    case Kind::Residue: {
      const auto& r = std::get<ResidueRep>(rep_);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), r.v.get_mpz_t(),
                     r.m.modulus.get_mpz_t()) == 0)
        throw PreconditionError("residue " + r.v.get_str() +
                                " not invertible mod " + r.m.str());
      return Scalar(ResidueRep{std::move(inv), r.m});
    }
    case Kind::Complex:
      return Scalar(1.0 / std::get<std::complex<double>>(rep_));
  }
  throw Error("unreachable");
}

Scalar Scalar::div_exact(const Scalar& rhs) const {
  if (!same_domain(rhs)) kind_mismatch("/");
  if (kind() == Kind::Integer) {
    const auto& a = std::get<mpz_class>(rep_);
    const auto& b = std::get<mpz_class>(rhs.rep_);
    if (b == 0) throw PreconditionError("division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
      throw PreconditionError("inexact integer division " + a.get_str() +
                              " / " + b.get_str());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Scalar(std::move(q));
  }
  return *this * rhs.inverse();
}

Scalar Scalar::pow(unsigned long e) const {
  if (kind() == Kind::Residue) {
    const auto& r = std::get<ResidueRep>(rep_);
    mpz_class out;
    mpz_powm_ui(out.get_mpz_t(), r.v.get_mpz_t(), e, r.m.modulus.get_mpz_t());
    return Scalar(ResidueRep{std::move(out), r.m});
  }
  Scalar acc = *this;
  Scalar result = Scalar::integer(1);
  switch (kind()) {
    case Kind::Integer: result = Scalar::integer(1); break;
    case Kind::Rational: result = Scalar::rational(mpq_class(1)); break;
    case Kind::Complex: result = Scalar::complex({1.0, 0.0}); break;
    default: break;
  }
  while (e > 0) {
    if (e & 1) result = result * acc;
    acc = acc * acc;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (!same_domain(rhs)) return false;
  switch (kind()) {
    case Kind::Integer:
      return std::get<mpz_class>(rep_) == std::get<mpz_class>(rhs.rep_);
    case Kind::Rational:
      return std::get<mpq_class>(rep_) == std::get<mpq_class>(rhs.rep_);
    case Kind::Residue:
      return std::get<ResidueRep>(rep_).v == std::get<ResidueRep>(rhs.rep_).v;
    case Kind::Complex:
      return std::get<std::complex<double>>(rep_) ==
             std::get<std::complex<double>>(rhs.rep_);
  }
  return false;
}

bool Scalar::operator<(const Scalar& rhs) const {
  if (!same_domain(rhs))
    throw KindError("ordering scalars from different domains");
  switch (kind()) {
    case Kind::Integer:
      return std::get<mpz_class>(rep_) < std::get<mpz_class>(rhs.rep_);
    case Kind::Rational:
      return std::get<mpq_class>(rep_) < std::get<mpq_class>(rhs.rep_);
    case Kind::Residue:
      return std::get<ResidueRep>(rep_).v < std::get<ResidueRep>(rhs.rep_).v;
    case Kind::Complex: {
      auto a = std::get<std::complex<double>>(rep_);
      auto b = std::get<std::complex<double>>(rhs.rep_);
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    }
  }
  return false;
}

const mpz_class& Scalar::as_integer() const {
  if (kind() != Kind::Integer) throw KindError("scalar is not an integer");
  return std::get<mpz_class>(rep_);
}

const mpq_class& Scalar::as_rational() const {
  if (kind() != Kind::Rational) throw KindError("scalar is not a rational");
  return std::get<mpq_class>(rep_);
}

const mpz_class& Scalar::residue_value() const {
  if (kind() != Kind::Residue) throw KindError("scalar is not a residue");
  return std::get<ResidueRep>(rep_).v;
}

const PrimePower& Scalar::residue_modulus() const {
  if (kind() != Kind::Residue) throw KindError("scalar is not a residue");
  return std::get<ResidueRep>(rep_).m;
}

std::complex<double> Scalar::as_complex() const {
  if (kind() != Kind::Complex) throw KindError("scalar is not complex");
  return std::get<std::complex<double>>(rep_);
}

Scalar Scalar::to_rational() const {
  switch (kind()) {
    case Kind::Integer: return Scalar(mpq_class(std::get<mpz_class>(rep_)));
    case Kind::Rational: return *this;
    default: throw KindError("cannot convert " + str() + " to a rational");
  }
}

Scalar Scalar::to_integer() const {
  switch (kind()) {
    case Kind::Integer: return *this;
    case Kind::Rational: {
      const auto& q = std::get<mpq_class>(rep_);
      if (q.get_den() != 1)
        throw PreconditionError("rational " + q.get_str() +
                                " is not an integer");
      return Scalar(mpz_class(q.get_num()));
    }
    default: throw KindError("cannot convert " + str() + " to an integer");
  }
}

Scalar Scalar::reduce_mod(const PrimePower& m) const {
  switch (kind()) {
    case Kind::Integer:
      return residue(std::get<mpz_class>(rep_), m);
    case Kind::Rational: {
      const auto& q = std::get<mpq_class>(rep_);
      Scalar den = residue(mpz_class(q.get_den()), m);
      if (!den.is_unit())
        throw PreconditionError("denominator of " + q.get_str() +
                                " is not invertible mod " + m.str());
      return residue(mpz_class(q.get_num()), m) * den.inverse();
    }
    case Kind::Residue: {
      const auto& r = std::get<ResidueRep>(rep_);
      if (r.m.p != m.p || r.m.k < m.k)
        throw PreconditionError("cannot reduce residue mod " + r.m.str() +
                                " to modulus " + m.str());
      return residue(r.v, m);
    }
    default: throw KindError("cannot reduce " + str() + " to a residue");
  }
}

Scalar Scalar::to_complex() const {
  switch (kind()) {
    case Kind::Integer:
      return Scalar(std::complex<double>(std::get<mpz_class>(rep_).get_d()));
    case Kind::Rational:
      return Scalar(std::complex<double>(std::get<mpq_class>(rep_).get_d()));
    case Kind::Complex: return *this;
    default: throw KindError("cannot convert residue to complex");
  }
}

std::string Scalar::str() const {
  switch (kind()) {
    case Kind::Integer: return std::get<mpz_class>(rep_).get_str();
    case Kind::Rational: return std::get<mpq_class>(rep_).get_str();
    case Kind::Residue: return std::get<ResidueRep>(rep_).v.get_str();
    case Kind::Complex: {
      auto z = std::get<std::complex<double>>(rep_);
      std::ostringstream os;
      os << "(" << z.real();
      if (z.imag() != 0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
      os << ")";
      return os.str();
    }
  }
  return "?";
}

// ===========================================================================
// CoeffRing
// ===========================================================================

Scalar CoeffRing::zero() const { return from_int(0); }
Scalar CoeffRing::one() const { return from_int(1); }

Scalar CoeffRing::from_int(long v) const {
  switch (kind) {
    case Scalar::Kind::Integer: return Scalar::integer(v);
    case Scalar::Kind::Rational: return Scalar::rational(mpq_class(v));
    case Scalar::Kind::Residue: return Scalar::residue(mpz_class(v), *mod);
    case Scalar::Kind::Complex:
      return Scalar::complex({static_cast<double>(v), 0.0});
  }
  throw Error("unreachable");
}

bool CoeffRing::accepts(const Scalar& s) const {
  if (s.kind() != kind) return false;
  if (kind == Scalar::Kind::Residue) return s.residue_modulus() == *mod;
  return true;
}

bool CoeffRing::is_integral_domain() const {
  if (kind == Scalar::Kind::Residue) return mod->k == 1;
  return true;
}

std::string CoeffRing::str() const {
  switch (kind) {
    case Scalar::Kind::Integer: return "Z";
    case Scalar::Kind::Rational: return "Q";
    case Scalar::Kind::Residue: return "Z/" + mod->str();
    case Scalar::Kind::Complex: return "C";
  }
  return "?";
}

}  // namespace polymap
