#pragma once

// Finite-quotient and p-adic machinery: exhaustive bijectivity scans over
// (Z/p^k)^n, the one-prime surjectivity criterion (bijective mod p plus a
// nowhere-vanishing Jacobian determinant on F_p^n), Newton/Hensel lifting,
// mod-p^2 collision witnesses, complete mod-p^k solving, injectivity probes
// and certificates, and univariate power-series Hensel lifting.

#include <optional>

#include "polymap/residues.hpp"

namespace polymap {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Two distinct points with equal images, all reduced mod m.
struct Collision {
  ResidueVector a;
  ResidueVector b;
  std::vector<mpz_class> image;  // f(a) = f(b) = image (mod m)
};

struct BijectivityEvidence {
  bool bijective = false;
  std::uint64_t points_checked = 0;
  std::optional<Collision> collision;            // engaged iff not bijective
  std::optional<std::vector<mpz_class>> missed;  // a target never attained
};

// Exhaustive scan of f on (Z/p^k)^n.  On failure both evidence forms are
// reported (on a finite set, missing a target and colliding are equivalent).
BijectivityEvidence is_bijective_mod(const PolyMap& f, std::uint64_t p,
                                     unsigned k,
                                     std::uint64_t budget = kDefaultBudget);

struct LocalSurjectivityVerdict {
  std::uint64_t p = 0;
  bool surjective = false;
  // Success evidence (both true when surjective):
  bool bijective_mod_p = false;
  bool det_nonvanishing = false;
  // Failure evidence (exactly one family engaged when not surjective):
  std::optional<std::vector<mpz_class>> missed_target_mod_p;
  std::optional<Collision> collision_mod_p;
  std::optional<ResidueVector> singular_point;  // det(Jf)(a) = 0 mod p
  std::optional<Collision> collision_mod_p2;    // built from singular_point
  bool verified = false;  // failure certificates re-checked by evaluation
};

// Decides surjectivity of f over Z_p (equivalently over Z/p^k for all k):
// f surjective <=> f bijective mod p and det(Jf) nonvanishing on F_p^n.
// Both conditions depend only on residues mod p, so the scan is finite.
LocalSurjectivityVerdict zp_surjectivity_criterion(
    const PolyMap& f, std::uint64_t p, std::uint64_t budget = kDefaultBudget);

// Explicit injectivity failure mod p^2 at a singular point: a kernel vector
// x of (Jf)(a) over F_p gives m = p*x with f(a+m) = f(a) mod p^2, a+m != a.
// Precondition: det((Jf)(a)) = 0 mod p.
Collision mod_p2_collision_witness(const PolyMap& f, std::uint64_t p,
                                   const ResidueVector& a);

// Newton iteration a <- a - ((Jf)(a))^-1 f(a), one exponent level at a time;
// the invariant f(a) = 0 mod p^(level) is asserted after every step.
// Preconditions: f(seed) = 0 mod p and det((Jf)(seed)) != 0 mod p.
ResidueVector hensel_lift_vector(const PolyMap& f, std::uint64_t p, unsigned k,
                                 const ResidueVector& seed);

struct SolveStats {
  std::uint64_t seeds_scanned = 0;
  std::uint64_t nonsingular_seeds = 0;
  std::uint64_t singular_seeds = 0;
  std::uint64_t level_extensions = 0;
};

// All solutions of f(x) = target mod p^k, sorted lexicographically: seeds
// are found by scanning mod p; nonsingular seeds lift uniquely by Newton;
// singular seeds are extended exhaustively level-by-level.  Complete.
std::vector<ResidueVector> solve_system_mod(
    const PolyMap& f, const std::vector<mpz_class>& target, std::uint64_t p,
    unsigned k, std::uint64_t budget = kDefaultBudget,
    SolveStats* stats = nullptr);

// x -> x^m injective on Z_p <=> gcd(m, 2(p-1)) = 1.
bool power_map_injectivity(unsigned long m, std::uint64_t p);

// Certified non-injectivity over Z_p for univariate f: two mod-p points with
// equal image and nonvanishing derivative, Hensel-lifted to precision p^3
// against the exact integer target value f(b).
struct ZpNoninjectivityCertificate {
  std::uint64_t p = 0;
  mpz_class seed_b, seed_c;       // distinct collision seeds mod p
  ResidueVector lift_b, lift_c;   // distinct lifts mod p^3
  std::vector<mpz_class> value;   // f(lift_b) = f(lift_c) = value mod p^3
  mpz_class exact_target;         // the integer f(seed_b) the lifts solve
};

std::optional<ZpNoninjectivityCertificate> certify_noninjective_zp(
    const PolyMap& f, std::uint64_t p, std::uint64_t budget = kDefaultBudget);

// One-sided probe: a collision-free scan certifies that f is injective on
// (Z/p^k)^n.  A collision at level k says nothing about Z_p (injectivity
// does not pass to finite levels), hence Inconclusive.
enum class ProbeStatus { InjectiveCertified, Inconclusive };

struct InjectivityProbe {
  ProbeStatus status = ProbeStatus::Inconclusive;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t points_checked = 0;
  std::optional<Collision> collision;  // engaged iff Inconclusive
};

InjectivityProbe injectivity_probe_mod_pk(const PolyMap& f, std::uint64_t p,
                                          unsigned k,
                                          std::uint64_t budget = kDefaultBudget);

// Power-series Hensel lifting (univariate): the unique series solution of
// f(sol(t)) = s(t) mod t^(K+1) with sol(0) a nonsingular root of f(x) = s(0).
struct SeriesLiftResult {
  MultiPoly solution;   // univariate in t, rational or complex coefficients
  unsigned order = 0;   // K
  bool exact = false;   // rational path; complex path is approximate
  MultiPoly residual;   // f(solution) - s truncated at K (exact: zero)
  double residual_norm = 0.0;  // max |coefficient| of the residual
  Scalar base;          // the chosen base root a = sol(0)
};

// Base-root policy when `base` is absent: the smallest rational root a of
// f(x) = s(0) with f'(a) != 0; otherwise an approximate complex root via
// companion-matrix eigenvalues (largest |f'| among the eigenvalues).
SeriesLiftResult series_hensel_lift(const MultiPoly& f, const MultiPoly& s,
                                    unsigned K,
                                    std::optional<Scalar> base = std::nullopt);

}  // namespace polymap
