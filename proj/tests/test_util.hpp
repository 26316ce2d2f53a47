#pragma once

// Shared helpers for the test suite: seeded random polynomial generators and
// independent (library-free) reference computations used as oracles.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "polymap/multipoly.hpp"
#include "polymap/polymap.hpp"
#include "polymap/residues.hpp"

namespace testutil {

using polymap::CoeffRing;
using polymap::Exponents;
using polymap::MultiPoly;
using polymap::PolyMap;
using polymap::Scalar;

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Random polynomial with total degree <= max_deg and coefficients in
// [-coeff_bound, coeff_bound]; term count <= max_terms.
inline MultiPoly random_poly(Rng& rng, unsigned nvars, unsigned max_deg,
                             long coeff_bound, unsigned max_terms,
                             const CoeffRing& ring = CoeffRing::integers()) {
  MultiPoly p(nvars, ring);
  const unsigned terms = static_cast<unsigned>(rand_int(rng, 1, max_terms));
  for (unsigned t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    unsigned remaining = max_deg;
    for (unsigned i = 0; i < nvars; ++i) {
      e[i] = static_cast<unsigned>(rand_int(rng, 0, remaining));
      remaining -= e[i];
    }
    long c = rand_int(rng, -coeff_bound, coeff_bound);
    if (c == 0) continue;
    Scalar coeff = ring.kind == Scalar::Kind::Rational
                       ? Scalar::rational(mpq_class(c, rand_int(rng, 1, 5)))
                       : ring.from_int(c);
    p.add_term(e, coeff);
  }
  return p;
}

inline PolyMap random_map(Rng& rng, unsigned n, unsigned max_deg,
                          long coeff_bound, unsigned max_terms) {
  std::vector<MultiPoly> comps;
  for (unsigned i = 0; i < n; ++i)
    comps.push_back(random_poly(rng, n, max_deg, coeff_bound, max_terms));
  return PolyMap(std::move(comps));
}

// Random composition of invertible building blocks: elementary maps
// x_i += h(other vars) and unimodular linear maps.  Every product is a
// polynomial automorphism of Z^n by construction.  hdeg caps the degree of
// the elementary summands to keep the composed degree (and with it the
// d^(n-1) inverse-degree bound) small.
inline PolyMap random_automorphism(Rng& rng, unsigned n, unsigned factors,
                                   unsigned hdeg = 2) {
  PolyMap acc = PolyMap::identity(n, CoeffRing::integers());
  for (unsigned s = 0; s < factors; ++s) {
    std::vector<MultiPoly> comps;
    if (n >= 2 && rand_int(rng, 0, 1) == 0) {
      // Elementary: add to x_i a polynomial in the other variables.
      unsigned i = static_cast<unsigned>(rand_int(rng, 0, n - 1));
      MultiPoly h(n, CoeffRing::integers());
      for (int t = 0; t < 3; ++t) {
        Exponents e(n, 0);
        unsigned deg = static_cast<unsigned>(rand_int(rng, 0, hdeg));
        for (unsigned v = 0; v < n; ++v) {
          if (v == i) continue;
          e[v] = static_cast<unsigned>(rand_int(rng, 0, deg));
          deg -= e[v];
        }
        long c = rand_int(rng, -3, 3);
        if (c != 0) h.add_term(e, Scalar::integer(c));
      }
      for (unsigned v = 0; v < n; ++v)
        comps.push_back(MultiPoly::variable(n, v, CoeffRing::integers()));
      comps[i] = comps[i] + h;
    } else {
      // Unimodular linear: identity plus one off-diagonal integer entry,
      // optionally with a row negation.
      std::vector<long> m(n * n, 0);
      for (unsigned v = 0; v < n; ++v) m[v * n + v] = 1;
      if (n >= 2) {
        unsigned i = static_cast<unsigned>(rand_int(rng, 0, n - 1));
        unsigned j = static_cast<unsigned>(rand_int(rng, 0, n - 1));
        if (i != j) m[i * n + j] = rand_int(rng, -3, 3);
      }
      unsigned neg = static_cast<unsigned>(rand_int(rng, 0, n - 1));
      if (rand_int(rng, 0, 1) == 0)
        for (unsigned j = 0; j < n; ++j) m[neg * n + j] = -m[neg * n + j];
      for (unsigned i = 0; i < n; ++i) {
        MultiPoly row(n, CoeffRing::integers());
        for (unsigned j = 0; j < n; ++j)
          if (m[i * n + j] != 0) {
            Exponents e(n, 0);
            e[j] = 1;
            row.add_term(e, Scalar::integer(m[i * n + j]));
          }
        comps.push_back(row);
      }
    }
    acc = PolyMap(comps).compose(acc);
  }
  return acc;
}

// Independent dense evaluation of an integer polynomial map modulo m:
// reimplemented from scratch (plain Horner-free power accumulation) so scans
// in the library are checked against a second code path.
inline std::vector<mpz_class> ref_eval_mod(const PolyMap& f,
                                           const std::vector<mpz_class>& x,
                                           const mpz_class& m) {
  std::vector<mpz_class> out;
  for (unsigned c = 0; c < f.dim(); ++c) {
    mpz_class acc = 0;
    for (const auto& [e, coeff] : f.component(c).terms()) {
      mpz_class term = coeff.as_integer();
      for (unsigned i = 0; i < f.dim(); ++i)
        for (unsigned j = 0; j < e[i]; ++j) term = (term * x[i]) % m;
      acc = (acc + term) % m;
    }
    acc = ((acc % m) + m) % m;
    out.push_back(acc);
  }
  return out;
}

// All points of (Z/m)^n in odometer order.
inline bool next_point(std::vector<mpz_class>& x, const mpz_class& m) {
  for (std::size_t i = x.size(); i-- > 0;) {
    ++x[i];
    if (x[i] < m) return true;
    x[i] = 0;
  }
  return false;
}

// Independent gcd of two rational coefficient vectors (ascending, possibly
// with leading zeros); returns the degree of the monic gcd.
inline int ref_gcd_degree(std::vector<mpq_class> a, std::vector<mpq_class> b) {
  auto trim = [](std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  if (a.empty()) return b.empty() ? -1 : static_cast<int>(b.size()) - 1;
  if (b.empty()) return static_cast<int>(a.size()) - 1;
  while (true) {
    if (a.size() < b.size()) std::swap(a, b);
    // a -= (lead(a)/lead(b)) * x^(da-db) * b
    mpq_class factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= factor * b[i];
    trim(a);
    if (a.empty()) return static_cast<int>(b.size()) - 1;
  }
}

inline std::vector<mpq_class> dense_rationals(const MultiPoly& p) {
  std::vector<mpq_class> out;
  for (const auto& s : p.dense_coeffs()) {
    if (s.kind() == Scalar::Kind::Integer)
      out.emplace_back(s.as_integer());
    else
      out.push_back(s.as_rational());
  }
  return out;
}

}  // namespace testutil
