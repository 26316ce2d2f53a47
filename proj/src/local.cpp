#include "polymap/local.hpp"

#include <algorithm>
#include <map>

#include <Eigen/Eigenvalues>

#include "polymap/detail/modarith.hpp"
#include "polymap/poly_matrix.hpp"
#include "polymap/rational_roots.hpp"

namespace polymap {

namespace {

using detail::addmod_u64;
using detail::mulmod_u64;

void require_integer_map(const PolyMap& f, const char* who) {
  if (f.ring().kind != Scalar::Kind::Integer)
    throw PreconditionError(std::string(who) +
                            ": map must have integer coefficients");
}

void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime_u64(p))
    throw PreconditionError(std::string(who) + ": " + std::to_string(p) +
                            " is not prime");
}

// ---------------------------------------------------------------------------
// Fast residue scans: coefficients reduced once into uint64, points walked
// with an odometer (first coordinate most significant).
// ---------------------------------------------------------------------------

struct ScanPoly {
  struct Term {
    std::vector<unsigned> e;
    std::uint64_t c = 0;
  };
  std::vector<Term> terms;
};

struct ScanContext {
  std::uint64_t M = 1;       // p^k
  std::uint64_t total = 1;   // M^n
  unsigned n = 0;
  std::vector<ScanPoly> comps;
  std::vector<unsigned> maxdeg;  // per variable, across components

  static std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                                   std::uint64_t cap, const char* who) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
      if (r > cap / base)
        throw BudgetError(std::string(who) + ": " + std::to_string(base) +
                          "^" + std::to_string(exp) +
                          " exceeds the enumeration budget of " +
                          std::to_string(cap));
      r *= base;
    }
    return r;
  }

  static ScanContext build(const std::vector<const MultiPoly*>& polys,
                           unsigned n, std::uint64_t p, unsigned k,
                           std::uint64_t budget, const char* who) {
    ScanContext ctx;
    ctx.n = n;
    ctx.M = checked_pow(p, k, budget, who);
    ctx.total = checked_pow(ctx.M, n, budget, who);
    ctx.maxdeg.assign(n, 0);
    mpz_class m(static_cast<unsigned long>(ctx.M)), r;
    for (const MultiPoly* poly : polys) {
      ScanPoly sp;
      for (const auto& [e, c] : poly->terms()) {
        mpz_mod(r.get_mpz_t(), c.as_integer().get_mpz_t(), m.get_mpz_t());
        std::uint64_t cu = r.get_ui();
        if (cu == 0) continue;
        for (unsigned i = 0; i < n; ++i)
          ctx.maxdeg[i] = std::max(ctx.maxdeg[i], e[i]);
        sp.terms.push_back({e, cu});
      }
      ctx.comps.push_back(std::move(sp));
    }
    return ctx;
  }

  void eval(const std::vector<std::uint64_t>& x,
            std::vector<std::vector<std::uint64_t>>& pow_scratch,
            std::vector<std::uint64_t>& out) const {
    for (unsigned i = 0; i < n; ++i) {
      auto& pows = pow_scratch[i];
      pows[0] = 1 % M;
      for (unsigned j = 1; j <= maxdeg[i]; ++j)
        pows[j] = mulmod_u64(pows[j - 1], x[i], M);
    }
    for (std::size_t c = 0; c < comps.size(); ++c) {
      std::uint64_t acc = 0;
      for (const auto& t : comps[c].terms) {
        std::uint64_t v = t.c;
        for (unsigned i = 0; i < n; ++i)
          if (t.e[i] > 0) v = mulmod_u64(v, pow_scratch[i][t.e[i]], M);
        acc = addmod_u64(acc, v, M);
      }
      out[c] = acc;
    }
  }

  std::vector<std::vector<std::uint64_t>> make_pow_scratch() const {
    std::vector<std::vector<std::uint64_t>> s(n);
    for (unsigned i = 0; i < n; ++i) s[i].assign(maxdeg[i] + 1, 0);
    return s;
  }

  // Odometer step; returns false after the last point.
  static bool advance(std::vector<std::uint64_t>& x, std::uint64_t M) {
    for (std::size_t i = x.size(); i-- > 0;) {
      if (++x[i] < M) return true;
      x[i] = 0;
    }
    return false;
  }

  std::uint64_t index_of(const std::vector<std::uint64_t>& x) const {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < n; ++i) idx = idx * M + x[i];
    return idx;
  }

  std::vector<std::uint64_t> point_of(std::uint64_t idx) const {
    std::vector<std::uint64_t> x(n, 0);
    for (unsigned i = n; i-- > 0;) {
      x[i] = idx % M;
      idx /= M;
    }
    return x;
  }
};

ResidueVector residue_vector_from_u64(const std::vector<std::uint64_t>& x,
                                      const PrimePower& m) {
  std::vector<mpz_class> entries;
  entries.reserve(x.size());
  for (auto v : x) entries.emplace_back(static_cast<unsigned long>(v));
  return ResidueVector{m, std::move(entries)};
}

std::vector<mpz_class> mpz_vector_from_u64(
    const std::vector<std::uint64_t>& x) {
  std::vector<mpz_class> out;
  out.reserve(x.size());
  for (auto v : x) out.emplace_back(static_cast<unsigned long>(v));
  return out;
}

// Exact determinant of an integer matrix (fraction-free elimination).
mpz_class integer_matrix_det(std::vector<mpz_class> a, unsigned n) {
  auto A = [&](unsigned i, unsigned j) -> mpz_class& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  mpz_class prev = 1;
  int sign = 1;
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      unsigned s = k + 1;
      while (s < n && A(s, k) == 0) ++s;
      if (s == n) return 0;
      for (unsigned j = 0; j < n; ++j) std::swap(A(k, j), A(s, j));
      sign = -sign;
    }
    for (unsigned i = k + 1; i < n; ++i) {
      for (unsigned j = k + 1; j < n; ++j) {
        mpz_class num = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(A(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      A(i, k) = 0;
    }
    prev = A(k, k);
  }
  return sign == 1 ? A(n - 1, n - 1) : mpz_class(-A(n - 1, n - 1));
}

// (Jf)(a) as an integer matrix, then reduced mod m.
std::vector<mpz_class> jacobian_at_mod(const PolyMap& f,
                                       const std::vector<mpz_class>& a,
                                       const PrimePower& m) {
  PolyMatrix J = jacobian_matrix(f);
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(f.dim()) * f.dim());
  std::vector<Scalar> pt;
  pt.reserve(a.size());
  for (const auto& v : a) pt.push_back(Scalar::integer(v));
  for (unsigned i = 0; i < f.dim(); ++i)
    for (unsigned j = 0; j < f.dim(); ++j) {
      mpz_class v = J.at(i, j).eval(pt).as_integer();
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.modulus.get_mpz_t());
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace

// ===========================================================================
// Exhaustive bijectivity scan
// ===========================================================================

BijectivityEvidence is_bijective_mod(const PolyMap& f, std::uint64_t p,
                                     unsigned k, std::uint64_t budget) {
  require_integer_map(f, "is_bijective_mod");
  require_prime(p, "is_bijective_mod");
  if (k == 0) throw PreconditionError("is_bijective_mod: k must be >= 1");
  const unsigned n = f.dim();
  std::vector<const MultiPoly*> polys;
  for (unsigned i = 0; i < n; ++i) polys.push_back(&f.component(i));
  ScanContext ctx =
      ScanContext::build(polys, n, p, k, budget, "is_bijective_mod");
  PrimePower m = PrimePower::make(p, k);

  // hits[image index] = 1 + index of the first preimage (0 = unseen).
  std::vector<std::uint32_t> hits(ctx.total, 0);
  std::optional<Collision> collision;
  auto scratch = ctx.make_pow_scratch();
  std::vector<std::uint64_t> x(n, 0), img(n, 0);
  std::uint64_t idx = 0;
  do {
    ctx.eval(x, scratch, img);
    std::uint64_t img_idx = ctx.index_of(img);
    if (hits[img_idx] == 0) {
      hits[img_idx] = static_cast<std::uint32_t>(idx + 1);
    } else if (!collision) {
      std::vector<std::uint64_t> first = ctx.point_of(hits[img_idx] - 1);
      collision = Collision{residue_vector_from_u64(first, m),
                            residue_vector_from_u64(x, m),
                            mpz_vector_from_u64(img)};
    }
    ++idx;
  } while (ScanContext::advance(x, ctx.M));

  BijectivityEvidence out;
  out.points_checked = ctx.total;
  out.collision = collision;
  for (std::uint64_t t = 0; t < ctx.total; ++t) {
    if (hits[t] == 0) {
      out.missed = mpz_vector_from_u64(ctx.point_of(t));
      break;
    }
  }
  out.bijective = !collision.has_value();
  // On a finite set of equal source and target size, missing a target and
  // having a collision are equivalent; check the scan agrees with itself.
  if (out.missed.has_value() != out.collision.has_value())
    throw Error("is_bijective_mod: scan invariant violated");
  return out;
}

// ===========================================================================
// One-prime surjectivity criterion
// ===========================================================================

Collision mod_p2_collision_witness(const PolyMap& f, std::uint64_t p,
                                   const ResidueVector& a) {
  require_integer_map(f, "mod_p2_collision_witness");
  require_prime(p, "mod_p2_collision_witness");
  if (a.m.p != p || a.dim() != f.dim())
    throw PreconditionError(
        "mod_p2_collision_witness: point does not match the map and prime");

  PrimePower m1 = PrimePower::make(p, 1);
  std::vector<mpz_class> J = jacobian_at_mod(f, a.entries, m1);
  mpz_class det = integer_matrix_det(J, f.dim());
  if (mpz_divisible_ui_p(det.get_mpz_t(), p) == 0)
    throw PreconditionError(
        "mod_p2_collision_witness: det((Jf)(a)) is a unit mod " +
        std::to_string(p));

  auto kernel = kernel_vector_mod_p(J, f.dim(), p);
  if (!kernel)
    throw Error("mod_p2_collision_witness: singular matrix without kernel");

  PrimePower m2 = PrimePower::make(p, 2);
  std::vector<mpz_class> b_entries;
  b_entries.reserve(f.dim());
  for (unsigned i = 0; i < f.dim(); ++i)
    b_entries.push_back(a.entries[i] + mpz_class(p) * (*kernel)[i]);
  ResidueVector av = ResidueVector::reduce(a.entries, m2);
  ResidueVector bv = ResidueVector::reduce(b_entries, m2);
  if (av == bv)
    throw Error("mod_p2_collision_witness: kernel vector was zero");

  std::vector<mpz_class> fa = eval_map_mod(f, av.entries, m2);
  std::vector<mpz_class> fb = eval_map_mod(f, bv.entries, m2);
  if (fa != fb)
    throw Error("mod_p2_collision_witness: witness failed re-verification");
  return Collision{std::move(av), std::move(bv), std::move(fa)};
}

LocalSurjectivityVerdict zp_surjectivity_criterion(const PolyMap& f,
                                                   std::uint64_t p,
                                                   std::uint64_t budget) {
  require_integer_map(f, "zp_surjectivity_criterion");
  require_prime(p, "zp_surjectivity_criterion");
  const unsigned n = f.dim();
  PrimePower m1 = PrimePower::make(p, 1);

  LocalSurjectivityVerdict v;
  v.p = p;

  BijectivityEvidence ev = is_bijective_mod(f, p, 1, budget);
  v.bijective_mod_p = ev.bijective;
  if (!ev.bijective) {
    v.surjective = false;
    v.missed_target_mod_p = ev.missed;
    v.collision_mod_p = ev.collision;
    // Re-verify the collision by direct evaluation.
    bool ok = true;
    if (ev.collision) {
      auto fa = eval_map_mod(f, ev.collision->a.entries, m1);
      auto fb = eval_map_mod(f, ev.collision->b.entries, m1);
      ok = (fa == fb) && (ev.collision->a != ev.collision->b);
    }
    v.verified = ok;
    return v;
  }

  // Bijective mod p: scan det(Jf) over F_p^n.
  MultiPoly det = det_poly(jacobian_matrix(f));
  std::vector<const MultiPoly*> polys{&det};
  ScanContext ctx = ScanContext::build(polys, n, p, 1, budget,
                                       "zp_surjectivity_criterion");
  auto scratch = ctx.make_pow_scratch();
  std::vector<std::uint64_t> x(n, 0), val(1, 0);
  std::optional<std::vector<std::uint64_t>> singular;
  do {
    ctx.eval(x, scratch, val);
    if (val[0] == 0) {
      singular = x;
      break;
    }
  } while (ScanContext::advance(x, ctx.M));

  if (!singular) {
    v.surjective = true;
    v.det_nonvanishing = true;
    v.verified = true;
    return v;
  }
  v.surjective = false;
  v.det_nonvanishing = false;
  v.singular_point = residue_vector_from_u64(*singular, m1);
  v.collision_mod_p2 = mod_p2_collision_witness(f, p, *v.singular_point);
  v.verified = true;  // the witness builder re-verifies by evaluation
  return v;
}

// ===========================================================================
// Hensel lifting
// ===========================================================================

ResidueVector hensel_lift_vector(const PolyMap& f, std::uint64_t p, unsigned k,
                                 const ResidueVector& seed) {
  require_integer_map(f, "hensel_lift_vector");
  require_prime(p, "hensel_lift_vector");
  if (k == 0) throw PreconditionError("hensel_lift_vector: k must be >= 1");
  if (seed.m.p != p || seed.m.k != 1)
    throw PreconditionError("hensel_lift_vector: seed must be given mod p");
  if (seed.dim() != f.dim())
    throw DimensionError("hensel_lift_vector: seed dimension mismatch");

  const unsigned n = f.dim();
  PrimePower m1 = PrimePower::make(p, 1);
  for (const auto& r : eval_map_mod(f, seed.entries, m1))
    if (r != 0)
      throw PreconditionError(
          "hensel_lift_vector: seed is not a root of f mod " +
          std::to_string(p));
  if (!invert_matrix_mod(jacobian_at_mod(f, seed.entries, m1), n, m1))
    throw PreconditionError(
        "hensel_lift_vector: Jacobian is singular mod p at the seed");

  std::vector<mpz_class> a = seed.entries;
  for (unsigned level = 2; level <= k; ++level) {
    PrimePower ml = PrimePower::make(p, level);
    auto Jinv = invert_matrix_mod(jacobian_at_mod(f, a, ml), n, ml);
    if (!Jinv)
      throw Error("hensel_lift_vector: Jacobian became singular mid-lift");
    std::vector<mpz_class> fv = eval_map_mod(f, a, ml);
    std::vector<mpz_class> next(n);
    for (unsigned i = 0; i < n; ++i) {
      mpz_class step = 0;
      for (unsigned j = 0; j < n; ++j)
        step += (*Jinv)[static_cast<std::size_t>(i) * n + j] * fv[j];
      next[i] = a[i] - step;
      mpz_mod(next[i].get_mpz_t(), next[i].get_mpz_t(),
              ml.modulus.get_mpz_t());
    }
    a = std::move(next);
    // Newton contraction invariant: f(a) = 0 mod p^level after every step.
    for (const auto& r : eval_map_mod(f, a, ml))
      if (r != 0)
        throw Error("hensel_lift_vector: Newton step failed to contract");
  }
  return ResidueVector::reduce(std::move(a), PrimePower::make(p, k));
}

// ===========================================================================
// Complete mod-p^k solver
// ===========================================================================

std::vector<ResidueVector> solve_system_mod(const PolyMap& f,
                                            const std::vector<mpz_class>& target,
                                            std::uint64_t p, unsigned k,
                                            std::uint64_t budget,
                                            SolveStats* stats) {
  require_integer_map(f, "solve_system_mod");
  require_prime(p, "solve_system_mod");
  if (k == 0) throw PreconditionError("solve_system_mod: k must be >= 1");
  if (target.size() != f.dim())
    throw DimensionError("solve_system_mod: target dimension mismatch");
  const unsigned n = f.dim();

  // g = f - target; solve g = 0.
  std::vector<MultiPoly> gcomps;
  gcomps.reserve(n);
  for (unsigned i = 0; i < n; ++i)
    gcomps.push_back(f.component(i) -
                     MultiPoly::constant(n, Scalar::integer(target[i])));
  PolyMap g(std::move(gcomps));

  SolveStats local_stats;
  // Scan mod p for seeds.
  std::vector<const MultiPoly*> polys;
  for (unsigned i = 0; i < n; ++i) polys.push_back(&g.component(i));
  ScanContext ctx =
      ScanContext::build(polys, n, p, 1, budget, "solve_system_mod");
  PrimePower m1 = PrimePower::make(p, 1);
  MultiPoly det = det_poly(jacobian_matrix(g));

  std::vector<ResidueVector> solutions;
  auto scratch = ctx.make_pow_scratch();
  std::vector<std::uint64_t> x(n, 0), val(n, 0);
  std::uint64_t work = ctx.total;
  do {
    ctx.eval(x, scratch, val);
    ++local_stats.seeds_scanned;
    bool is_root = true;
    for (unsigned i = 0; i < n; ++i)
      if (val[i] != 0) {
        is_root = false;
        break;
      }
    if (!is_root) continue;
    ResidueVector seed = residue_vector_from_u64(x, m1);
    std::vector<Scalar> pt;
    for (const auto& e : seed.entries) pt.push_back(Scalar::integer(e));
    mpz_class dv = det.eval(pt).as_integer();
    if (mpz_divisible_ui_p(dv.get_mpz_t(), p) == 0) {
      ++local_stats.nonsingular_seeds;
      solutions.push_back(hensel_lift_vector(g, p, k, seed));
    } else {
      // Exhaustive level-by-level extension of a singular seed.
      ++local_stats.singular_seeds;
      std::vector<std::vector<mpz_class>> level_sols{seed.entries};
      mpz_class step(static_cast<unsigned long>(p));  // p^(level-1)
      for (unsigned level = 2; level <= k && !level_sols.empty(); ++level) {
        PrimePower ml = PrimePower::make(p, level);
        std::uint64_t ext = ScanContext::checked_pow(
            p, n, budget, "solve_system_mod (extension)");
        work += level_sols.size() * ext;
        if (work > budget)
          throw BudgetError(
              "solve_system_mod: singular-seed extension exceeds the "
              "enumeration budget of " +
              std::to_string(budget));
        std::vector<std::vector<mpz_class>> next;
        std::vector<std::uint64_t> t(n, 0);
        for (const auto& base : level_sols) {
          std::fill(t.begin(), t.end(), 0);
          do {
            std::vector<mpz_class> cand(n);
            for (unsigned i = 0; i < n; ++i)
              cand[i] = base[i] +
                        step * mpz_class(static_cast<unsigned long>(t[i]));
            bool ok = true;
            for (const auto& r : eval_map_mod(g, cand, ml))
              if (r != 0) {
                ok = false;
                break;
              }
            if (ok) next.push_back(std::move(cand));
            ++local_stats.level_extensions;
          } while (ScanContext::advance(t, p));
        }
        level_sols = std::move(next);
        step *= static_cast<unsigned long>(p);
      }
      PrimePower mk = PrimePower::make(p, k);
      for (auto& s : level_sols)
        solutions.push_back(ResidueVector::reduce(std::move(s), mk));
    }
  } while (ScanContext::advance(x, ctx.M));

  // Final verification of every reported solution.
  PrimePower mk = PrimePower::make(p, k);
  for (const auto& s : solutions)
    for (const auto& r : eval_map_mod(g, s.entries, mk))
      if (r != 0) throw Error("solve_system_mod: solution failed verification");

  std::sort(solutions.begin(), solutions.end());
  if (stats) *stats = local_stats;
  return solutions;
}

// ===========================================================================
// Injectivity over Z_p: power maps, certificates, probes
// ===========================================================================

bool power_map_injectivity(unsigned long m, std::uint64_t p) {
  if (m == 0) throw PreconditionError("power_map_injectivity: m must be >= 1");
  require_prime(p, "power_map_injectivity");
  mpz_class g, me(m), pe(static_cast<unsigned long>(p));
  pe = 2 * (pe - 1);
  mpz_gcd(g.get_mpz_t(), me.get_mpz_t(), pe.get_mpz_t());
  return g == 1;
}

std::optional<ZpNoninjectivityCertificate> certify_noninjective_zp(
    const PolyMap& f, std::uint64_t p, std::uint64_t budget) {
  require_integer_map(f, "certify_noninjective_zp");
  require_prime(p, "certify_noninjective_zp");
  if (f.dim() != 1)
    throw PreconditionError("certify_noninjective_zp: map must be univariate");
  if (p > budget)
    throw BudgetError("certify_noninjective_zp: scanning F_" +
                      std::to_string(p) + " exceeds the budget");

  const MultiPoly& poly = f.component(0);
  MultiPoly dpoly = poly.derivative(0);
  PrimePower m1 = PrimePower::make(p, 1);

  // Bucket residues by value mod p; first (c ascending, then b ascending)
  // pair with nonvanishing derivative at both members wins.
  std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, bool>>> buckets;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> pair;
  for (std::uint64_t xv = 0; xv < p && !pair; ++xv) {
    std::vector<mpz_class> pt{mpz_class(static_cast<unsigned long>(xv))};
    std::uint64_t val = eval_map_mod(f, pt, m1)[0].get_ui();
    mpz_class dv = dpoly.eval({Scalar::integer(pt[0])}).as_integer();
    bool simple = (mpz_divisible_ui_p(dv.get_mpz_t(), p) == 0);
    auto& bucket = buckets[val];
    if (simple)
      for (const auto& [b, bsimple] : bucket)
        if (bsimple) {
          pair = {b, xv};
          break;
        }
    bucket.emplace_back(xv, simple);
  }
  if (!pair) return std::nullopt;

  const auto [b, c] = *pair;
  // Exact integer target v = f(b); lift both seeds through f - v.
  mpz_class v =
      poly.eval({Scalar::integer(static_cast<long>(b))}).as_integer();
  MultiPoly shifted = poly - MultiPoly::constant(1, Scalar::integer(v));
  PolyMap g(std::vector<MultiPoly>{shifted});

  PrimePower m3 = PrimePower::make(p, 3);
  ResidueVector seed_b{m1, {mpz_class(static_cast<unsigned long>(b))}};
  ResidueVector seed_c{m1, {mpz_class(static_cast<unsigned long>(c))}};
  ResidueVector lift_b = hensel_lift_vector(g, p, 3, seed_b);
  ResidueVector lift_c = hensel_lift_vector(g, p, 3, seed_c);

  std::vector<mpz_class> vb = eval_map_mod(f, lift_b.entries, m3);
  std::vector<mpz_class> vc = eval_map_mod(f, lift_c.entries, m3);
  if (vb != vc || lift_b == lift_c)
    throw Error("certify_noninjective_zp: certificate failed verification");

  ZpNoninjectivityCertificate cert;
  cert.p = p;
  cert.seed_b = static_cast<unsigned long>(b);
  cert.seed_c = static_cast<unsigned long>(c);
  cert.lift_b = std::move(lift_b);
  cert.lift_c = std::move(lift_c);
  cert.value = std::move(vb);
  cert.exact_target = std::move(v);
  return cert;
}

InjectivityProbe injectivity_probe_mod_pk(const PolyMap& f, std::uint64_t p,
                                          unsigned k, std::uint64_t budget) {
  require_integer_map(f, "injectivity_probe_mod_pk");
  require_prime(p, "injectivity_probe_mod_pk");
  if (k == 0)
    throw PreconditionError("injectivity_probe_mod_pk: k must be >= 1");

  BijectivityEvidence ev = is_bijective_mod(f, p, k, budget);
  InjectivityProbe probe;
  probe.p = p;
  probe.k = k;
  probe.points_checked = ev.points_checked;
  if (ev.collision) {
    probe.status = ProbeStatus::Inconclusive;
    probe.collision = ev.collision;
  } else {
    probe.status = ProbeStatus::InjectiveCertified;
  }
  return probe;
}

// ===========================================================================
// Power-series Hensel lifting (univariate)
// ===========================================================================

namespace {

// Approximate complex roots via the companion matrix of a monic rescale.
std::vector<std::complex<double>> complex_roots(
    const std::vector<std::complex<double>>& coeffs) {
  // coeffs ascending, leading nonzero.
  const int d = static_cast<int>(coeffs.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    if (i + 1 < d) companion(i + 1, i) = 1.0;
    companion(i, d - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs.back();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

double poly_norm(const MultiPoly& r) {
  double norm = 0.0;
  for (const auto& [e, c] : r.terms())
    norm = std::max(norm, std::abs(c.as_complex()));
  return norm;
}

}  // namespace

SeriesLiftResult series_hensel_lift(const MultiPoly& f, const MultiPoly& s,
                                    unsigned K, std::optional<Scalar> base) {
  if (f.nvars() != 1 || s.nvars() != 1)
    throw PreconditionError("series_hensel_lift: inputs must be univariate");
  if (f.total_degree() < 1)
    throw PreconditionError("series_hensel_lift: f must be non-constant");

  const bool complex_mode =
      f.ring().kind == Scalar::Kind::Complex ||
      s.ring().kind == Scalar::Kind::Complex ||
      (base && base->kind() == Scalar::Kind::Complex);
  if (f.ring().kind == Scalar::Kind::Residue ||
      s.ring().kind == Scalar::Kind::Residue)
    throw PreconditionError("series_hensel_lift: residue inputs unsupported");

  CoeffRing ring =
      complex_mode ? CoeffRing::complexes() : CoeffRing::rationals();
  MultiPoly fw = f.to_ring(ring);
  MultiPoly sw = s.to_ring(ring).truncated(K);
  Scalar c0 = sw.constant_term();

  // ---- choose and validate the base root a of f(a) = c0 -------------------
  Scalar a = ring.zero();
  bool have_base = false;
  if (base) {
    a = complex_mode ? base->to_complex() : base->to_rational();
    have_base = true;
  } else if (!complex_mode) {
    MultiPoly shifted = fw - MultiPoly::constant(1, c0);
    for (const auto& root : rational_roots(shifted)) {
      Scalar cand = Scalar::rational(root.value);
      if (!fw.derivative(0).eval({cand}).is_zero()) {
        a = cand;
        have_base = true;
        break;
      }
    }
  }
  if (!have_base) {
    // Approximate route: companion-matrix eigenvalues of f - c0.
    MultiPoly fc = fw.to_ring(CoeffRing::complexes());
    MultiPoly sc = sw.to_ring(CoeffRing::complexes());
    std::vector<std::complex<double>> coeffs;
    for (const auto& sc0 :
         (fc - MultiPoly::constant(1, sc.constant_term())).dense_coeffs())
      coeffs.push_back(sc0.as_complex());
    MultiPoly dfc = fc.derivative(0);
    std::complex<double> best;
    double best_norm = -1.0;
    for (const auto& r : complex_roots(coeffs)) {
      double d = std::abs(dfc.eval({Scalar::complex(r)}).as_complex());
      if (d > best_norm) {
        best_norm = d;
        best = r;
      }
    }
    if (best_norm < 1e-9)
      throw PreconditionError(
          "series_hensel_lift: no nonsingular base root (all roots of f - "
          "s(0) are repeated)");
    ring = CoeffRing::complexes();
    fw = std::move(fc);
    sw = std::move(sc);
    c0 = sw.constant_term();
    a = Scalar::complex(best);
    have_base = true;
  }

  // Validate the base.
  Scalar fa = fw.eval({a});
  Scalar dfa = fw.derivative(0).eval({a});
  if (ring.is_exact()) {
    if (fa != c0)
      throw PreconditionError("series_hensel_lift: base is not a root of "
                              "f(x) = s(0)");
    if (dfa.is_zero())
      throw PreconditionError("series_hensel_lift: base root is singular "
                              "(f'(a) = 0)");
  } else {
    std::complex<double> gap = fa.as_complex() - c0.as_complex();
    if (std::abs(gap) > 1e-8 * (1.0 + std::abs(c0.as_complex())))
      throw PreconditionError("series_hensel_lift: base is not a root of "
                              "f(x) = s(0)");
    if (std::abs(dfa.as_complex()) < 1e-9)
      throw PreconditionError("series_hensel_lift: base root is singular "
                              "(f'(a) = 0)");
  }
  Scalar dfa_inv = dfa.inverse();

  // ---- order-by-order solve ------------------------------------------------
  // sol = a + sum_{j>=1} p_j t^j with f'(a) * p_j = [t^j](s - f(sol_{<j})).
  MultiPoly sol = MultiPoly::constant(1, a);
  for (unsigned j = 1; j <= K; ++j) {
    MultiPoly fsol = fw.subst({sol}, j);  // f(sol) mod t^(j+1)
    Scalar delta = sw.coefficient({j}) - fsol.coefficient({j});
    if (delta.is_zero()) continue;
    sol.add_term({j}, delta * dfa_inv);
  }

  SeriesLiftResult out;
  out.order = K;
  out.base = a;
  out.residual = fw.subst({sol}, K) - sw;
  out.solution = std::move(sol);
  out.exact = ring.is_exact();
  if (out.exact) {
    if (!out.residual.is_zero())
      throw Error("series_hensel_lift: exact residual is nonzero");
    out.residual_norm = 0.0;
  } else {
    out.residual_norm = poly_norm(out.residual);
  }
  return out;
}

}  // namespace polymap
