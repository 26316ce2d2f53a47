#include "polymap/classify.hpp"

#include <numeric>
#include <sstream>

#include "polymap/parse.hpp"
#include "polymap/rational_roots.hpp"

namespace polymap {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

Verdict classify_over_Z(const PolyMap& f, std::uint64_t prime_bound,
                        std::uint64_t budget) {
  if (f.ring().kind != Scalar::Kind::Integer)
    throw PreconditionError(
        "classify_over_Z: map must have integer coefficients");

  Verdict v;
  v.inv = decide_invertibility(f);
  v.surjective_invertible =
      v.inv.outcome == InvertibilityCertificate::Outcome::Invertible;

  for (std::uint64_t p : primes_up_to(prime_bound)) {
    try {
      v.local_table.push_back(zp_surjectivity_criterion(f, p, budget));
    } catch (const BudgetError&) {
      v.budget_exceeded_primes.push_back(p);
    }
  }
  for (const auto& entry : v.local_table)
    if (!entry.surjective) {
      v.failing_prime = entry.p;
      break;
    }

  // Cross-check the two independent routes: a global inverse forces every
  // local verdict positive, and any local failure forces non-invertibility.
  if (v.surjective_invertible && v.failing_prime)
    throw Error("classify_over_Z: invertible map with a local obstruction at "
                "p = " +
                std::to_string(*v.failing_prime) +
                " — the two decision routes disagree");
  v.consistency_ok = true;
  if (v.surjective_invertible) {
    v.consistency_note =
        "invertible over Z and surjective at all " +
        std::to_string(v.local_table.size()) + " scanned primes";
  } else if (v.failing_prime) {
    v.consistency_note = "not invertible over Z; local obstruction at p = " +
                         std::to_string(*v.failing_prime);
  } else {
    v.consistency_note =
        "not invertible over Z; no local obstruction among primes <= " +
        std::to_string(prime_bound) +
        " (the failing prime can exceed any fixed bound)";
  }
  return v;
}

DiophantineProfile diophantine_profile(const PolyMap& f,
                                       const std::vector<mpz_class>& target,
                                       std::uint64_t prime_bound, unsigned k,
                                       std::uint64_t budget) {
  if (f.ring().kind != Scalar::Kind::Integer)
    throw PreconditionError(
        "diophantine_profile: map must have integer coefficients");
  if (target.size() != f.dim())
    throw DimensionError("diophantine_profile: target dimension mismatch");
  if (k == 0) throw PreconditionError("diophantine_profile: k must be >= 1");

  DiophantineProfile prof;
  prof.all_solvable = true;
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    PrimeSolvability row;
    row.p = p;
    row.k = k;
    try {
      auto sols = solve_system_mod(f, target, p, k, budget);
      row.solvable = !sols.empty();
      row.n_solutions = sols.size();
      if (!sols.empty()) row.example = sols.front();
      if (!row.solvable) prof.all_solvable = false;
    } catch (const BudgetError&) {
      row.budget_exceeded = true;
      prof.any_budget_exceeded = true;
    }
    prof.rows.push_back(std::move(row));
  }

  if (f.dim() == 1) {
    MultiPoly shifted =
        f.component(0) - MultiPoly::constant(1, Scalar::integer(target[0]));
    if (!shifted.is_zero()) {
      for (const auto& root : rational_roots(shifted)) {
        prof.rational_solutions.push_back(root.value);
        if (root.value.get_den() == 1)
          prof.integer_solutions.push_back(root.value.get_num());
      }
    }
  }
  return prof;
}

// ===========================================================================
// Gallery
// ===========================================================================

namespace {

PolyMap gallery_map(const std::string& text) { return parse_map(text).map; }

void note(GalleryCaseResult& r, const std::string& line) {
  r.notes.push_back(line);
}

void check(GalleryCaseResult& r, bool ok, const std::string& what) {
  if (!ok) {
    r.passed = false;
    r.notes.push_back("FAILED: " + what);
  }
}

// f(x) = 2x: surjective at every odd prime, fails exactly at 2 and over Z.
GalleryCaseResult case_2x(std::uint64_t budget) {
  GalleryCaseResult r{"2x", "doubling map: fails exactly at p = 2", true, {}};
  PolyMap f = gallery_map("vars x; f1 = 2*x");
  Verdict v = classify_over_Z(f, 20, budget);
  check(r, !v.surjective_invertible, "2x must not be surjective over Z");
  check(r,
        v.inv.obstruction ==
            InvertibilityCertificate::Obstruction::DeterminantNotUnit,
        "obstruction must be det(Jf) = 2, not a unit");
  check(r, v.failing_prime && *v.failing_prime == 2,
        "first failing prime must be 2");
  for (const auto& entry : v.local_table)
    check(r, entry.surjective == (entry.p != 2),
          "local verdict at p = " + std::to_string(entry.p));
  note(r, "det(Jf) = " + canonical_string(v.inv.det_jacobian, {"x"}));
  note(r, "local table: surjective at every scanned prime except 2");
  return r;
}

// f(x) = 2x^2 + x: surjective over Z_2 (bijective mod 2 with unit Jacobian),
// yet not invertible over Z.
GalleryCaseResult case_px2_plus_x(std::uint64_t budget) {
  GalleryCaseResult r{"px2_plus_x",
                      "2x^2 + x: surjective over Z_2, not over Z", true, {}};
  PolyMap f = gallery_map("vars x; f1 = 2*x^2 + x");
  LocalSurjectivityVerdict local = zp_surjectivity_criterion(f, 2, budget);
  check(r, local.surjective && local.bijective_mod_p && local.det_nonvanishing,
        "2x^2 + x must pass the one-prime criterion at p = 2");
  InvertibilityCertificate inv = decide_invertibility(f);
  check(r,
        inv.outcome == InvertibilityCertificate::Outcome::NotInvertible &&
            inv.obstruction ==
                InvertibilityCertificate::Obstruction::DeterminantNotUnit,
        "2x^2 + x must fail invertibility with non-unit derivative");
  note(r, "f' = " + canonical_string(inv.det_jacobian, {"x"}));
  // Corollary of surjectivity over Z_2: every target is hit mod 8.
  for (long c = 0; c < 8; ++c) {
    auto sols = solve_system_mod(f, {mpz_class(c)}, 2, 3, budget);
    check(r, !sols.empty(),
          "target " + std::to_string(c) + " must be hit mod 8");
  }
  note(r, "all eight targets mod 2^3 have verified preimages");
  return r;
}

// The injectivity non-locality example: x(2x-1)(3x-1) is injective over Z
// but acquires rational collisions inside every localization Z_(p).
GalleryCaseResult case_prop51_cubic(std::uint64_t budget) {
  GalleryCaseResult r{"prop51_cubic",
                      "6x^3 - 5x^2 + x: Z-injective, never Z_(p)-injective",
                      true,
                      {}};
  PolyMap f = gallery_map("vars x; f1 = (2*x-1)*(3*x-1)*x");
  IntegerInjectivity over_z =
      injectivity_over_Z_univariate(f.component(0), budget);
  check(r, over_z.injective, "cubic must be injective over Z");
  note(r, "injective on Z: exhaustive window [" + over_z.window_lo.get_str() +
              ", " + over_z.window_hi.get_str() + "] plus tail bounds");
  for (std::uint64_t p : primes_up_to(100)) {
    auto w = rational_noninjectivity_witness(f.component(0), p);
    check(r, w.has_value(),
          "Z_(" + std::to_string(p) + ") witness must exist");
    if (!w) continue;
    check(r,
          zloc_membership(w->a, p) && zloc_membership(w->b, p) && w->a != w->b,
          "witness members must be distinct and p-integral");
    if (p <= 5)
      note(r, "p = " + std::to_string(p) + ": f(" + w->a.get_str() +
                  ") = f(" + w->b.get_str() + ") = " + w->value.get_str());
  }
  note(r, "witness pairs drawn from the fiber {0, 1/2, 1/3} over 0");
  return r;
}

// x -> x^m on Z_p: injective iff gcd(m, 2(p-1)) = 1, cross-checked against
// finite probes and lifted collision certificates.
GalleryCaseResult case_prop52_powers(std::uint64_t budget) {
  GalleryCaseResult r{"prop52_powers",
                      "power maps x^m on Z_p: gcd(m, 2(p-1)) = 1 table", true,
                      {}};
  unsigned certified = 0, refuted = 0;
  for (unsigned m = 1; m <= 15; ++m) {
    MultiPoly xm(1, CoeffRing::integers());
    xm.add_term({m}, Scalar::integer(1));
    PolyMap f(std::vector<MultiPoly>{xm});
    for (std::uint64_t p : primes_up_to(50)) {
      bool formula = power_map_injectivity(m, p);
      bool independent =
          std::gcd<unsigned long long, unsigned long long>(m, 2 * (p - 1)) ==
          1;
      check(r, formula == independent,
            "gcd formula at m = " + std::to_string(m) +
                ", p = " + std::to_string(p));
      if (m % p == 0) continue;  // derivative collapses mod p; probes blind
      if (formula) {
        InjectivityProbe probe = injectivity_probe_mod_pk(f, p, 1, budget);
        check(r, probe.status == ProbeStatus::InjectiveCertified,
              "probe mod p must certify injective entries (m = " +
                  std::to_string(m) + ", p = " + std::to_string(p) + ")");
        ++certified;
      } else {
        auto cert = certify_noninjective_zp(f, p, budget);
        check(r, cert.has_value(),
              "collision certificate must exist (m = " + std::to_string(m) +
                  ", p = " + std::to_string(p) + ")");
        ++refuted;
      }
    }
  }
  note(r, std::to_string(certified) +
              " injective entries certified by mod-p probes, " +
              std::to_string(refuted) +
              " non-injective entries certified by lifted collisions");
  return r;
}

// (x^2-13)(x^2-17)(x^2-221): no rational root, yet a root mod every modulus.
GalleryCaseResult case_bs_polynomial(std::uint64_t budget) {
  GalleryCaseResult r{"bs_polynomial",
                      "(x^2-13)(x^2-17)(x^2-221): roots mod every m, none in Q",
                      true,
                      {}};
  PolyMap f = gallery_map("vars x; f1 = (x^2-13)*(x^2-17)*(x^2-221)");
  check(r, rational_roots(f.component(0)).empty(),
        "polynomial must have no rational root");
  const std::uint64_t bound = 2000;
  unsigned rows = 0;
  for (std::uint64_t p : primes_up_to(bound)) {
    unsigned e = 0;
    std::uint64_t pe = 1;
    while (pe <= bound / p) {
      pe *= p;
      ++e;
    }
    auto sols = solve_system_mod(f, {mpz_class(0)}, p, e, budget);
    check(r, !sols.empty(),
          "root needed mod " + std::to_string(p) + "^" + std::to_string(e));
    ++rows;
  }
  note(r, "verified roots mod p^e at the maximal prime power p^e <= 2000 for "
          "all " +
              std::to_string(rows) + " primes p <= 2000");
  note(r, "every m <= 2000 factors into such prime powers, so the Chinese "
          "remainder theorem supplies a root mod m");
  return r;
}

// Solving x^3 - 3x = s(t) in Q[[t]] by order-by-order Newton steps.
GalleryCaseResult case_example31_series(std::uint64_t) {
  GalleryCaseResult r{"example31_series",
                      "series solutions of x^3 - 3x = s(t)", true, {}};
  MultiPoly f = parse_polynomial("x^3 - 3*x", {"x"});
  MultiPoly s_t = parse_polynomial("t", {"t"});
  SeriesLiftResult lift = series_hensel_lift(f, s_t, 10);
  check(r, lift.exact && lift.residual.is_zero(),
        "target s = t must lift exactly to order 10");
  check(r, lift.base == Scalar::rational(mpq_class(0)),
        "base root of x^3 - 3x = 0 must be 0");
  check(r,
        lift.solution.coefficient({1}) ==
            Scalar::rational(mpq_class(-1, 3)),
        "t-coefficient must be -1/3");
  check(r,
        lift.solution.coefficient({3}) ==
            Scalar::rational(mpq_class(-1, 81)),
        "t^3-coefficient must be -1/81");
  note(r, "p(t) = " + canonical_string(lift.solution, {"t"}));

  MultiPoly s_2 = parse_polynomial("2", {"t"});
  SeriesLiftResult constant = series_hensel_lift(f, s_2, 10);
  check(r, constant.exact && constant.residual.is_zero(),
        "constant target 2 must lift exactly");
  check(r, constant.base == Scalar::rational(mpq_class(2)),
        "base must avoid the repeated root -1 and pick 2");
  check(r, constant.solution == MultiPoly::constant(
                                    1, Scalar::rational(mpq_class(2))),
        "solution for constant target must be the constant 2");
  note(r, "constant target 2 solved by p = 2 (the repeated root -1 is "
          "rejected since f'(-1) = 0)");
  return r;
}

// (2x+1)(3x+1): solvable mod every prime power, no integer solution.
GalleryCaseResult case_intro_counterexample(std::uint64_t budget) {
  GalleryCaseResult r{"intro_counterexample",
                      "(2x+1)(3x+1) = 0: solvable mod all p^k, no integer root",
                      true,
                      {}};
  PolyMap f = gallery_map("vars x; f1 = (2*x+1)*(3*x+1)");
  DiophantineProfile prof =
      diophantine_profile(f, {mpz_class(0)}, 50, 3, budget);
  check(r, prof.all_solvable && !prof.any_budget_exceeded,
        "target 0 must be solvable mod p^3 for every p <= 50");
  check(r, prof.integer_solutions.empty(), "no integer root may exist");
  check(r,
        prof.rational_solutions.size() == 2 &&
            prof.rational_solutions[0] == mpq_class(-1, 2) &&
            prof.rational_solutions[1] == mpq_class(-1, 3),
        "rational roots must be exactly -1/2 and -1/3");
  note(r, "local solutions exist at every prime (one of the factors is a "
          "p-adic unit times a linear unit equation), yet both rational "
          "roots have denominators > 1");
  return r;
}

}  // namespace

std::vector<GalleryCaseResult> run_gallery(const std::string& which,
                                           std::uint64_t budget) {
  struct Entry {
    const char* name;
    GalleryCaseResult (*fn)(std::uint64_t);
  };
  static const Entry entries[] = {
      {"2x", case_2x},
      {"px2_plus_x", case_px2_plus_x},
      {"prop51_cubic", case_prop51_cubic},
      {"prop52_powers", case_prop52_powers},
      {"bs_polynomial", case_bs_polynomial},
      {"example31_series", case_example31_series},
      {"intro_counterexample", case_intro_counterexample},
  };

  std::vector<GalleryCaseResult> out;
  bool matched = false;
  for (const auto& e : entries) {
    if (which == "all" || which == e.name) {
      out.push_back(e.fn(budget));
      matched = true;
    }
  }
  if (!matched)
    throw PreconditionError("run_gallery: unknown case \"" + which +
                            "\" (try: all, 2x, px2_plus_x, prop51_cubic, "
                            "prop52_powers, bs_polynomial, example31_series, "
                            "intro_counterexample)");
  return out;
}

}  // namespace polymap
