#include "polymap/inject_z.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "polymap/rational_roots.hpp"

namespace polymap {

namespace {

mpz_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Cauchy root bound 1 + max |c_i / c_e| for ascending coefficients c with
// nonzero leading entry.
mpq_class cauchy_bound(const std::vector<mpq_class>& c) {
  const std::size_t e = c.size() - 1;
  mpq_class best = 0;
  for (std::size_t i = 0; i < e; ++i) {
    mpq_class r = abs(c[i]) / abs(c[e]);
    if (r > best) best = r;
  }
  return best + 1;
}

// sum_i |a_i| X^i, an upper bound for |f| on [-X, X] (X >= 0).
mpz_class magnitude_bound(const std::vector<mpz_class>& a,
                          const mpz_class& X) {
  mpz_class acc = 0, pw = 1;
  for (const auto& c : a) {
    acc += abs(c) * pw;
    pw *= X;
  }
  return acc;
}

mpz_class eval_mpz(const std::vector<mpz_class>& a, const mpz_class& x) {
  mpz_class v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

std::vector<mpq_class> dense_q(const MultiPoly& p) {
  std::vector<mpq_class> out;
  for (const auto& s : p.dense_coeffs()) out.push_back(s.as_rational());
  return out;
}

// h_t(x) = f(x) - f(t - x); identically zero iff f is symmetric about t/2.
MultiPoly fold_difference(const MultiPoly& fq, const mpq_class& t) {
  CoeffRing ring = CoeffRing::rationals();
  MultiPoly repl = MultiPoly::constant(1, Scalar::rational(t)) -
                   MultiPoly::variable(1, 0, ring);
  return fq - fq.subst({repl});
}

// Smallest window radius so that |x| >= radius forces |f(x)| > bound
// (positive leading coefficient lead, S = sum of the other |a_i|).
mpz_class escape_radius(const mpz_class& S, const mpz_class& bound,
                        const mpz_class& lead) {
  mpq_class r(S + bound + 1, lead);
  r.canonicalize();
  mpz_class m = ceil_q(r);
  return m < 1 ? mpz_class(1) : m;
}

}  // namespace

IntegerInjectivity injectivity_over_Z_univariate(const MultiPoly& f,
                                                 std::uint64_t budget) {
  if (f.nvars() != 1)
    throw PreconditionError(
        "injectivity_over_Z_univariate: polynomial must be univariate");
  if (f.ring().kind != Scalar::Kind::Integer)
    throw PreconditionError(
        "injectivity_over_Z_univariate: coefficients must be integers");

  IntegerInjectivity out;
  const int d = f.total_degree();
  if (d <= 0) {
    // Constant maps collapse everything.
    out.injective = false;
    out.witness = {mpz_class(0), mpz_class(1)};
    return out;
  }
  if (d == 1) {
    out.injective = true;
    return out;
  }

  // Ascending coefficients, normalized to a positive leading coefficient;
  // collisions are invariant under negation.
  std::vector<mpz_class> a;
  for (const auto& s : f.dense_coeffs()) a.push_back(s.as_integer());
  if (a.back() < 0)
    for (auto& c : a) c = -c;
  const mpz_class& lead = a.back();

  auto verified = [&](mpz_class lo, mpz_class hi) {
    if (lo >= hi || eval_mpz(a, lo) != eval_mpz(a, hi))
      throw Error("injectivity_over_Z_univariate: witness verification "
                  "failed");
    out.injective = false;
    out.witness = {std::move(lo), std::move(hi)};
    return out;
  };

  // All real critical points lie in [-B3, B3]; f is strictly monotone on
  // both tails, so any collision straddles the band.
  std::vector<mpq_class> dcoeffs;
  for (std::size_t i = 1; i < a.size(); ++i)
    dcoeffs.emplace_back(mpq_class(static_cast<unsigned long>(i)) *
                         mpq_class(a[i]));
  mpz_class B3 = ceil_q(cauchy_bound(dcoeffs));
  if (B3 < 1) B3 = 1;
  mpz_class W3 = magnitude_bound(a, B3);
  mpz_class S = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) S += abs(a[i]);
  // |x| >= B1 implies |f(x)| > W3, so collisions with small common value
  // stay inside [-B1, B1].
  mpz_class B1 = escape_radius(S, W3, lead);

  mpz_class M;
  if (d % 2 == 1) {
    // Odd degree: both tails increase, so large common values are
    // impossible and the window [-max(B1,B3), ..] is complete.
    M = std::max(B1, B3) + 1;
  } else {
    // Even degree: every collision pair has an integer sum t = a + b, and
    // the tails force t into the open unit interval around
    // t0 = -2 a_{d-1} / (d a_d).  Sums inside that interval are solved
    // exactly; sums outside it bound the pair into a finite window.
    mpq_class t0(-2 * a[a.size() - 2], mpz_class(d) * lead);
    t0.canonicalize();
    mpz_class t0_floor;
    mpz_fdiv_q(t0_floor.get_mpz_t(), t0.get_num().get_mpz_t(),
               t0.get_den().get_mpz_t());
    std::vector<mpz_class> candidates;
    if (t0.get_den() == 1) {
      candidates.push_back(t0_floor);
    } else {
      candidates.push_back(t0_floor);
      candidates.push_back(t0_floor + 1);
    }

    MultiPoly fq = f.to_ring(CoeffRing::rationals());
    for (const auto& t : candidates) {
      MultiPoly h = fold_difference(fq, mpq_class(t));
      if (h.is_zero()) {
        // f is symmetric about t/2: any point pairs with its mirror image.
        mpz_class x0;
        mpz_fdiv_q_ui(x0.get_mpz_t(), t.get_mpz_t(), 2);
        x0 += 1;
        return verified(t - x0, x0);
      }
      for (const auto& root : rational_roots(h)) {
        if (root.value.get_den() != 1) continue;
        mpz_class x = root.value.get_num();
        if (2 * x == t) continue;  // fixed point of the fold, not a pair
        mpz_class y = t - x;
        return verified(std::min(x, y), std::max(x, y));
      }
    }

    // No candidate-sum collision: bound everything else.
    mpq_class Tm = t0 - 1, Tp = t0 + 1;
    mpq_class Xq = cauchy_bound(dense_q(fold_difference(fq, Tm)));
    Xq = std::max(Xq, cauchy_bound(dense_q(fold_difference(fq, Tp))));
    mpq_class abs_tm = abs(Tm), abs_tp = abs(Tp);
    mpq_class band_shift = mpq_class(B3) + std::max(abs_tm, abs_tp);
    Xq = std::max(Xq, band_shift);
    mpz_class X = ceil_q(Xq);
    mpz_class WX = magnitude_bound(a, X);
    mpz_class B5 = escape_radius(S, WX, lead);
    M = std::max(std::max(B1, X), std::max(B5, B3)) + 1;
  }

  // Exhaustive scan of [-M, M].
  mpz_class window = 2 * M + 1;
  if (window > mpz_class(static_cast<unsigned long>(budget)))
    throw BudgetError(
        "injectivity_over_Z_univariate: window of " + window.get_str() +
        " points exceeds the budget of " + std::to_string(budget));
  out.window_lo = -M;
  out.window_hi = M;
  std::map<mpz_class, mpz_class> first_arg;
  for (mpz_class x = -M; x <= M; ++x) {
    ++out.points_checked;
    auto [it, inserted] = first_arg.try_emplace(eval_mpz(a, x), x);
    if (!inserted) return verified(it->second, x);
  }
  out.injective = true;
  return out;
}

bool zloc_membership(const mpq_class& q, std::uint64_t p) {
  if (!is_prime_u64(p))
    throw PreconditionError("zloc_membership: " + std::to_string(p) +
                            " is not prime");
  mpq_class r = q;
  r.canonicalize();
  return mpz_divisible_ui_p(r.get_den().get_mpz_t(),
                            static_cast<unsigned long>(p)) == 0;
}

std::optional<ZlocWitness> rational_noninjectivity_witness(
    const MultiPoly& f, std::uint64_t p, unsigned center_budget) {
  if (f.nvars() != 1)
    throw PreconditionError(
        "rational_noninjectivity_witness: polynomial must be univariate");
  if (f.ring().kind != Scalar::Kind::Integer &&
      f.ring().kind != Scalar::Kind::Rational)
    throw PreconditionError(
        "rational_noninjectivity_witness: coefficients must be rational");
  if (!is_prime_u64(p))
    throw PreconditionError("rational_noninjectivity_witness: " +
                            std::to_string(p) + " is not prime");

  MultiPoly fq = f.to_ring(CoeffRing::rationals());
  auto eval_at = [&](const mpq_class& x) {
    return fq.eval({Scalar::rational(x)}).as_rational();
  };
  if (fq.total_degree() <= 0) {
    // Constant maps collapse everything.
    ZlocWitness w;
    w.p = p;
    w.a = 0;
    w.b = 1;
    w.value = eval_at(0);
    return w;
  }

  // Candidate target values: 0 first, then images of small integer centers.
  std::vector<mpq_class> targets{mpq_class(0)};
  auto push_target = [&](const mpq_class& v) {
    if (std::find(targets.begin(), targets.end(), v) == targets.end())
      targets.push_back(v);
  };
  push_target(eval_at(0));
  for (long c = 1; c <= static_cast<long>(center_budget); ++c) {
    push_target(eval_at(c));
    push_target(eval_at(-c));
  }

  for (const auto& v : targets) {
    MultiPoly g = fq - MultiPoly::constant(1, Scalar::rational(v));
    if (g.is_zero()) continue;  // constant maps are handled by any pair
    std::vector<mpq_class> roots;
    for (const auto& r : rational_roots(g)) roots.push_back(r.value);
    std::sort(roots.begin(), roots.end(),
              [](const mpq_class& x, const mpq_class& y) {
                if (x.get_den() != y.get_den())
                  return x.get_den() < y.get_den();
                return x < y;
              });
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!zloc_membership(roots[i], p)) continue;
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        if (!zloc_membership(roots[j], p)) continue;
        if (eval_at(roots[i]) != eval_at(roots[j]) || roots[i] == roots[j])
          throw Error(
              "rational_noninjectivity_witness: witness verification failed");
        ZlocWitness w;
        w.p = p;
        w.a = roots[i];
        w.b = roots[j];
        w.value = v;
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace polymap
