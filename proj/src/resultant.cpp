#include "polymap/resultant.hpp"

#include <algorithm>

#include "polymap/detail/modarith.hpp"

namespace polymap {

namespace {

void require_univariate_nonzero(const MultiPoly& f, const char* who) {
  if (f.nvars() != 1)
    throw PreconditionError(std::string(who) +
                            ": polynomial is not univariate");
  if (f.is_zero())
    throw PreconditionError(std::string(who) + ": zero polynomial");
}

}  // namespace

SylvesterMatrix::SylvesterMatrix(const MultiPoly& f, const MultiPoly& g)
    : n_(0), ring_(f.ring()) {
  require_univariate_nonzero(f, "sylvester");
  require_univariate_nonzero(g, "sylvester");
  if (f.ring() != g.ring())
    throw KindError("sylvester: operands over different coefficient rings");
  const auto fc = f.dense_coeffs();  // ascending
  const auto gc = g.dense_coeffs();
  const unsigned df = static_cast<unsigned>(fc.size() - 1);
  const unsigned dg = static_cast<unsigned>(gc.size() - 1);
  n_ = df + dg;
  entries_.assign(static_cast<std::size_t>(n_) * n_, ring_.zero());
  auto put = [&](unsigned i, unsigned j, const Scalar& v) {
    entries_[static_cast<std::size_t>(i) * n_ + j] = v;
  };
  // First dg rows: coefficients of f, descending, shifted right by the row.
  for (unsigned i = 0; i < dg; ++i)
    for (unsigned t = 0; t <= df; ++t) put(i, i + t, fc[df - t]);
  // Remaining df rows: coefficients of g likewise.
  for (unsigned j = 0; j < df; ++j)
    for (unsigned t = 0; t <= dg; ++t) put(dg + j, j + t, gc[dg - t]);
}

Scalar SylvesterMatrix::det() const {
  if (n_ == 0) return ring_.one();  // empty determinant
  // Fraction-free (Bareiss) elimination; every interior division is exact.
  std::vector<Scalar> a = entries_;
  auto at = [&](unsigned i, unsigned j) -> Scalar& {
    return a[static_cast<std::size_t>(i) * n_ + j];
  };
  Scalar prev = ring_.one();
  int sign = 1;
  for (unsigned k = 0; k + 1 < n_; ++k) {
    if (at(k, k).is_zero()) {
      unsigned s = k + 1;
      while (s < n_ && at(s, k).is_zero()) ++s;
      if (s == n_) return ring_.zero();
      for (unsigned j = 0; j < n_; ++j) std::swap(at(k, j), at(s, j));
      sign = -sign;
    }
    for (unsigned i = k + 1; i < n_; ++i) {
      for (unsigned j = k + 1; j < n_; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)).div_exact(prev);
      at(i, k) = ring_.zero();
    }
    prev = at(k, k);
  }
  Scalar det = at(n_ - 1, n_ - 1);
  return sign == 1 ? det : -det;
}

Scalar resultant(const MultiPoly& f, const MultiPoly& g) {
  require_univariate_nonzero(f, "resultant");
  require_univariate_nonzero(g, "resultant");
  if (!f.ring().is_integral_domain())
    throw PreconditionError(
        "resultant: coefficient ring must be an integral domain");
  return SylvesterMatrix(f, g).det();
}

SquarefreeResult is_squarefree(const MultiPoly& f) {
  require_univariate_nonzero(f, "is_squarefree");
  if (f.ring().kind != Scalar::Kind::Integer &&
      f.ring().kind != Scalar::Kind::Rational)
    throw PreconditionError(
        "is_squarefree: requires characteristic-zero coefficients");
  if (f.total_degree() < 1)
    throw PreconditionError("is_squarefree: constant polynomial");
  Scalar res = resultant(f, f.derivative(0));
  return SquarefreeResult{!res.is_zero(), res};
}

std::vector<std::uint64_t> simple_roots_mod_p(const MultiPoly& f,
                                              std::uint64_t p,
                                              std::uint64_t budget) {
  require_univariate_nonzero(f, "simple_roots_mod_p");
  if (f.ring().kind != Scalar::Kind::Integer)
    throw PreconditionError(
        "simple_roots_mod_p: integer coefficients required");
  if (!is_prime_u64(p))
    throw PreconditionError("simple_roots_mod_p: modulus is not prime");
  if (p > budget)
    throw BudgetError("simple_roots_mod_p: scanning F_" + std::to_string(p) +
                      " exceeds the budget of " + std::to_string(budget));

  // Dense coefficients of f and f' reduced mod p, descending for Horner.
  const auto dense = f.dense_coeffs();
  const unsigned d = static_cast<unsigned>(dense.size() - 1);
  std::vector<std::uint64_t> fc(d + 1), dc(d > 0 ? d : 1, 0);
  bool f_vanishes = true;
  mpz_class tmp;
  for (unsigned i = 0; i <= d; ++i) {
    tmp = dense[i].as_integer() % static_cast<unsigned long>(p);
    if (tmp < 0) tmp += static_cast<unsigned long>(p);
    fc[i] = tmp.get_ui();
    if (fc[i] != 0) f_vanishes = false;
    if (i >= 1) dc[i - 1] = detail::mulmod_u64(fc[i], i % p, p);
  }
  if (f_vanishes)
    throw PreconditionError("simple_roots_mod_p: f vanishes mod " +
                            std::to_string(p));

  auto horner = [&](const std::vector<std::uint64_t>& c, std::uint64_t x) {
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;)
      acc = detail::addmod_u64(detail::mulmod_u64(acc, x, p), c[i], p);
    return acc;
  };

  std::vector<std::uint64_t> roots;
  for (std::uint64_t r = 0; r < p; ++r)
    if (horner(fc, r) == 0 && horner(dc, r) != 0) roots.push_back(r);
  return roots;
}

}  // namespace polymap
