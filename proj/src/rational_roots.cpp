#include "polymap/rational_roots.hpp"

#include <algorithm>

namespace polymap {

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  if (n == 0) throw PreconditionError("positive_divisors of zero");
  mpz_class a = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      mpz_class q = a / d;
      if (q != d) large.push_back(q);
    }
  }
  std::reverse(large.begin(), large.end());
  small.insert(small.end(), large.begin(), large.end());
  return small;
}

namespace {

// Dense integer coefficients (ascending), primitive: denominators cleared and
// content divided out.  Sign is irrelevant for root finding.
std::vector<mpz_class> primitive_integer_coeffs(const MultiPoly& p) {
  std::vector<Scalar> dense = p.dense_coeffs();
  mpz_class lcm_den = 1;
  for (const auto& c : dense) {
    if (c.kind() == Scalar::Kind::Rational)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              c.as_rational().get_den().get_mpz_t());
    else if (c.kind() != Scalar::Kind::Integer)
      throw KindError("rational_roots: coefficients must be in Z or Q");
  }
  std::vector<mpz_class> out;
  out.reserve(dense.size());
  for (const auto& c : dense) {
    if (c.kind() == Scalar::Kind::Integer)
      out.push_back(c.as_integer() * lcm_den);
    else
      out.push_back(c.as_rational().get_num() *
                    (lcm_den / c.as_rational().get_den()));
  }
  mpz_class content = 0;
  for (const auto& a : out)
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.get_mpz_t());
  for (auto& a : out) a /= content;
  return out;
}

// Value of (sum a_i x^i) at x = r/s, scaled by s^deg: an exact integer test.
bool is_root(const std::vector<mpz_class>& a, const mpz_class& r,
             const mpz_class& s) {
  mpz_class v = a.back();
  mpz_class spow = 1;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    spow *= s;
    v = v * r + a[i] * spow;
  }
  return v == 0;
}

// Synthetic division of the rational-coefficient polynomial c by (x - q);
// returns true and replaces c by the quotient when the remainder vanishes.
bool deflate(std::vector<mpq_class>& c, const mpq_class& q) {
  std::vector<mpq_class> b(c.size() - 1);
  mpq_class carry = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    b[i] = carry;
    carry = c[i] + q * carry;
  }
  if (carry != 0) return false;
  c = std::move(b);
  return true;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const MultiPoly& p) {
  if (p.nvars() != 1)
    throw PreconditionError("rational_roots: polynomial is not univariate");
  if (p.is_zero())
    throw PreconditionError("rational_roots: zero polynomial");

  std::vector<mpz_class> a = primitive_integer_coeffs(p);
  std::vector<RationalRoot> roots;

  // Root 0: multiplicity = number of trailing zero coefficients.
  unsigned mult0 = 0;
  while (mult0 < a.size() && a[mult0] == 0) ++mult0;
  if (mult0 > 0) {
    roots.push_back({mpq_class(0), mult0});
    a.erase(a.begin(), a.begin() + mult0);
  }
  if (a.size() <= 1) {  // constant remainder: no further roots
    std::sort(roots.begin(), roots.end(),
              [](const RationalRoot& x, const RationalRoot& y) {
                return x.value < y.value;
              });
    return roots;
  }

  std::vector<mpz_class> rs = positive_divisors(a.front());
  std::vector<mpz_class> ss = positive_divisors(a.back());
  std::vector<mpq_class> dense_q;
  dense_q.reserve(a.size());
  for (const auto& ai : a) dense_q.emplace_back(ai);

  for (const auto& s : ss) {
    for (const auto& r : rs) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
      if (g != 1) continue;  // only lowest-terms candidates, no duplicates
      for (int sign : {1, -1}) {
        mpz_class rr = sign * r;
        if (!is_root(a, rr, s)) continue;
        mpq_class q(rr, s);
        q.canonicalize();
        std::vector<mpq_class> work = dense_q;
        unsigned mult = 0;
        while (work.size() > 1 && deflate(work, q)) ++mult;
        roots.push_back({q, mult});
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RationalRoot& x, const RationalRoot& y) {
              return x.value < y.value;
            });
  return roots;
}

}  // namespace polymap
