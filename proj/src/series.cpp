#include "polymap/series.hpp"

#include <algorithm>

namespace polymap {

NonIntegerCoefficientError::NonIntegerCoefficientError(unsigned component,
                                                       Exponents monomial,
                                                       mpq_class coefficient)
    : Error("series inverse leaves Z: coefficient " + coefficient.get_str() +
            " in component " + std::to_string(component)),
      component_(component),
      monomial_(std::move(monomial)),
      coefficient_(std::move(coefficient)) {}

TruncatedSeriesMap::TruncatedSeriesMap(unsigned cutoff,
                                       std::vector<MultiPoly> components)
    : cutoff_(cutoff) {
  if (components.empty())
    throw DimensionError("series map needs at least one component");
  comps_.reserve(components.size());
  for (auto& c : components) comps_.push_back(c.truncated(cutoff));
}

namespace {

// Gauss-Jordan inverse over Q; nullopt when singular.  Row-major n x n.
std::optional<std::vector<mpq_class>> invert_rational_matrix(
    unsigned n, std::vector<mpq_class> a) {
  std::vector<mpq_class> inv(static_cast<std::size_t>(n) * n, mpq_class(0));
  for (unsigned i = 0; i < n; ++i)
    inv[static_cast<std::size_t>(i) * n + i] = 1;
  auto A = [&](unsigned i, unsigned j) -> mpq_class& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  auto B = [&](unsigned i, unsigned j) -> mpq_class& {
    return inv[static_cast<std::size_t>(i) * n + j];
  };
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && A(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) {
        std::swap(A(pivot, j), A(col, j));
        std::swap(B(pivot, j), B(col, j));
      }
    }
    mpq_class d = A(col, col);
    for (unsigned j = 0; j < n; ++j) {
      A(col, j) /= d;
      B(col, j) /= d;
    }
    for (unsigned i = 0; i < n; ++i) {
      if (i == col || A(i, col) == 0) continue;
      mpq_class factor = A(i, col);
      for (unsigned j = 0; j < n; ++j) {
        A(i, j) -= factor * A(col, j);
        B(i, j) -= factor * B(col, j);
      }
    }
  }
  return inv;
}

// Linear-part matrix of f: entry (i, j) is the coefficient of x_j in f_i.
std::vector<Scalar> linear_part(const PolyMap& f) {
  const unsigned n = f.dim();
  std::vector<Scalar> L;
  L.reserve(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[j] = 1;
      L.push_back(f.component(i).coefficient(e));
    }
  }
  return L;
}

// Terms of total degree >= 2 of each component.
std::vector<MultiPoly> higher_part(const PolyMap& f) {
  std::vector<MultiPoly> h;
  h.reserve(f.dim());
  for (unsigned i = 0; i < f.dim(); ++i) {
    MultiPoly hi(f.dim(), f.ring());
    for (const auto& [e, c] : f.component(i).terms())
      if (exponents_degree(e) >= 2) hi.add_term(e, c);
    h.push_back(std::move(hi));
  }
  return h;
}

// Throw the first (component-major, graded-lex) non-integer coefficient.
[[noreturn]] void report_non_integer(const TruncatedSeriesMap& g) {
  for (unsigned i = 0; i < g.dim(); ++i)
    for (const auto& [e, c] : g.component(i).terms())
      if (c.as_rational().get_den() != 1)
        throw NonIntegerCoefficientError(i, e, c.as_rational());
  throw Error("report_non_integer called on an integral series");
}

TruncatedSeriesMap formal_inverse_impl(const PolyMap& f, unsigned D) {
  const unsigned n = f.dim();
  const CoeffRing& ring = f.ring();

  for (unsigned i = 0; i < n; ++i)
    if (!f.component(i).constant_term().is_zero())
      throw BasePointError("formal_inverse requires f(0) = 0 (component " +
                           std::to_string(i) + " has constant term " +
                           f.component(i).constant_term().str() + ")");

  // Invert the linear part over Q.
  std::vector<Scalar> L = linear_part(f);
  std::vector<mpq_class> Lq;
  Lq.reserve(L.size());
  for (const auto& s : L) Lq.push_back(s.to_rational().as_rational());
  auto Linv_q = invert_rational_matrix(n, std::move(Lq));
  if (!Linv_q)
    throw NonInvertibleLinearPartError(
        "formal_inverse: det((Jf)(0)) = 0, linear part not invertible");

  if (ring.kind == Scalar::Kind::Integer) {
    bool integral = true;
    for (const auto& q : *Linv_q)
      if (q.get_den() != 1) integral = false;
    if (!integral) {
      // det((Jf)(0)) is invertible over Q but not over Z: compute the series
      // over Q and report the first coefficient outside Z.
      TruncatedSeriesMap gq =
          formal_inverse_impl(f.to_ring(CoeffRing::rationals()), D);
      report_non_integer(gq);
    }
  }

  // Materialize L^-1 in the working ring.
  std::vector<Scalar> Linv;
  Linv.reserve(Linv_q->size());
  for (const auto& q : *Linv_q) {
    Scalar s = Scalar::rational(q);
    Linv.push_back(ring.kind == Scalar::Kind::Integer ? s.to_integer() : s);
  }
  auto Li = [&](unsigned i, unsigned j) -> const Scalar& {
    return Linv[static_cast<std::size_t>(i) * n + j];
  };

  std::vector<MultiPoly> h = higher_part(f);

  // Apply L^-1 to a vector of polynomials.
  auto apply_Linv = [&](const std::vector<MultiPoly>& v) {
    std::vector<MultiPoly> out;
    out.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
      MultiPoly acc(n, ring);
      for (unsigned j = 0; j < n; ++j)
        if (!Li(i, j).is_zero()) acc = acc + v[j].scaled(Li(i, j));
      out.push_back(std::move(acc));
    }
    return out;
  };

  // g_0 = L^-1 x is correct to degree 1; each fixed-point pass
  // g <- L^-1 (x - h(g)) gains at least one further degree.
  std::vector<MultiPoly> xs;
  for (unsigned i = 0; i < n; ++i)
    xs.push_back(MultiPoly::variable(n, i, ring));
  std::vector<MultiPoly> g = apply_Linv(xs);
  for (unsigned pass = 2; pass <= D; ++pass) {
    std::vector<MultiPoly> rhs;
    rhs.reserve(n);
    for (unsigned i = 0; i < n; ++i)
      rhs.push_back(xs[i] - h[i].subst(g, D));
    std::vector<MultiPoly> next = apply_Linv(rhs);
    if (next == g) break;  // stabilized: exact polynomial inverse
    g = std::move(next);
  }
  return TruncatedSeriesMap(D, std::move(g));
}

}  // namespace

TruncatedSeriesMap formal_inverse(const PolyMap& f, unsigned D) {
  if (f.ring().kind != Scalar::Kind::Integer &&
      f.ring().kind != Scalar::Kind::Rational)
    throw PreconditionError("formal_inverse: coefficients must be Z or Q");
  if (D == 0) throw PreconditionError("formal_inverse: cutoff must be >= 1");
  return formal_inverse_impl(f, D);
}

bool is_unit_polynomial(const MultiPoly& p) {
  if (!p.ring().is_integral_domain())
    throw PreconditionError(
        "is_unit_polynomial: requires an integral-domain coefficient ring");
  return p.is_constant() && p.constant_term().is_unit();
}

namespace {

// d^(n-1) with a sanity cap; the classical bound on inverse degree.
unsigned inverse_degree_bound(unsigned d, unsigned n) {
  if (d == 0) d = 1;
  unsigned long bound = 1;
  for (unsigned i = 1; i < n; ++i) {
    bound *= d;
    if (bound > 1u << 20)
      throw BudgetError(
          "decide_invertibility: inverse degree bound d^(n-1) too large");
  }
  return static_cast<unsigned>(std::max(1ul, bound));
}

}  // namespace

InvertibilityCertificate decide_invertibility(const PolyMap& f) {
  if (f.ring().kind != Scalar::Kind::Integer &&
      f.ring().kind != Scalar::Kind::Rational)
    throw PreconditionError(
        "decide_invertibility: coefficients must be Z or Q");

  InvertibilityCertificate cert{.outcome =
                                    InvertibilityCertificate::Outcome::NotInvertible,
                                .inverse = std::nullopt,
                                .obstruction =
                                    InvertibilityCertificate::Obstruction::None,
                                .det_jacobian = det_poly(jacobian_matrix(f)),
                                .offending_coefficient = std::nullopt,
                                .offending_monomial = std::nullopt,
                                .offending_component = std::nullopt,
                                .residual = std::nullopt,
                                .degree_bound = 0};

  // Cor 2.4 (ii) => (iii): an invertible map has det(Jf) a unit constant.
  if (!is_unit_polynomial(cert.det_jacobian)) {
    cert.obstruction =
        InvertibilityCertificate::Obstruction::DeterminantNotUnit;
    return cert;
  }

  const unsigned n = f.dim();
  cert.degree_bound = inverse_degree_bound(f.max_degree(), n);

  // Translate so the basepoint maps to the origin: f = ft + f(0).
  std::vector<Scalar> f0 = f.eval(std::vector<Scalar>(n, f.ring().zero()));
  PolyMap ft = f.minus_constant_terms();

  std::optional<TruncatedSeriesMap> gt_series;
  try {
    gt_series = formal_inverse_impl(ft, cert.degree_bound);
  } catch (const NonIntegerCoefficientError& e) {
    // Unreachable after the unit-determinant gate (det = +-1 keeps every
    // series division in Z), but folded into the certificate for safety.
    cert.obstruction =
        InvertibilityCertificate::Obstruction::NonIntegerCoefficient;
    cert.offending_coefficient = e.coefficient();
    cert.offending_monomial = e.monomial();
    cert.offending_component = e.component();
    return cert;
  }

  // Candidate inverse of f itself: g(x) = gt(x - f(0)).
  std::vector<MultiPoly> shift;
  shift.reserve(n);
  for (unsigned i = 0; i < n; ++i)
    shift.push_back(MultiPoly::variable(n, i, f.ring()) -
                    MultiPoly::constant(n, f0[i]));
  PolyMap g = gt_series->to_polymap().compose(PolyMap(std::move(shift)));

  // Exact two-sided verification.
  PolyMap id = PolyMap::identity(n, f.ring());
  PolyMap fg = f.compose(g);
  PolyMap gf = g.compose(f);
  if (fg == id && gf == id) {
    cert.outcome = InvertibilityCertificate::Outcome::Invertible;
    cert.inverse = std::move(g);
    return cert;
  }
  // The degree bound is a theorem for polynomial automorphisms, so a failed
  // verification certifies there is no polynomial inverse at all.
  cert.obstruction =
      InvertibilityCertificate::Obstruction::NoPolynomialInverse;
  for (unsigned i = 0; i < n; ++i) {
    MultiPoly r = fg.component(i) - id.component(i);
    if (!r.is_zero()) {
      cert.residual = std::move(r);
      break;
    }
  }
  if (!cert.residual) {
    for (unsigned i = 0; i < n; ++i) {
      MultiPoly r = gf.component(i) - id.component(i);
      if (!r.is_zero()) {
        cert.residual = std::move(r);
        break;
      }
    }
  }
  return cert;
}

}  // namespace polymap
