#include "polymap/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace polymap {

// ===========================================================================
// Construction
// ===========================================================================

MultiPoly MultiPoly::constant(unsigned nvars, const Scalar& c) {
  CoeffRing ring;
  ring.kind = c.kind();
  if (c.kind() == Scalar::Kind::Residue) ring.mod = c.residue_modulus();
  MultiPoly p(nvars, ring);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned index,
                              const CoeffRing& ring) {
  if (index >= nvars)
    throw DimensionError("variable index " + std::to_string(index) +
                         " out of range for " + std::to_string(nvars) +
                         " variables");
  MultiPoly p(nvars, ring);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, ring.one());
  return p;
}

// ===========================================================================
// Inspection
// ===========================================================================

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && exponents_degree(terms_.begin()->first) == 0;
}

Scalar MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  if (it == terms_.end()) return ring_.zero();
  return it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Leading (first) term has maximal total degree under grlex-descending.
  return static_cast<int>(exponents_degree(terms_.begin()->first));
}

int MultiPoly::degree_in(unsigned var) const {
  if (var >= nvars_) throw DimensionError("degree_in: variable out of range");
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(e[var]));
  return d;
}

Scalar MultiPoly::coefficient(const Exponents& e) const {
  if (e.size() != nvars_)
    throw DimensionError("coefficient: exponent vector of wrong length");
  auto it = terms_.find(e);
  if (it == terms_.end()) return ring_.zero();
  return it->second;
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != nvars_)
    throw DimensionError("add_term: exponent vector of wrong length");
  if (!ring_.accepts(c))
    throw KindError("add_term: coefficient " + c.str() +
                    " not in coefficient ring " + ring_.str());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& rhs, const char* op) const {
  if (nvars_ != rhs.nvars_)
    throw DimensionError(std::string("'") + op +
                         "' on polynomials with different variable counts");
  if (ring_ != rhs.ring_)
    throw KindError(std::string("'") + op +
                    "' on polynomials over different coefficient rings (" +
                    ring_.str() + " vs " + rhs.ring_.str() + ")");
}

// ===========================================================================
// Arithmetic
// ===========================================================================

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  check_compatible(rhs, "+");
  MultiPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
  check_compatible(rhs, "-");
  MultiPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(nvars_, ring_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  check_compatible(rhs, "*");
  MultiPoly out(nvars_, ring_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(nvars_);
      for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::mul_truncated(const MultiPoly& rhs,
                                   unsigned max_deg) const {
  check_compatible(rhs, "*");
  MultiPoly out(nvars_, ring_);
  for (const auto& [ea, ca] : terms_) {
    unsigned da = exponents_degree(ea);
    if (da > max_deg) continue;
    for (const auto& [eb, cb] : rhs.terms_) {
      if (da + exponents_degree(eb) > max_deg) continue;
      Exponents e(nvars_);
      for (unsigned i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  return nvars_ == rhs.nvars_ && ring_ == rhs.ring_ && terms_ == rhs.terms_;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  if (!ring_.accepts(c))
    throw KindError("scaled: scalar not in coefficient ring");
  MultiPoly out(nvars_, ring_);
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e, std::optional<unsigned> max_deg) const {
  MultiPoly result = constant(nvars_, ring_.one());
  MultiPoly base = max_deg ? truncated(*max_deg) : *this;
  while (e > 0) {
    if (e & 1)
      result = max_deg ? result.mul_truncated(base, *max_deg) : result * base;
    e >>= 1;
    if (e > 0)
      base = max_deg ? base.mul_truncated(base, *max_deg) : base * base;
  }
  return result;
}

MultiPoly MultiPoly::truncated(unsigned max_deg) const {
  MultiPoly out(nvars_, ring_);
  for (const auto& [e, c] : terms_)
    if (exponents_degree(e) <= max_deg) out.terms_.emplace(e, c);
  return out;
}

MultiPoly MultiPoly::derivative(unsigned var) const {
  if (var >= nvars_)
    throw DimensionError("derivative: variable index out of range");
  MultiPoly out(nvars_, ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * ring_.from_int(static_cast<long>(e[var])));
  }
  return out;
}

// ===========================================================================
// Evaluation and substitution
// ===========================================================================

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_)
    throw DimensionError("eval: point has wrong dimension");
  for (const auto& v : point)
    if (!ring_.accepts(v))
      throw KindError("eval: point coordinate " + v.str() +
                      " not in coefficient ring " + ring_.str());
  // Cache powers of each coordinate up to the needed degree.
  std::vector<std::vector<Scalar>> pows(nvars_);
  for (unsigned i = 0; i < nvars_; ++i) {
    int d = degree_in(i);
    pows[i].reserve(d + 1);
    pows[i].push_back(ring_.one());
    for (int j = 1; j <= d; ++j) pows[i].push_back(pows[i].back() * point[i]);
  }
  Scalar acc = ring_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (unsigned i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= pows[i][e[i]];
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::subst(const std::vector<MultiPoly>& repl,
                           std::optional<unsigned> max_deg) const {
  if (repl.size() != nvars_)
    throw DimensionError("subst: expected one replacement per variable");
  if (nvars_ == 0) return *this;
  const unsigned out_nvars = repl[0].nvars();
  const CoeffRing& out_ring = repl[0].ring();
  for (const auto& r : repl) {
    if (r.nvars() != out_nvars || r.ring() != out_ring)
      throw DimensionError("subst: replacements disagree in shape or ring");
  }
  if (out_ring != ring_)
    throw KindError("subst: replacement ring differs from coefficient ring");

  // Cache repl[i]^j for the powers that actually occur.
  std::vector<std::vector<MultiPoly>> pows(nvars_);
  for (unsigned i = 0; i < nvars_; ++i) {
    int d = degree_in(i);
    pows[i].reserve(d + 1);
    pows[i].push_back(MultiPoly::constant(out_nvars, out_ring.one()));
    for (int j = 1; j <= d; ++j) {
      MultiPoly next = max_deg ? pows[i].back().mul_truncated(repl[i], *max_deg)
                               : pows[i].back() * repl[i];
      pows[i].push_back(std::move(next));
    }
  }
  MultiPoly acc(out_nvars, out_ring);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(out_nvars, c);
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      t = max_deg ? t.mul_truncated(pows[i][e[i]], *max_deg)
                  : t * pows[i][e[i]];
    }
    acc = acc + t;
  }
  return acc;
}

// ===========================================================================
// Ring conversion
// ===========================================================================

MultiPoly MultiPoly::to_ring(const CoeffRing& target) const {
  if (target == ring_) return *this;
  MultiPoly out(nvars_, target);
  for (const auto& [e, c] : terms_) {
    Scalar converted = ring_.zero();
    switch (target.kind) {
      case Scalar::Kind::Rational: converted = c.to_rational(); break;
      case Scalar::Kind::Integer: converted = c.to_integer(); break;
      case Scalar::Kind::Residue: converted = c.reduce_mod(*target.mod); break;
      case Scalar::Kind::Complex: converted = c.to_complex(); break;
    }
    out.add_term(e, converted);  // may vanish (e.g. reduction mod p^k)
  }
  return out;
}

// ===========================================================================
// Univariate helpers
// ===========================================================================

std::vector<Scalar> MultiPoly::dense_coeffs() const {
  if (nvars_ != 1)
    throw PreconditionError("dense_coeffs: polynomial is not univariate");
  int d = total_degree();
  std::vector<Scalar> out(static_cast<std::size_t>(d < 0 ? 0 : d + 1),
                          ring_.zero());
  for (const auto& [e, c] : terms_) out[e[0]] = c;
  return out;
}

MultiPoly MultiPoly::from_dense_coeffs(const std::vector<Scalar>& coeffs,
                                       const CoeffRing& ring) {
  MultiPoly p(1, ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term({static_cast<unsigned>(i)}, coeffs[i]);
  return p;
}

// ===========================================================================
// Printing
// ===========================================================================

namespace {

std::string monomial_string(const Exponents& e,
                            const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// |c| as a printable string plus a negativity flag.  Residues and complexes
// are never split into sign and magnitude.
std::pair<std::string, bool> magnitude(const Scalar& c) {
  switch (c.kind()) {
    case Scalar::Kind::Integer: {
      const mpz_class& v = c.as_integer();
      if (v < 0) return {mpz_class(-v).get_str(), true};
      return {v.get_str(), false};
    }
    case Scalar::Kind::Rational: {
      const mpq_class& v = c.as_rational();
      if (v < 0) return {mpq_class(-v).get_str(), true};
      return {v.get_str(), false};
    }
    default: return {c.str(), false};
  }
}

}  // namespace

std::string canonical_string(const MultiPoly& p,
                             const std::vector<std::string>& var_names) {
  if (var_names.size() != p.nvars())
    throw DimensionError("canonical_string: wrong number of variable names");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    auto [mag, negative] = magnitude(c);
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    std::string mono = monomial_string(e, var_names);
    if (mono.empty()) {
      os << mag;
    } else if (mag == "1") {
      os << mono;
    } else {
      os << mag << "*" << mono;
    }
  }
  return os.str();
}

// ===========================================================================
// Exact division
// ===========================================================================

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw PreconditionError("divide_exact: division by zero");
  if (a.nvars() != b.nvars() || a.ring() != b.ring())
    throw DimensionError("divide_exact: incompatible operands");
  MultiPoly q(a.nvars(), a.ring());
  MultiPoly r = a;
  const auto& lead_b = *b.terms().begin();
  while (!r.is_zero()) {
    const auto& lead_r = *r.terms().begin();
    Exponents e(a.nvars());
    for (unsigned i = 0; i < a.nvars(); ++i) {
      if (lead_r.first[i] < lead_b.first[i])
        throw PreconditionError("divide_exact: not divisible");
      e[i] = lead_r.first[i] - lead_b.first[i];
    }
    Scalar c = lead_r.second.div_exact(lead_b.second);
    MultiPoly t(a.nvars(), a.ring());
    t.add_term(e, c);
    q = q + t;
    r = r - t * b;
    // Each step strictly lowers the leading monomial, so this terminates.
  }
  return q;
}

}  // namespace polymap
