#pragma once

// PolyMap: a polynomial self-map f = (f_1, ..., f_n) of R^n, all components
// sharing the same variable count n and coefficient ring.

#include <optional>
#include <string>
#include <vector>

#include "polymap/multipoly.hpp"

namespace polymap {

class PolyMap {
public:
  // Square system: components.size() must equal the common nvars.
  explicit PolyMap(std::vector<MultiPoly> components);

  static PolyMap identity(unsigned n, const CoeffRing& ring);

  unsigned dim() const { return static_cast<unsigned>(comps_.size()); }
  const CoeffRing& ring() const { return comps_.front().ring(); }
  const MultiPoly& component(unsigned i) const { return comps_.at(i); }
  const std::vector<MultiPoly>& components() const { return comps_; }

  // Largest total degree over the components (>= 0; constants give 0).
  unsigned max_degree() const;

  std::vector<Scalar> eval(const std::vector<Scalar>& point) const;

  // (*this) o g: substitute g's components into each component of *this.
  PolyMap compose(const PolyMap& g,
                  std::optional<unsigned> max_deg = std::nullopt) const;

  PolyMap to_ring(const CoeffRing& target) const;

  // f - f(0): shift components so the image of the origin is the origin.
  PolyMap minus_constant_terms() const;

  bool operator==(const PolyMap& rhs) const { return comps_ == rhs.comps_; }
  bool operator!=(const PolyMap& rhs) const { return !(*this == rhs); }

private:
  std::vector<MultiPoly> comps_;
};

inline std::vector<Scalar> evaluate(const PolyMap& f,
                                    const std::vector<Scalar>& point) {
  return f.eval(point);
}

// compose(f, g) = f o g (apply g first).
inline PolyMap compose(const PolyMap& f, const PolyMap& g) {
  return f.compose(g);
}

}  // namespace polymap
