#include "polymap/polymap.hpp"

#include <algorithm>

namespace polymap {

PolyMap::PolyMap(std::vector<MultiPoly> components)
    : comps_(std::move(components)) {
  if (comps_.empty())
    throw DimensionError("a polynomial map needs at least one component");
  const unsigned n = comps_.front().nvars();
  const CoeffRing& ring = comps_.front().ring();
  if (comps_.size() != n)
    throw DimensionError("non-square system: " +
                         std::to_string(comps_.size()) + " components in " +
                         std::to_string(n) + " variables");
  for (const auto& c : comps_) {
    if (c.nvars() != n)
      throw DimensionError("components disagree on variable count");
    if (c.ring() != ring)
      throw KindError("components live over different coefficient rings");
  }
}

PolyMap PolyMap::identity(unsigned n, const CoeffRing& ring) {
  std::vector<MultiPoly> comps;
  comps.reserve(n);
  for (unsigned i = 0; i < n; ++i)
    comps.push_back(MultiPoly::variable(n, i, ring));
  return PolyMap(std::move(comps));
}

unsigned PolyMap::max_degree() const {
  int d = 0;
  for (const auto& c : comps_) d = std::max(d, c.total_degree());
  return static_cast<unsigned>(std::max(d, 0));
}

std::vector<Scalar> PolyMap::eval(const std::vector<Scalar>& point) const {
  std::vector<Scalar> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.eval(point));
  return out;
}

PolyMap PolyMap::compose(const PolyMap& g,
                         std::optional<unsigned> max_deg) const {
  if (g.dim() != dim())
    throw DimensionError("compose: maps have different dimensions");
  std::vector<MultiPoly> comps;
  comps.reserve(comps_.size());
  for (const auto& c : comps_)
    comps.push_back(c.subst(g.comps_, max_deg));
  return PolyMap(std::move(comps));
}

PolyMap PolyMap::to_ring(const CoeffRing& target) const {
  std::vector<MultiPoly> comps;
  comps.reserve(comps_.size());
  for (const auto& c : comps_) comps.push_back(c.to_ring(target));
  return PolyMap(std::move(comps));
}

PolyMap PolyMap::minus_constant_terms() const {
  std::vector<MultiPoly> comps;
  comps.reserve(comps_.size());
  for (const auto& c : comps_)
    comps.push_back(c - MultiPoly::constant(c.nvars(), c.constant_term()));
  return PolyMap(std::move(comps));
}

}  // namespace polymap
