#include "fdim/reduce.hpp"

namespace fibdim {

Reduction full_dim_reduce(const LatticePolytope& p, const MoveSet& m) {
  if (m.ambient_dim() != p.ambient_dim()) {
    throw InvalidInput("full_dim_reduce: move set and polytope dimensions differ");
  }
  const AffineHull& hull = p.hull();
  if (hull.dimension == p.ambient_dim()) {
    return Reduction{p, m, AffineLatticeMap::identity(p.ambient_dim())};
  }

  const AffineLatticeMap& map = hull.lattice;
  std::vector<Point> generators;
  generators.reserve(p.generators().size());
  for (const auto& g : p.generators()) generators.push_back(map.pull_back(g));

  std::vector<Point> moves;
  for (const auto& mv : m.moves()) {
    // mv lies in the direction lattice iff it is the image of its pull-back
    // under the linear part of the map.
    const Point y = map.pull_back_direction(mv);
    Point back = map.apply(y) - map.offset;
    if (back == mv) moves.push_back(y);
  }
  return Reduction{LatticePolytope(std::move(generators)),
                   validate_move_set(hull.dimension, std::move(moves)), map};
}

}  // namespace fibdim
