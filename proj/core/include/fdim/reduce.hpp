#pragma once

#include "fdim/lattice.hpp"
#include "fdim/moves.hpp"

namespace fibdim {

struct Reduction {
  LatticePolytope polytope;
  MoveSet moves;
  /// Reduced coordinates -> original coordinates. Bijective between the
  /// lattice points of the two polytopes.
  AffineLatticeMap map;
};

/// Rewrites (P, M) as a full-dimensional polytope P' ⊂ Q^k, k = dim P, with
/// moves M' such that F(P', M') ≅ F(P, M).
///
/// Integer points of the affine hull are parametrised through the Hermite
/// normal form of its equation matrix (see AffineHull). Moves that do not
/// lie in the direction lattice of the hull can never join two lattice
/// points of P and are dropped. A full-dimensional input is returned
/// unchanged with the identity map.
Reduction full_dim_reduce(const LatticePolytope& p, const MoveSet& m);

}  // namespace fibdim
