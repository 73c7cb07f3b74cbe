#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fdim/graph.hpp"
#include "fdim/lattice.hpp"
#include "fdim/moves.hpp"

namespace fibdim {

/// F(P, M): nodes are P ∩ Z^d in lexicographic order, u ~ v iff u - v in M.
struct FiberGraph {
  Graph graph;
  std::vector<Point> point_of;

  /// Node index of a lattice point, if it is one.
  std::optional<NodeId> node_of(const Point& p) const;
};

/// Throws InvalidInput on a dimension mismatch, CapExceeded beyond limits.
FiberGraph build_fiber_graph(const LatticePolytope& p, const MoveSet& m,
                             const GeometryLimits& limits = {});

/// Same, on an explicit list of lattice points (sorted on return).
FiberGraph fiber_graph_on_points(std::vector<Point> points, const MoveSet& m);

struct MinimalityReport {
  bool minimal = false;
  /// Moves (both signs) that realise no edge.
  std::vector<Point> unused;
};

MinimalityReport is_minimal(const LatticePolytope& p, const MoveSet& m,
                            const GeometryLimits& limits = {});

/// Minimal and F(P, M) connected.
bool is_markov_basis(const LatticePolytope& p, const MoveSet& m,
                     const GeometryLimits& limits = {});

/// Smallest |M| (both signs counted) over Markov bases of P drawn from the
/// pairwise differences of P ∩ Z^d, trying sizes up to `size_cap`. Empty
/// when no Markov basis of size <= size_cap exists.
std::optional<std::size_t> min_markov_basis_size(const LatticePolytope& p,
                                                 std::size_t size_cap,
                                                 const GeometryLimits& limits = {});

struct BipartiteCriterion {
  /// M is a Markov basis of P and |M| = 2 dim(P).
  bool applies = false;
  bool bipartite_confirmed = false;
  /// Whether F(P, M) is bipartite regardless of `applies`.
  bool bipartite = false;
};

/// Throws InternalError if the criterion applies but the graph is not
/// bipartite.
BipartiteCriterion check_bipartite_criterion(const LatticePolytope& p, const MoveSet& m,
                                             const GeometryLimits& limits = {});

}  // namespace fibdim
