#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdim/graph.hpp"
#include "fdim/lattice.hpp"
#include "fdim/moves.hpp"

namespace fibdim {

enum class EmbeddingMethod {
  simplex,
  chromatic,
  product,
  apex,
  cycle,
  difference,
  complete_multipartite,
  dps,
  exhaustive_search,
};

std::string_view to_string(EmbeddingMethod method);
std::optional<EmbeddingMethod> parse_embedding_method(std::string_view name);

/// Enumeration caps used when certifying embeddings. Wider than the plain
/// defaults: a simplex embedding of an n-node graph lives in dimension n - 1.
inline constexpr GeometryLimits kEmbeddingLimits{16, std::uint64_t{1} << 22};

struct EmbeddingCheck {
  bool ok = false;
  std::string reason;
};

/// Checks that F(p, m) ≅ g via `vertex_map` (node -> lattice point): the
/// lattice points of p are exactly the images, and u ~ v iff
/// vertex_map[u] - vertex_map[v] in m. Also requires p to be full-dimensional.
EmbeddingCheck verify_embedding(const Graph& g, const LatticePolytope& p, const MoveSet& m,
                                std::span<const Point> vertex_map,
                                const GeometryLimits& limits = kEmbeddingLimits);

/// A certificate G ≅ F(P, M) with P full-dimensional in its ambient space,
/// so ambient_dim() bounds fdim(G) from above.
class Embedding {
 public:
  /// Validates `moves` (plus their negatives), reduces (P, M) to full
  /// dimension, transports `node_points` through the reduction and verifies
  /// the result. Throws MoveSetError for invalid moves and InternalError if
  /// the construction does not reproduce `g`.
  static Embedding construct(Graph g, std::vector<Point> node_points,
                             std::vector<Point> moves, std::vector<Point> generators,
                             EmbeddingMethod method,
                             const GeometryLimits& limits = kEmbeddingLimits);

  const Graph& graph() const { return graph_; }
  const LatticePolytope& polytope() const { return polytope_; }
  const MoveSet& moves() const { return moves_; }
  /// vertex_map()[u] is the lattice point of node u.
  const std::vector<Point>& vertex_map() const { return vertex_map_; }
  EmbeddingMethod method() const { return method_; }
  std::size_t dimension() const { return polytope_.ambient_dim(); }

 private:
  Embedding(Graph g, LatticePolytope p, MoveSet m, std::vector<Point> vertex_map,
            EmbeddingMethod method);

  Graph graph_;
  LatticePolytope polytope_;
  MoveSet moves_;
  std::vector<Point> vertex_map_;
  EmbeddingMethod method_;
};

/// Simplex conv{e_1, ..., e_n} with moves e_i - e_j along edges. Dimension n - 1.
Embedding embed_simplex(const Graph& g);

/// Colour class i (0-based) with members in ascending order; its j-th member
/// (j >= 1) goes to (e_i, j e_i) in Z^{2k}. Dimension <= 2k - r - 1 with r
/// the number of singleton classes. Throws InvalidInput for an improper
/// colouring.
Embedding embed_chromatic(const Graph& g, const Coloring& c);

/// Cartesian product of the polytopes with block-padded move sets. The graph
/// is the iterated cartesian_product of the part graphs, in order.
Embedding embed_product(std::span<const Embedding> parts);

/// Pyramid over `sub` (an embedding of g - v) with apex v at the origin.
/// Nodes of g - v are numbered as in remove_node(g, v); if sub.graph() is only
/// isomorphic to that graph the isomorphism is found and used.
Embedding embed_apex(const Graph& g, NodeId v, const Embedding& sub);

/// C_n. For n outside {3, 4, 6}: D(n, {k, n - k}) with the smallest
/// 2 <= k < n/2 coprime to n. Otherwise an apex over a path. n >= 3.
Embedding embed_cycle(std::size_t n);

/// One-dimensional embedding from a difference-graph certificate: node u at
/// position[u] in [1, n], moves ±d for d in dset.
Embedding embed_difference(const Graph& g, std::span<const std::int64_t> position,
                           std::span<const std::int64_t> dset);

/// K_{n_1, ..., n_r} in {0,1}^{s+m}, s = ceil(log2 r), m = ceil(log2 max n_i).
/// Class i uses code c_i = binary(i) and the first n_i points of {0,1}^m.
Embedding embed_complete_multipartite(std::span<const std::size_t> sizes);

/// ceil(log2 n) for n >= 1.
std::size_t ceil_log2(std::size_t n);

}  // namespace fibdim
