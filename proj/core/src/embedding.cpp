#include "fdim/embedding.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "fdim/errors.hpp"
#include "fdim/reduce.hpp"

namespace fibdim {

namespace {

constexpr std::array<std::pair<EmbeddingMethod, std::string_view>, 9> kMethodNames{{
    {EmbeddingMethod::simplex, "simplex"},
    {EmbeddingMethod::chromatic, "chromatic"},
    {EmbeddingMethod::product, "product"},
    {EmbeddingMethod::apex, "apex"},
    {EmbeddingMethod::cycle, "cycle"},
    {EmbeddingMethod::difference, "difference"},
    {EmbeddingMethod::complete_multipartite, "complete-multipartite"},
    {EmbeddingMethod::dps, "dps"},
    {EmbeddingMethod::exhaustive_search, "exhaustive-search"},
}};

}  // namespace

std::string_view to_string(EmbeddingMethod method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "unknown";
}

std::optional<EmbeddingMethod> parse_embedding_method(std::string_view name) {
  for (const auto& [m, n] : kMethodNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

EmbeddingCheck verify_embedding(const Graph& g, const LatticePolytope& p, const MoveSet& m,
                                std::span<const Point> vertex_map,
                                const GeometryLimits& limits) {
  const std::size_t n = g.node_count();
  if (vertex_map.size() != n) {
    return {false, "vertex map has " + std::to_string(vertex_map.size()) +
                       " entries for a graph on " + std::to_string(n) + " nodes"};
  }
  if (m.ambient_dim() != p.ambient_dim()) {
    return {false, "moves and polytope live in different dimensions"};
  }
  if (dimension(p) != p.ambient_dim()) {
    return {false, "polytope has dimension " + std::to_string(dimension(p)) +
                       " in ambient dimension " + std::to_string(p.ambient_dim())};
  }
  std::vector<Point> images(vertex_map.begin(), vertex_map.end());
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    return {false, "vertex map is not injective"};
  }
  const auto lattice_points = enumerate_lattice_points(p, limits);
  if (lattice_points != images) {
    return {false, "lattice points of the polytope (" +
                       std::to_string(lattice_points.size()) +
                       ") differ from the vertex map images (" +
                       std::to_string(images.size()) + ")"};
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const bool edge = g.adjacent(u, v);
      const bool move = m.contains(vertex_map[u] - vertex_map[v]);
      if (edge != move) {
        return {false, std::string(edge ? "edge" : "non-edge") + " {" +
                           std::to_string(u) + ", " + std::to_string(v) + "} maps to " +
                           (move ? "a move" : "a non-move") + " " +
                           to_string(vertex_map[u] - vertex_map[v])};
      }
    }
  }
  return {true, {}};
}

Embedding::Embedding(Graph g, LatticePolytope p, MoveSet m, std::vector<Point> vertex_map,
                     EmbeddingMethod method)
    : graph_(std::move(g)),
      polytope_(std::move(p)),
      moves_(std::move(m)),
      vertex_map_(std::move(vertex_map)),
      method_(method) {}

Embedding Embedding::construct(Graph g, std::vector<Point> node_points,
                               std::vector<Point> moves, std::vector<Point> generators,
                               EmbeddingMethod method, const GeometryLimits& limits) {
  if (node_points.size() != g.node_count() || node_points.empty()) {
    throw InvalidInput("embedding needs one point per node of a nonempty graph");
  }
  const std::size_t d = node_points.front().size();
  const LatticePolytope polytope(std::move(generators));
  MoveSet move_set = symmetric_move_set(d, std::move(moves));
  Reduction red = full_dim_reduce(polytope, move_set);

  std::vector<Point> reduced_points;
  reduced_points.reserve(node_points.size());
  for (const auto& x : node_points) {
    if (!red.map.in_image(x)) {
      throw InternalError("node point " + to_string(x) + " is off the polytope's lattice");
    }
    reduced_points.push_back(red.map.pull_back(x));
  }
  const EmbeddingCheck check =
      verify_embedding(g, red.polytope, red.moves, reduced_points, limits);
  if (!check.ok) {
    throw InternalError(std::string(to_string(method)) +
                        " embedding failed verification: " + check.reason);
  }
  return Embedding(std::move(g), std::move(red.polytope), std::move(red.moves),
                   std::move(reduced_points), method);
}

}  // namespace fibdim
