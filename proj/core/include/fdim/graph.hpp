#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fibdim {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;

/// Simple undirected graph on the dense node set {0, ..., node_count - 1}.
///
/// Loops are rejected, duplicate edges collapse. Neighbor lists are kept
/// sorted so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);
  Graph(std::size_t node_count, std::span<const Edge> edges);

  /// Throws InvalidInput on a loop or an out-of-range endpoint.
  void add_edge(NodeId u, NodeId v);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(NodeId u, NodeId v) const;
  std::size_t degree(NodeId u) const { return adjacency_[u].size(); }
  const std::vector<NodeId>& neighbors(NodeId u) const { return adjacency_[u]; }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A bijection between node sets; image[u] is the node u is sent to.
struct NodeMapping {
  std::vector<NodeId> image;
};

/// Returns an isomorphism g -> h if one exists. Any returned mapping has been
/// checked edge-by-edge and non-edge-by-non-edge.
std::optional<NodeMapping> is_isomorphic(const Graph& g, const Graph& h);

/// True iff `mapping` is a bijection V(g) -> V(h) preserving edges and non-edges.
bool is_isomorphism(const Graph& g, const Graph& h, const NodeMapping& mapping);

enum class ColoringMode { exact, greedy };

struct Coloring {
  std::vector<std::size_t> class_of;
  std::size_t k = 0;
  /// Set iff k is the chromatic number.
  bool exact = false;

  /// Color classes with members in ascending node order.
  std::vector<std::vector<NodeId>> classes() const;
};

inline constexpr std::size_t kDefaultExactColoringCap = 24;

/// Exact mode throws CapExceeded when node_count exceeds `exact_cap`.
Coloring color(const Graph& g, ColoringMode mode,
               std::size_t exact_cap = kDefaultExactColoringCap);

/// Proper, and every class in [0, k) nonempty.
bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Node (u1, u2) of the product has index u1 * h.node_count() + u2.
Graph cartesian_product(const Graph& g, const Graph& h);

struct GraphProperties {
  bool connected = false;
  bool bipartite = false;
  std::size_t components = 0;
  /// Side of each node in a proper 2-coloring; empty unless bipartite.
  std::vector<int> two_coloring;
};

GraphProperties properties(const Graph& g);

/// g with v deleted; remaining nodes keep their relative order.
Graph remove_node(const Graph& g, NodeId v);

/// Size of a maximum clique (exhaustive, for small graphs).
std::size_t clique_number(const Graph& g);

namespace graphs {

Graph empty(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,n}; node 0 is the center.
Graph star(std::size_t n);
/// Nodes are numbered class by class in the order of `sizes`.
Graph complete_multipartite(std::span<const std::size_t> sizes);
Graph petersen();
/// Hub 0 joined to a rim cycle on nodes 1..n.
Graph wheel(std::size_t rim);

}  // namespace graphs

}  // namespace fibdim
