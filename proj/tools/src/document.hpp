#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdim/embedding.hpp"
#include "fdim/fiber_graph.hpp"
#include "fdim/graph.hpp"

namespace fibdim::io {

inline constexpr std::string_view kFormatVersion = "fdim/1";

/// A graph together with the external node labels; labels[u] names node u.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  std::optional<NodeId> find(std::string_view label) const;
};

/// Accepts the edge-list format or a JSON graph document. Node indices follow
/// first appearance. Throws InvalidInput with a line number on parse errors
/// and names the node on loops.
LabeledGraph parse_graph(std::string_view text);

/// Edge-list text; isolated nodes are emitted as `node <label>` lines.
std::string write_edge_list(const LabeledGraph& g);

LabeledGraph with_index_labels(Graph g);

struct EmbeddingDocument {
  std::string version{kFormatVersion};
  std::string method;
  /// Sorted.
  std::vector<Point> polytope;
  /// Positive representatives, sorted.
  std::vector<Point> moves;
  std::map<std::string, Point> vertex_map;

  friend bool operator==(const EmbeddingDocument&, const EmbeddingDocument&) = default;
};

EmbeddingDocument make_document(const Embedding& e, const std::vector<std::string>& labels);

/// Canonical text: sorted keys, sorted point lists, trailing newline.
std::string serialize(const EmbeddingDocument& doc);

EmbeddingDocument parse_embedding_document(std::string_view text);

/// Rebuilds polytope and moves from the document and checks that they realise
/// `g` under the document's vertex map.
EmbeddingCheck verify_document(const LabeledGraph& g, const EmbeddingDocument& doc,
                               const GeometryLimits& limits = kEmbeddingLimits);

/// A polytope and an optional move list read from any JSON object carrying
/// "polytope" (or "points") and "moves" keys.
struct PointDocument {
  std::vector<Point> points;
  std::optional<std::vector<Point>> moves;
};

PointDocument parse_point_document(std::string_view text);

std::string serialize_points(std::string_view key, const std::vector<Point>& points);

/// Deterministic DOT; node i is labelled labels[i].
std::string to_dot(const Graph& g, const std::vector<std::string>& labels);

/// Nodes labelled by their lattice point coordinates.
std::string to_dot(const FiberGraph& fg);

}  // namespace fibdim::io
