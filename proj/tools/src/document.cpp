#include "document.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "fdim/errors.hpp"
#include "fdim/moves.hpp"

namespace fibdim::io {

using nlohmann::json;

std::optional<NodeId> LabeledGraph::find(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels.begin());
}

namespace {

class GraphBuilder {
 public:
  NodeId node(const std::string& label) {
    auto [it, fresh] = index_.emplace(label, labels_.size());
    if (fresh) labels_.push_back(label);
    return it->second;
  }

  void edge(const std::string& a, const std::string& b, const std::string& where) {
    if (a == b) throw InvalidInput(where + "loop at node '" + a + "'");
    const NodeId u = node(a), v = node(b);
    edges_.emplace_back(u, v);
  }

  LabeledGraph finish() {
    LabeledGraph out{Graph(labels_.size(), edges_), std::move(labels_)};
    return out;
  }

 private:
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

std::string label_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw InvalidInput(where + "node labels must be strings or integers");
}

LabeledGraph parse_graph_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("graph document: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("graph document must be a JSON object");
  GraphBuilder b;
  if (j.contains("nodes")) {
    if (!j["nodes"].is_array()) throw InvalidInput("graph document: 'nodes' must be an array");
    for (const auto& n : j["nodes"]) b.node(label_of(n, "graph document: "));
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InvalidInput("graph document: 'edges' must be an array");
    std::size_t i = 0;
    for (const auto& e : j["edges"]) {
      const std::string where = "graph document: edge " + std::to_string(i++) + ": ";
      if (!e.is_array() || e.size() != 2) throw InvalidInput(where + "expected a pair");
      b.edge(label_of(e[0], where), label_of(e[1], where), where);
    }
  }
  return b.finish();
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);

  GraphBuilder b;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tokens.size() != 2) {
      throw InvalidInput(where + "expected '<u> <v>' or 'node <label>', got " +
                         std::to_string(tokens.size()) + " fields");
    }
    if (tokens[0] == "node") {
      b.node(tokens[1]);
    } else {
      b.edge(tokens[0], tokens[1], where);
    }
  }
  return b.finish();
}

std::string write_edge_list(const LabeledGraph& g) {
  // Node lines are only needed when the edges alone would number the nodes
  // differently on reading.
  const auto edges = g.graph.edges();
  std::vector<char> seen(g.graph.node_count(), 0);
  NodeId next = 0;
  bool in_order = true;
  for (const auto& [u, v] : edges) {
    for (NodeId w : {u, v}) {
      if (seen[w]) continue;
      seen[w] = 1;
      in_order = in_order && w == next++;
    }
  }
  in_order = in_order && next == g.graph.node_count();
  std::string out;
  if (!in_order) {
    for (NodeId u = 0; u < g.graph.node_count(); ++u) out += "node " + g.labels[u] + "\n";
  }
  for (const auto& [u, v] : edges) out += g.labels[u] + " " + g.labels[v] + "\n";
  return out;
}

LabeledGraph with_index_labels(Graph g) {
  std::vector<std::string> labels(g.node_count());
  for (NodeId u = 0; u < labels.size(); ++u) labels[u] = std::to_string(u);
  return {std::move(g), std::move(labels)};
}

EmbeddingDocument make_document(const Embedding& e, const std::vector<std::string>& labels) {
  if (labels.size() != e.graph().node_count()) {
    throw InvalidInput("one label per node required");
  }
  EmbeddingDocument doc;
  doc.method = std::string(to_string(e.method()));
  doc.polytope = e.polytope().generators();
  std::sort(doc.polytope.begin(), doc.polytope.end());
  doc.moves = e.moves().positive_representatives();
  std::sort(doc.moves.begin(), doc.moves.end());
  for (NodeId u = 0; u < labels.size(); ++u) {
    if (!doc.vertex_map.emplace(labels[u], e.vertex_map()[u]).second) {
      throw InvalidInput("duplicate node label '" + labels[u] + "'");
    }
  }
  return doc;
}

namespace {

void write_point(std::string& out, const Point& p) {
  out += '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p[i]);
  }
  out += ']';
}

void write_point_list(std::string& out, const std::vector<Point>& points) {
  if (points.empty()) {
    out += "[]";
    return;
  }
  out += "[\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += "    ";
    write_point(out, points[i]);
    out += i + 1 < points.size() ? ",\n" : "\n";
  }
  out += "  ]";
}

std::vector<Point> points_of(const json& j, const std::string& key) {
  if (!j.is_array()) throw InvalidInput("'" + key + "' must be an array of points");
  std::vector<Point> out;
  for (const auto& p : j) {
    if (!p.is_array()) throw InvalidInput("'" + key + "' must be an array of points");
    Point q;
    for (const auto& c : p) {
      if (!c.is_number_integer()) {
        throw InvalidInput("'" + key + "' contains a non-integer coordinate");
      }
      q.push_back(c.get<std::int64_t>());
    }
    out.push_back(std::move(q));
  }
  return out;
}

json parse_object(std::string_view text, const char* what) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
  if (!j.is_object()) throw InvalidInput(std::string(what) + " must be a JSON object");
  return j;
}

}  // namespace

std::string serialize(const EmbeddingDocument& doc) {
  std::string out = "{\n  \"method\": " + json(doc.method).dump() + ",\n  \"moves\": ";
  write_point_list(out, doc.moves);
  out += ",\n  \"polytope\": ";
  write_point_list(out, doc.polytope);
  out += ",\n  \"version\": " + json(doc.version).dump() + ",\n  \"vertex_map\": {";
  std::size_t i = 0;
  for (const auto& [label, p] : doc.vertex_map) {
    out += i++ ? ",\n    " : "\n    ";
    out += json(label).dump() + ": ";
    write_point(out, p);
  }
  out += doc.vertex_map.empty() ? "}\n}\n" : "\n  }\n}\n";
  return out;
}

EmbeddingDocument parse_embedding_document(std::string_view text) {
  const json j = parse_object(text, "embedding document");
  for (const char* key : {"version", "method", "polytope", "moves", "vertex_map"}) {
    if (!j.contains(key)) throw InvalidInput(std::string("embedding document lacks '") + key + "'");
  }
  if (!j["version"].is_string() || !j["method"].is_string()) {
    throw InvalidInput("'version' and 'method' must be strings");
  }
  EmbeddingDocument doc;
  doc.version = j["version"].get<std::string>();
  if (doc.version != kFormatVersion) {
    throw InvalidInput("unsupported document version '" + doc.version + "'");
  }
  doc.method = j["method"].get<std::string>();
  doc.polytope = points_of(j["polytope"], "polytope");
  doc.moves = points_of(j["moves"], "moves");
  if (!j["vertex_map"].is_object()) throw InvalidInput("'vertex_map' must be an object");
  for (const auto& [label, p] : j["vertex_map"].items()) {
    auto pts = points_of(json::array({p}), "vertex_map");
    doc.vertex_map.emplace(label, std::move(pts.front()));
  }
  return doc;
}

EmbeddingCheck verify_document(const LabeledGraph& g, const EmbeddingDocument& doc,
                               const GeometryLimits& limits) {
  if (doc.polytope.empty()) return {false, "polytope has no generators"};
  const std::size_t d = doc.polytope.front().size();
  auto same_dim = [d](const Point& p) { return p.size() == d; };
  if (!std::all_of(doc.polytope.begin(), doc.polytope.end(), same_dim) ||
      !std::all_of(doc.moves.begin(), doc.moves.end(), same_dim)) {
    return {false, "points of mixed dimension"};
  }
  if (doc.vertex_map.size() != g.graph.node_count()) {
    return {false, "vertex map has " + std::to_string(doc.vertex_map.size()) +
                       " entries for a graph on " + std::to_string(g.graph.node_count()) +
                       " nodes"};
  }
  std::vector<Point> vertex_map;
  for (const auto& label : g.labels) {
    auto it = doc.vertex_map.find(label);
    if (it == doc.vertex_map.end()) return {false, "node '" + label + "' is not mapped"};
    if (!same_dim(it->second)) return {false, "point of node '" + label + "' has wrong dimension"};
    vertex_map.push_back(it->second);
  }
  MoveSet moves;
  try {
    moves = symmetric_move_set(d, doc.moves);
  } catch (const MoveSetError& e) {
    return {false, std::string("invalid move set: ") + e.what()};
  }
  return verify_embedding(g.graph, LatticePolytope(doc.polytope), moves, vertex_map, limits);
}

PointDocument parse_point_document(std::string_view text) {
  const json j = parse_object(text, "point document");
  PointDocument doc;
  if (j.contains("polytope")) {
    doc.points = points_of(j["polytope"], "polytope");
  } else if (j.contains("points")) {
    doc.points = points_of(j["points"], "points");
  }
  if (j.contains("moves")) doc.moves = points_of(j["moves"], "moves");
  return doc;
}

std::string serialize_points(std::string_view key, const std::vector<Point>& points) {
  std::string out = "{\n  " + json(std::string(key)).dump() + ": ";
  write_point_list(out, points);
  out += ",\n  \"version\": " + json(std::string(kFormatVersion)).dump() + "\n}\n";
  return out;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::string out = "graph G {\n";
  for (NodeId u = 0; u < g.node_count(); ++u) {
    out += "  n" + std::to_string(u) + " [label=" + json(labels.at(u)).dump() + "];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string to_dot(const FiberGraph& fg) {
  std::vector<std::string> labels;
  labels.reserve(fg.point_of.size());
  for (const auto& p : fg.point_of) labels.push_back(to_string(p));
  return to_dot(fg.graph, labels);
}

}  // namespace fibdim::io
