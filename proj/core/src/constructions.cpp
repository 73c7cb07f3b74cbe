#include <algorithm>
#include <numeric>

#include "fdim/embedding.hpp"
#include "fdim/errors.hpp"

namespace fibdim {

namespace {

std::vector<Point> edge_differences(const Graph& g, const std::vector<Point>& points) {
  std::vector<Point> moves;
  moves.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) moves.push_back(points[u] - points[v]);
  return moves;
}

Point concat(const Point& a, const Point& b) {
  Point out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Point bits(std::size_t value, std::size_t width) {
  Point out(width, 0);
  for (std::size_t i = 0; i < width; ++i) {
    out[width - 1 - i] = static_cast<std::int64_t>((value >> i) & 1U);
  }
  return out;
}

}  // namespace

std::size_t ceil_log2(std::size_t n) {
  if (n == 0) throw InvalidInput("ceil_log2(0)");
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

Embedding embed_simplex(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw InvalidInput("embed_simplex: empty graph");
  std::vector<Point> points(n, Point(n, 0));
  for (std::size_t i = 0; i < n; ++i) points[i][i] = 1;
  auto moves = edge_differences(g, points);
  return Embedding::construct(g, points, std::move(moves), points, EmbeddingMethod::simplex);
}

Embedding embed_chromatic(const Graph& g, const Coloring& c) {
  if (g.node_count() == 0) throw InvalidInput("embed_chromatic: empty graph");
  if (!is_proper_coloring(g, c)) throw InvalidInput("embed_chromatic: improper coloring");
  const std::size_t k = c.k;
  const auto classes = c.classes();
  std::vector<Point> points(g.node_count());
  std::size_t singletons = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (classes[i].size() == 1) ++singletons;
    for (std::size_t j = 0; j < classes[i].size(); ++j) {
      Point p(2 * k, 0);
      p[i] = 1;
      p[k + i] = static_cast<std::int64_t>(j + 1);
      points[classes[i][j]] = std::move(p);
    }
  }
  auto moves = edge_differences(g, points);
  Embedding e = Embedding::construct(g, points, std::move(moves), points,
                                     EmbeddingMethod::chromatic);
  if (e.dimension() + singletons + 1 > 2 * k) {
    throw InternalError("chromatic embedding exceeds 2k - r - 1");
  }
  return e;
}

namespace {

Embedding product_of_two(const Embedding& a, const Embedding& b) {
  const Graph g = cartesian_product(a.graph(), b.graph());
  const std::size_t m = b.graph().node_count();
  std::vector<Point> points(g.node_count());
  for (NodeId u1 = 0; u1 < a.graph().node_count(); ++u1) {
    for (NodeId u2 = 0; u2 < m; ++u2) {
      points[u1 * m + u2] = concat(a.vertex_map()[u1], b.vertex_map()[u2]);
    }
  }
  std::vector<Point> generators;
  for (const auto& x : a.polytope().generators()) {
    for (const auto& y : b.polytope().generators()) generators.push_back(concat(x, y));
  }
  std::vector<Point> moves;
  const Point zero_a(a.dimension(), 0), zero_b(b.dimension(), 0);
  for (const auto& mv : a.moves().moves()) moves.push_back(concat(mv, zero_b));
  for (const auto& mv : b.moves().moves()) moves.push_back(concat(zero_a, mv));
  Embedding e = Embedding::construct(g, std::move(points), std::move(moves),
                                     std::move(generators), EmbeddingMethod::product);
  if (e.dimension() != a.dimension() + b.dimension()) {
    throw InternalError("product embedding dimension is not additive");
  }
  return e;
}

}  // namespace

Embedding embed_product(std::span<const Embedding> parts) {
  if (parts.size() < 2) throw InvalidInput("embed_product needs at least two parts");
  Embedding acc = product_of_two(parts[0], parts[1]);
  for (std::size_t i = 2; i < parts.size(); ++i) acc = product_of_two(acc, parts[i]);
  return acc;
}

Embedding embed_apex(const Graph& g, NodeId v, const Embedding& sub) {
  if (v >= g.node_count()) throw InvalidInput("embed_apex: node out of range");
  const Graph rest = remove_node(g, v);
  std::vector<NodeId> to_sub(rest.node_count());
  std::iota(to_sub.begin(), to_sub.end(), NodeId{0});
  if (!(sub.graph() == rest)) {
    auto iso = is_isomorphic(rest, sub.graph());
    if (!iso) throw InvalidInput("embed_apex: sub-embedding is not an embedding of g - v");
    to_sub = iso->image;
  }
  const std::size_t d = sub.dimension();
  auto lift = [](std::int64_t head, const Point& x) {
    Point out{head};
    out.insert(out.end(), x.begin(), x.end());
    return out;
  };

  std::vector<Point> points(g.node_count());
  points[v] = Point(d + 1, 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (u == v) continue;
    const NodeId r = u > v ? u - 1 : u;
    points[u] = lift(1, sub.vertex_map()[to_sub[r]]);
  }
  std::vector<Point> generators{Point(d + 1, 0)};
  for (const auto& x : sub.polytope().generators()) generators.push_back(lift(1, x));
  std::vector<Point> moves;
  for (const auto& mv : sub.moves().moves()) moves.push_back(lift(0, mv));
  for (NodeId w : g.neighbors(v)) moves.push_back(points[w]);

  Embedding e = Embedding::construct(g, std::move(points), std::move(moves),
                                     std::move(generators), EmbeddingMethod::apex);
  if (e.dimension() != d + 1) throw InternalError("apex embedding dimension is not d + 1");
  return e;
}

Embedding embed_difference(const Graph& g, std::span<const std::int64_t> position,
                           std::span<const std::int64_t> dset) {
  const std::size_t n = g.node_count();
  if (n == 0 || position.size() != n) {
    throw InvalidInput("embed_difference: one position per node required");
  }
  std::vector<Point> points(n);
  for (NodeId u = 0; u < n; ++u) points[u] = Point{position[u]};
  std::vector<Point> moves;
  for (auto d : dset) moves.push_back(Point{d});
  std::vector<Point> generators{Point{1}, Point{static_cast<std::int64_t>(n)}};
  return Embedding::construct(g, std::move(points), std::move(moves), std::move(generators),
                              EmbeddingMethod::difference);
}

Embedding embed_cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("embed_cycle: n must be at least 3");
  const Graph g = graphs::cycle(n);
  if (n == 3 || n == 4 || n == 6) {
    const Graph path = graphs::path(n - 1);
    std::vector<std::int64_t> pos(n - 1);
    std::iota(pos.begin(), pos.end(), std::int64_t{1});
    const std::vector<std::int64_t> one{1};
    const Embedding sub = embed_difference(path, pos, one);
    Embedding apex = embed_apex(g, 0, sub);
    return Embedding::construct(g, apex.vertex_map(), apex.moves().moves(),
                                apex.polytope().generators(), EmbeddingMethod::cycle);
  }
  std::int64_t k = 2;
  const auto nn = static_cast<std::int64_t>(n);
  while (!(2 * k < nn && std::gcd(k, nn) == 1)) ++k;
  std::vector<std::int64_t> pos(n);
  pos[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    pos[i] = pos[i - 1] + k <= nn ? pos[i - 1] + k : pos[i - 1] - (nn - k);
  }
  const std::vector<std::int64_t> dset{k, nn - k};
  Embedding e = embed_difference(g, pos, dset);
  return Embedding::construct(g, e.vertex_map(), e.moves().moves(),
                              e.polytope().generators(), EmbeddingMethod::cycle);
}

Embedding embed_complete_multipartite(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw InvalidInput("embed_complete_multipartite: no classes");
  if (std::find(sizes.begin(), sizes.end(), std::size_t{0}) != sizes.end()) {
    throw InvalidInput("embed_complete_multipartite: empty class");
  }
  const std::size_t r = sizes.size();
  const std::size_t s = ceil_log2(r);
  const std::size_t m = ceil_log2(*std::max_element(sizes.begin(), sizes.end()));
  const Graph g = graphs::complete_multipartite(sizes);

  std::vector<Point> points;
  std::vector<std::size_t> part;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < sizes[i]; ++j) {
      points.push_back(concat(bits(i, s), bits(j, m)));
      part.push_back(i);
    }
  }
  // Only differences realised between distinct classes; the edge set is the
  // same as with the full set {c_i - c_j} x {-1,0,1}^m.
  std::vector<Point> moves = edge_differences(g, points);
  Embedding e = Embedding::construct(g, points, std::move(moves), points,
                                     EmbeddingMethod::complete_multipartite);
  if (e.dimension() > s + m) {
    throw InternalError("complete multipartite embedding exceeds its dimension bound");
  }
  return e;
}

}  // namespace fibdim
