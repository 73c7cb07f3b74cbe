#include "fdim/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "fdim/errors.hpp"

namespace fibdim {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges)
    : adjacency_(node_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(NodeId u, NodeId v) {
  if (u >= node_count() || v >= node_count()) {
    throw InvalidInput("edge endpoint out of range: {" + std::to_string(u) +
                       ", " + std::to_string(v) + "}");
  }
  if (u == v) throw InvalidInput("loop at node " + std::to_string(u));
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::vector<char> dense_adjacency(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> adj(n * n, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) adj[u * n + v] = 1;
  }
  return adj;
}

// Colour refinement run on g and h jointly so that colour ids are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(
    const Graph& g, const Graph& h) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> cg(n, 0), ch(n, 0);
  std::size_t classes = 1;
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    auto signature = [](const Graph& graph, const std::vector<std::size_t>& col,
                        NodeId u) {
      std::vector<std::size_t> nb;
      nb.reserve(graph.degree(u));
      for (NodeId v : graph.neighbors(u)) nb.push_back(col[v]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(col[u], std::move(nb));
    };
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sg, sh;
    for (NodeId u = 0; u < n; ++u) sg.push_back(signature(g, cg, u));
    for (NodeId u = 0; u < n; ++u) sh.push_back(signature(h, ch, u));
    for (const auto& s : sg) ids.emplace(s, 0);
    for (const auto& s : sh) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<std::size_t> ng(n), nh(n);
    for (NodeId u = 0; u < n; ++u) ng[u] = ids.at(sg[u]);
    for (NodeId u = 0; u < n; ++u) nh[u] = ids.at(sh[u]);
    cg = std::move(ng);
    ch = std::move(nh);
    if (next == classes) break;
    classes = next;
  }
  return {cg, ch};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<std::size_t> cg,
            std::vector<std::size_t> ch)
      : n_(g.node_count()),
        ag_(dense_adjacency(g)),
        ah_(dense_adjacency(h)),
        cg_(std::move(cg)),
        ch_(std::move(ch)),
        image_(n_, n_),
        used_(n_, 0) {
    // Order nodes of g so that each node has as many already-ordered
    // neighbours as possible; this makes adjacency constraints bite early.
    std::vector<std::size_t> class_size(n_ + 1, 0);
    for (auto c : cg_) ++class_size[std::min(c, n_)];
    std::vector<char> placed(n_, 0);
    std::vector<std::size_t> links(n_, 0);
    for (std::size_t step = 0; step < n_; ++step) {
      NodeId best = n_;
      for (NodeId u = 0; u < n_; ++u) {
        if (placed[u]) continue;
        if (best == n_ || links[u] > links[best] ||
            (links[u] == links[best] &&
             class_size[std::min(cg_[u], n_)] <
                 class_size[std::min(cg_[best], n_)])) {
          best = u;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (NodeId v : g.neighbors(best)) ++links[v];
    }
  }

  bool run() { return extend(0); }
  std::vector<NodeId> image() const { return image_; }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const NodeId u = order_[depth];
    for (NodeId x = 0; x < n_; ++x) {
      if (used_[x] || ch_[x] != cg_[u]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const NodeId w = order_[i];
        ok = ag_[u * n_ + w] == ah_[x * n_ + image_[w]];
      }
      if (!ok) continue;
      image_[u] = x;
      used_[x] = 1;
      if (extend(depth + 1)) return true;
      used_[x] = 0;
      image_[u] = n_;
    }
    return false;
  }

  std::size_t n_;
  std::vector<char> ag_, ah_;
  std::vector<std::size_t> cg_, ch_;
  std::vector<NodeId> order_;
  std::vector<NodeId> image_;
  std::vector<char> used_;
};

}  // namespace

bool is_isomorphism(const Graph& g, const Graph& h, const NodeMapping& mapping) {
  const std::size_t n = g.node_count();
  if (h.node_count() != n || mapping.image.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (NodeId x : mapping.image) {
    if (x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  const auto ag = dense_adjacency(g);
  const auto ah = dense_adjacency(h);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (ag[u * n + v] != ah[mapping.image[u] * n + mapping.image[v]]) {
        return false;
      }
    }
  }
  return true;
}

std::optional<NodeMapping> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  const std::size_t n = g.node_count();
  auto [cg, ch] = refine_colors(g, h);
  std::vector<std::size_t> sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;
  if (n == 0) return NodeMapping{};

  IsoSearch search(g, h, std::move(cg), std::move(ch));
  if (!search.run()) return std::nullopt;
  NodeMapping mapping{search.image()};
  if (!is_isomorphism(g, h, mapping)) {
    throw InternalError("isomorphism search returned an invalid mapping");
  }
  return mapping;
}

std::vector<std::vector<NodeId>> Coloring::classes() const {
  std::vector<std::vector<NodeId>> out(k);
  for (NodeId u = 0; u < class_of.size(); ++u) out[class_of[u]].push_back(u);
  return out;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (c.class_of.size() != g.node_count()) return false;
  std::vector<char> seen(c.k, 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (c.class_of[u] >= c.k) return false;
    seen[c.class_of[u]] = 1;
    for (NodeId v : g.neighbors(u)) {
      if (c.class_of[u] == c.class_of[v]) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

namespace {

Coloring greedy_coloring(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return g.degree(a) > g.degree(b);
  });
  constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);
  Coloring c;
  c.class_of.assign(n, kUncolored);
  for (NodeId u : order) {
    std::vector<char> taken(n + 1, 0);
    for (NodeId v : g.neighbors(u)) {
      if (c.class_of[v] != kUncolored) taken[c.class_of[v]] = 1;
    }
    std::size_t col = 0;
    while (taken[col]) ++col;
    c.class_of[u] = col;
    c.k = std::max(c.k, col + 1);
  }
  return c;
}

// DSATUR backtracking: is g colourable with `k` colours?
class KColorSearch {
 public:
  KColorSearch(const Graph& g, std::size_t k)
      : g_(g), k_(k), col_(g.node_count(), kNone) {}

  bool run() { return assign(0, 0); }
  std::vector<std::size_t> colors() const { return col_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool assign(std::size_t colored, std::size_t used) {
    const std::size_t n = g_.node_count();
    if (colored == n) return true;
    NodeId pick = n;
    std::size_t pick_sat = 0;
    for (NodeId u = 0; u < n; ++u) {
      if (col_[u] != kNone) continue;
      std::uint64_t mask = 0;
      for (NodeId v : g_.neighbors(u)) {
        if (col_[v] != kNone) mask |= std::uint64_t{1} << col_[v];
      }
      const auto sat = static_cast<std::size_t>(std::popcount(mask));
      if (pick == n || sat > pick_sat ||
          (sat == pick_sat && g_.degree(u) > g_.degree(pick))) {
        pick = u;
        pick_sat = sat;
      }
    }
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      for (NodeId v : g_.neighbors(pick)) {
        if (col_[v] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      col_[pick] = c;
      if (assign(colored + 1, std::max(used, c + 1))) return true;
      col_[pick] = kNone;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<std::size_t> col_;
};

}  // namespace

Coloring color(const Graph& g, ColoringMode mode, std::size_t exact_cap) {
  Coloring greedy = greedy_coloring(g);
  if (mode == ColoringMode::greedy) return greedy;
  if (g.node_count() > exact_cap) {
    throw CapExceeded("exact coloring limited to " + std::to_string(exact_cap) +
                      " nodes, graph has " + std::to_string(g.node_count()));
  }
  const std::size_t lower = clique_number(g);
  for (std::size_t k = lower; k < greedy.k; ++k) {
    KColorSearch search(g, k);
    if (search.run()) {
      Coloring c{search.colors(), k, true};
      return c;
    }
  }
  greedy.exact = true;
  return greedy;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.node_count();
  Graph out(g.node_count() * m);
  for (NodeId u1 = 0; u1 < g.node_count(); ++u1) {
    for (const auto& [a, b] : h.edges()) out.add_edge(u1 * m + a, u1 * m + b);
  }
  for (const auto& [a, b] : g.edges()) {
    for (NodeId u2 = 0; u2 < m; ++u2) out.add_edge(a * m + u2, b * m + u2);
  }
  return out;
}

GraphProperties properties(const Graph& g) {
  const std::size_t n = g.node_count();
  GraphProperties p;
  p.bipartite = true;
  std::vector<int> side(n, -1);
  for (NodeId s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    ++p.components;
    side[s] = 0;
    std::queue<NodeId> queue;
    queue.push(s);
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop();
      for (NodeId v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push(v);
        } else if (side[v] == side[u]) {
          p.bipartite = false;
        }
      }
    }
  }
  p.connected = p.components <= 1;
  if (p.bipartite) p.two_coloring = std::move(side);
  return p;
}

Graph remove_node(const Graph& g, NodeId v) {
  if (v >= g.node_count()) throw InvalidInput("node out of range");
  Graph out(g.node_count() - 1);
  auto shift = [v](NodeId u) { return u > v ? u - 1 : u; };
  for (const auto& [a, b] : g.edges()) {
    if (a != v && b != v) out.add_edge(shift(a), shift(b));
  }
  return out;
}

namespace {

std::size_t max_clique(const std::vector<std::uint64_t>& nbr, std::uint64_t candidates,
                       std::size_t size, std::size_t best) {
  if (candidates == 0) return std::max(size, best);
  while (candidates != 0) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) {
      return best;
    }
    const int u = std::countr_zero(candidates);
    candidates &= candidates - 1;
    best = max_clique(nbr, candidates & nbr[u], size + 1, best);
  }
  return std::max(size, best);
}

}  // namespace

std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n > 64) throw CapExceeded("clique search limited to 64 nodes");
  std::vector<std::uint64_t> nbr(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) nbr[u] |= std::uint64_t{1} << v;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return max_clique(nbr, all, 0, 0);
}

namespace graphs {

Graph empty(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
  Graph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (NodeId u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 nodes");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star(std::size_t n) {
  Graph g(n + 1);
  for (NodeId v = 1; v <= n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_multipartite(std::span<const std::size_t> sizes) {
  std::vector<std::size_t> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) part.insert(part.end(), sizes[i], i);
  Graph g(part.size());
  for (NodeId u = 0; u < part.size(); ++u) {
    for (NodeId v = u + 1; v < part.size(); ++v) {
      if (part[u] != part[v]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (NodeId i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph wheel(std::size_t rim) {
  Graph g(rim + 1);
  for (NodeId i = 1; i <= rim; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % rim + 1);
  }
  return g;
}

}  // namespace graphs

}  // namespace fibdim
