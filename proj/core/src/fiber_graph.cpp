#include "fdim/fiber_graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "fdim/errors.hpp"

namespace fibdim {

std::optional<NodeId> FiberGraph::node_of(const Point& p) const {
  auto it = std::lower_bound(point_of.begin(), point_of.end(), p);
  if (it == point_of.end() || *it != p) return std::nullopt;
  return static_cast<NodeId>(it - point_of.begin());
}

FiberGraph fiber_graph_on_points(std::vector<Point> points, const MoveSet& m) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::unordered_map<Point, NodeId, PointHash> index;
  for (NodeId i = 0; i < points.size(); ++i) {
    if (points[i].size() != m.ambient_dim()) {
      throw InvalidInput("fiber graph: point " + to_string(points[i]) +
                         " does not match move dimension " +
                         std::to_string(m.ambient_dim()));
    }
    index.emplace(points[i], i);
  }
  FiberGraph fg{Graph(points.size()), {}};
  const auto reps = m.positive_representatives();
  for (NodeId i = 0; i < points.size(); ++i) {
    for (const auto& mv : reps) {
      if (auto it = index.find(points[i] + mv); it != index.end()) {
        fg.graph.add_edge(i, it->second);
      }
    }
  }
  fg.point_of = std::move(points);
  return fg;
}

FiberGraph build_fiber_graph(const LatticePolytope& p, const MoveSet& m,
                             const GeometryLimits& limits) {
  if (p.ambient_dim() != m.ambient_dim()) {
    throw InvalidInput("fiber graph: polytope in dimension " +
                       std::to_string(p.ambient_dim()) + " but moves in dimension " +
                       std::to_string(m.ambient_dim()));
  }
  return fiber_graph_on_points(enumerate_lattice_points(p, limits), m);
}

MinimalityReport is_minimal(const LatticePolytope& p, const MoveSet& m,
                            const GeometryLimits& limits) {
  if (p.ambient_dim() != m.ambient_dim()) {
    throw InvalidInput("is_minimal: dimension mismatch");
  }
  const auto points = enumerate_lattice_points(p, limits);
  const std::unordered_set<Point, PointHash> present(points.begin(), points.end());
  MinimalityReport report;
  for (const auto& mv : m.positive_representatives()) {
    const bool used = std::any_of(points.begin(), points.end(), [&](const Point& x) {
      return present.count(x + mv) != 0;
    });
    if (!used) {
      report.unused.push_back(mv);
      report.unused.push_back(-mv);
    }
  }
  std::sort(report.unused.begin(), report.unused.end());
  report.minimal = report.unused.empty();
  return report;
}

bool is_markov_basis(const LatticePolytope& p, const MoveSet& m,
                     const GeometryLimits& limits) {
  if (!is_minimal(p, m, limits).minimal) return false;
  return properties(build_fiber_graph(p, m, limits).graph).connected;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Candidate {
  Point move;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

class MarkovSearch {
 public:
  MarkovSearch(std::size_t nodes, std::vector<Candidate> candidates, std::uint64_t budget)
      : nodes_(nodes), cand_(std::move(candidates)), budget_(budget) {
    const std::size_t c = cand_.size();
    compatible_.assign(c * c, 1);
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j && multiple_factor(cand_[i].move, cand_[j].move) != 0) {
          compatible_[i * c + j] = compatible_[j * c + i] = 0;
        }
      }
    }
  }

  bool connected_with(std::size_t picks) {
    chosen_.clear();
    return choose(0, picks, 0);
  }

 private:
  bool choose(std::size_t start, std::size_t remaining, std::size_t edge_total) {
    if (remaining == 0) {
      if (++visited_ > budget_) {
        throw CapExceeded("Markov basis search exceeded its budget");
      }
      if (edge_total + 1 < nodes_) return false;
      UnionFind uf(nodes_);
      std::size_t merged = 0;
      for (auto idx : chosen_) {
        for (const auto& [a, b] : cand_[idx].edges) merged += uf.unite(a, b) ? 1 : 0;
      }
      return merged + 1 == nodes_;
    }
    for (std::size_t i = start; i + remaining <= cand_.size(); ++i) {
      bool ok = true;
      for (auto j : chosen_) {
        if (!compatible_[i * cand_.size() + j]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen_.push_back(i);
      if (choose(i + 1, remaining - 1, edge_total + cand_[i].edges.size())) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::size_t nodes_;
  std::vector<Candidate> cand_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<char> compatible_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<std::size_t> min_markov_basis_size(const LatticePolytope& p,
                                                 std::size_t size_cap,
                                                 const GeometryLimits& limits) {
  const auto points = enumerate_lattice_points(p, limits);
  if (points.size() <= 1) return std::size_t{0};

  std::vector<Candidate> candidates;
  {
    std::unordered_map<Point, std::size_t, PointHash> index;
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        Point diff = points[j] - points[i];
        std::pair<std::size_t, std::size_t> e{i, j};
        if (!is_positive(diff)) diff = -diff;
        auto [it, fresh] = index.emplace(diff, candidates.size());
        if (fresh) candidates.push_back(Candidate{diff, {}});
        candidates[it->second].edges.push_back(e);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.move < b.move; });

  MarkovSearch search(points.size(), std::move(candidates), 200'000'000ULL);
  for (std::size_t pairs = 1; 2 * pairs <= size_cap; ++pairs) {
    if (search.connected_with(pairs)) return 2 * pairs;
  }
  return std::nullopt;
}

BipartiteCriterion check_bipartite_criterion(const LatticePolytope& p, const MoveSet& m,
                                             const GeometryLimits& limits) {
  BipartiteCriterion out;
  const FiberGraph fg = build_fiber_graph(p, m, limits);
  out.bipartite = properties(fg.graph).bipartite;
  out.applies = m.size() == 2 * dimension(p) && is_markov_basis(p, m, limits);
  if (out.applies) {
    if (!out.bipartite) {
      throw InternalError("Markov basis with |M| = 2 dim(P) produced a non-bipartite graph");
    }
    out.bipartite_confirmed = true;
  }
  return out;
}

}  // namespace fibdim
