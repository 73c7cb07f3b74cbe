#include "oracles.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace oracle {

using fibdim::Graph;
using fibdim::NodeId;
using fibdim::Point;

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> order;
  std::vector<char> used(n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void()> rec = [&] {
    if (order.size() == n) {
      std::uint64_t code = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
        }
      }
      best = std::min(best, code);
      return;
    }
    std::size_t top = 0;
    for (NodeId u = 0; u < n; ++u) {
      if (!used[u]) top = std::max(top, g.degree(u));
    }
    for (NodeId u = 0; u < n; ++u) {
      if (used[u] || g.degree(u) != top) continue;
      used[u] = 1;
      order.push_back(u);
      rec();
      order.pop_back();
      used[u] = 0;
    }
  };
  rec();
  return best;
}

std::vector<Graph> graphs_up_to_iso(std::size_t n) {
  static std::map<std::size_t, std::vector<Graph>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<Graph> out;
  if (n == 0) {
    out.emplace_back(0);
  } else {
    std::set<std::uint64_t> seen;
    for (const Graph& base : graphs_up_to_iso(n - 1)) {
      for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        Graph g(n);
        for (const auto& [u, v] : base.edges()) g.add_edge(u, v);
        for (NodeId u = 0; u + 1 < n; ++u) {
          if (mask & (1U << u)) g.add_edge(u, n - 1);
        }
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
      }
    }
  }
  memo[n] = out;
  return out;
}

bool brute_force_difference_graph(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n <= 1) return true;
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  do {
    std::vector<char> in(n, 0), out(n, 0);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        const std::size_t d = pos[u] > pos[v] ? pos[u] - pos[v] : pos[v] - pos[u];
        (g.adjacent(u, v) ? in : out)[d] = 1;
      }
    }
    bool ok = true;
    for (std::size_t d = 1; d < n && ok; ++d) ok = !(in[d] && out[d]);
    for (std::size_t a = 1; a < n && ok; ++a) {
      for (std::size_t b = a + 1; b < n && ok; ++b) ok = !(in[a] && in[b] && b % a == 0);
    }
    if (ok) return true;
  } while (std::next_permutation(pos.begin(), pos.end()));
  return false;
}

Graph difference_graph(std::size_t n, const std::vector<std::int64_t>& dset) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::count(dset.begin(), dset.end(), static_cast<std::int64_t>(j - i))) g.add_edge(i, j);
    }
  }
  return g;
}

bool has_odd_cycle(const Graph& g) {
  const std::size_t n = g.node_count();
  for (NodeId s = 0; s < n; ++s) {
    std::vector<char> seen(2 * n, 0);
    std::vector<std::size_t> queue{2 * s};
    seen[2 * s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head] / 2;
      const std::size_t parity = queue[head] % 2;
      for (NodeId w : g.neighbors(u)) {
        const std::size_t next = 2 * w + (1 - parity);
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    }
    if (seen[2 * s + 1]) return true;
  }
  return false;
}

namespace {

// Solves sum lambda_i v_i = x, sum lambda_i = 1 for affinely independent v.
bool barycentric_nonnegative(const std::vector<Point>& v, const Point& x) {
  const std::size_t k = v.size(), d = x.size();
  std::vector<std::vector<mpq_class>> a(d + 1, std::vector<mpq_class>(k + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = static_cast<long>(v[c][r]);
    a[r][k] = static_cast<long>(x[r]);
  }
  for (std::size_t c = 0; c < k; ++c) a[d][c] = 1;
  a[d][k] = 1;

  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = row;
    while (p <= d && a[p][c] == 0) ++p;
    if (p > d) return false;  // affinely dependent
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r <= d; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[row][c];
      for (std::size_t t = c; t <= k; ++t) a[r][t] -= f * a[row][t];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r <= d; ++r) {
    if (a[r][k] != 0) return false;
  }
  for (std::size_t r = 0; r < row; ++r) {
    if (a[r][k] / a[r][pivot_col[r]] < 0) return false;
  }
  return true;
}

}  // namespace

bool in_convex_hull(const std::vector<Point>& v, const Point& x) {
  const std::size_t m = v.size(), d = x.size();
  for (std::size_t k = 1; k <= std::min(m, d + 1); ++k) {
    std::vector<char> pick(m, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
    do {
      std::vector<Point> sub;
      for (std::size_t i = 0; i < m; ++i) {
        if (pick[i]) sub.push_back(v[i]);
      }
      if (barycentric_nonnegative(sub, x)) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return false;
}

std::vector<Point> lattice_points(const std::vector<Point>& v) {
  const std::size_t d = v.front().size();
  Point lo = v.front(), hi = v.front();
  for (const auto& p : v) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  std::vector<Point> out;
  Point x = lo;
  while (true) {
    if (in_convex_hull(v, x)) out.push_back(x);
    std::size_t i = d;
    while (i > 0 && x[i - 1] == hi[i - 1]) {
      x[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++x[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool moves_connect(const std::vector<Point>& points, const std::vector<Point>& moves) {
  if (points.empty()) return true;
  std::set<Point> present(points.begin(), points.end()), seen{points.front()};
  std::vector<Point> queue{points.front()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& m : moves) {
      for (int sign : {1, -1}) {
        Point y = queue[head];
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += sign * m[i];
        if (present.count(y) && seen.insert(y).second) queue.push_back(y);
      }
    }
  }
  return seen.size() == present.size();
}

bool realizes(const Graph& g, const std::vector<Point>& points, const std::vector<Point>& moves) {
  std::set<Point> m(moves.begin(), moves.end());
  for (const auto& mv : moves) {
    Point neg = mv;
    for (auto& c : neg) c = -c;
    m.insert(neg);
  }
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v = u + 1; v < g.node_count(); ++v) {
      Point diff = points[u];
      for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= points[v][i];
      if ((m.count(diff) != 0) != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

std::size_t chromatic_number(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> c(n, 0);
    std::function<bool(NodeId)> rec = [&](NodeId u) {
      if (u == n) return true;
      for (std::size_t col = 0; col < k; ++col) {
        bool ok = true;
        for (NodeId w : g.neighbors(u)) ok = ok && !(w < u && c[w] == col);
        if (!ok) continue;
        c[u] = col;
        if (rec(u + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return k;
  }
}

}  // namespace oracle
