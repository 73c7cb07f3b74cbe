#include "fdim/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "fdim/errors.hpp"
#include "fdim/moves.hpp"

namespace fibdim {

std::string_view to_string(LowerCertificate c) {
  switch (c) {
    case LowerCertificate::node_count:
      return "node-count";
    case LowerCertificate::non_difference_graph:
      return "non-difference-graph";
    case LowerCertificate::complete_graph_parity:
      return "complete-graph-parity";
  }
  return "unknown";
}

std::string_view to_string(ExactSearchResult::Status s) {
  switch (s) {
    case ExactSearchResult::Status::found:
      return "found";
    case ExactSearchResult::Status::none_in_box:
      return "none-in-box";
    case ExactSearchResult::Status::budget_exceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

std::optional<std::vector<std::size_t>> complete_multipartite_parts(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> part(n, kNone);
  std::vector<std::size_t> sizes;
  for (NodeId u = 0; u < n; ++u) {
    if (part[u] != kNone) continue;
    for (NodeId v = u; v < n; ++v) {
      if (v == u || !g.adjacent(u, v)) part[v] = sizes.size();
    }
    sizes.push_back(0);
  }
  for (NodeId u = 0; u < n; ++u) {
    ++sizes[part[u]];
    for (NodeId v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) == (part[u] == part[v])) return std::nullopt;
    }
  }
  return sizes;
}

Embedding relabel(const Embedding& e, const Graph& g) {
  if (e.graph() == g) return e;
  const auto iso = is_isomorphic(g, e.graph());
  if (!iso) throw InvalidInput("relabel: graphs are not isomorphic");
  std::vector<Point> points(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) points[u] = e.vertex_map()[iso->image[u]];
  return Embedding::construct(g, std::move(points), e.moves().moves(),
                              e.polytope().generators(), e.method());
}

namespace {

bool is_cycle_shape(const Graph& g) {
  if (g.node_count() < 3) return false;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) != 2) return false;
  }
  return properties(g).connected;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.node_count();
  return g.edge_count() == n * (n - 1) / 2;
}

class Best {
 public:
  void consider(Embedding e) {
    if (!best_ || e.dimension() < best_->dimension()) best_ = std::move(e);
  }
  bool reached(std::size_t target) const { return best_ && best_->dimension() <= target; }
  std::optional<Embedding>& get() { return best_; }

 private:
  std::optional<Embedding> best_;
};

template <class F>
void attempt(Best& best, F&& make) {
  try {
    best.consider(make());
  } catch (const CapExceeded&) {
  } catch (const MoveSetError&) {
  }
}

Embedding from_certificate(const Graph& g, const DifferenceCertificate& cert) {
  return embed_difference(g, cert.position, cert.dset);
}

Embedding chromatic_for(const Graph& g, const Effort& effort) {
  Coloring c;
  try {
    c = color(g, ColoringMode::exact, effort.exact_coloring_cap);
  } catch (const CapExceeded&) {
    c = color(g, ColoringMode::greedy);
  }
  return embed_chromatic(g, c);
}

// Upper bounds without apex recursion.
std::optional<Embedding> cheap_best(const Graph& h, const Effort& effort) {
  Best best;
  if (h.node_count() <= 1) {
    best.consider(embed_simplex(h));
    return std::move(best.get());
  }
  try {
    if (auto cert = is_difference_graph(h, effort.difference_cap)) {
      return from_certificate(h, *cert);
    }
  } catch (const CapExceeded&) {
  }
  if (is_cycle_shape(h)) {
    attempt(best, [&] { return relabel(embed_cycle(h.node_count()), h); });
  }
  if (auto parts = complete_multipartite_parts(h)) {
    attempt(best, [&] { return relabel(embed_complete_multipartite(*parts), h); });
  }
  attempt(best, [&] { return chromatic_for(h, effort); });
  if (!best.get()) attempt(best, [&] { return embed_simplex(h); });
  return std::move(best.get());
}

}  // namespace

FdimBracket fdim_bracket(const Graph& g, const Effort& effort) {
  FdimBracket out;
  const std::size_t n = g.node_count();
  if (n == 0) return out;
  if (n == 1) {
    out.upper_certificate = embed_simplex(g);
    return out;
  }

  out.lower = 1;
  const bool complete = is_complete(g);
  if (complete && ceil_log2(n) > out.lower) {
    out.lower = ceil_log2(n);
    out.lower_certificate = LowerCertificate::complete_graph_parity;
  }

  Best best;
  auto finish = [&]() {
    out.upper_certificate = std::move(best.get());
    out.upper = out.upper_certificate->dimension();
    if (out.lower > out.upper) throw InternalError("fdim bracket has lower > upper");
    return std::move(out);
  };

  if (out.lower < 2) {
    try {
      out.difference = is_difference_graph(g, effort.difference_cap);
      if (out.difference) {
        best.consider(from_certificate(g, *out.difference));
        return finish();
      }
      out.lower = 2;
      out.lower_certificate = LowerCertificate::non_difference_graph;
    } catch (const CapExceeded&) {
    }
  }

  if (is_cycle_shape(g)) attempt(best, [&] { return relabel(embed_cycle(n), g); });
  if (best.reached(out.lower)) return finish();

  if (auto parts = complete_multipartite_parts(g)) {
    attempt(best, [&] { return relabel(embed_complete_multipartite(*parts), g); });
  }
  if (best.reached(out.lower)) return finish();

  for (NodeId v = 0; v < n && !best.reached(out.lower); ++v) {
    if (auto sub = cheap_best(remove_node(g, v), effort)) {
      attempt(best, [&] { return embed_apex(g, v, *sub); });
    }
  }
  if (best.reached(out.lower)) return finish();

  attempt(best, [&] { return chromatic_for(g, effort); });
  if (!best.get()) attempt(best, [&] { return embed_simplex(g); });
  if (!best.get()) throw InternalError("no upper bound construction succeeded");

  if (out.lower <= 2 && best.get()->dimension() > 2 && effort.search_box > 0) {
    auto found = fdim_exact_search(g, 2, effort.search_box, effort.search_budget);
    if (found.embedding) best.consider(std::move(*found.embedding));
  }
  return finish();
}

namespace {

struct BudgetExhausted {};

enum class ClassStatus : char { unknown, in, out };

class ExactSearch {
 public:
  ExactSearch(const Graph& g, std::size_t d, std::int64_t box, std::uint64_t budget)
      : g_(g), n_(g.node_count()), d_(d), budget_(budget) {
    Point p(d, 0);
    while (true) {
      grid_.push_back(p);
      std::size_t i = d;
      while (i > 0 && p[i - 1] == box) p[--i] = 0;
      if (i == 0) break;
      ++p[i - 1];
    }
  }

  std::optional<Embedding> run() {
    if (choose(0)) return std::move(found_);
    return std::nullopt;
  }

  std::uint64_t visited() const { return visited_; }

 private:
  void tick() {
    if (++visited_ > budget_) throw BudgetExhausted{};
  }

  bool anchored() const {
    for (std::size_t c = 0; c < d_; ++c) {
      if (std::none_of(set_.begin(), set_.end(), [&](const Point& p) { return p[c] == 0; })) {
        return false;
      }
    }
    return true;
  }

  bool canonical() const {
    std::vector<std::size_t> perm(d_);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<Point> image;
      image.reserve(set_.size());
      for (const auto& p : set_) {
        Point q(d_);
        for (std::size_t c = 0; c < d_; ++c) q[c] = p[perm[c]];
        image.push_back(std::move(q));
      }
      std::sort(image.begin(), image.end());
      if (image < set_) return false;
    }
    return true;
  }

  bool choose(std::size_t start) {
    tick();
    if (set_.size() == n_) {
      if (!anchored() || !canonical() || affine_dimension(set_) != d_) return false;
      if (!is_normal_point_set(set_, GeometryLimits{d_, ~std::uint64_t{0}})) return false;
      return match_set();
    }
    for (std::size_t i = start; i + (n_ - set_.size()) <= grid_.size(); ++i) {
      if (set_.empty() && d_ > 0 && grid_[i][0] != 0) break;
      set_.push_back(grid_[i]);
      if (choose(i + 1)) return true;
      set_.pop_back();
    }
    return false;
  }

  bool match_set() {
    std::unordered_map<Point, std::size_t, PointHash> ids;
    classes_.clear();
    cls_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        Point diff = set_[j] - set_[i];
        auto [it, fresh] = ids.emplace(diff, classes_.size());
        if (fresh) classes_.push_back(std::move(diff));
        cls_[i * n_ + j] = cls_[j * n_ + i] = it->second;
      }
    }
    const std::size_t c = classes_.size();
    related_.assign(c * c, 0);
    for (std::size_t a = 0; a < c; ++a) {
      for (std::size_t b = 0; b < c; ++b) {
        if (a != b && multiple_factor(classes_[a], classes_[b]) != 0) {
          related_[a * c + b] = related_[b * c + a] = 1;
        }
      }
    }
    status_.assign(c, ClassStatus::unknown);
    node_at_.assign(n_, 0);
    used_.assign(n_, 0);
    return assign(0);
  }

  bool may_enter(std::size_t cl) const {
    const std::size_t c = classes_.size();
    for (std::size_t o = 0; o < c; ++o) {
      if (related_[cl * c + o] && status_[o] == ClassStatus::in) return false;
    }
    return true;
  }

  bool degrees_feasible(std::size_t placed) const {
    for (std::size_t i = 0; i < placed; ++i) {
      std::size_t sure = 0, maybe = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (j == i) continue;
        const auto s = status_[cls_[i * n_ + j]];
        if (s == ClassStatus::in) {
          ++sure;
        } else if (s == ClassStatus::unknown) {
          ++maybe;
        }
      }
      const std::size_t deg = g_.degree(node_at_[i]);
      if (deg < sure || deg > sure + maybe) return false;
    }
    return true;
  }

  bool assign(std::size_t k) {
    tick();
    if (k == n_) return build();
    for (NodeId u = 0; u < n_; ++u) {
      if (used_[u]) continue;
      std::vector<std::size_t> fixed;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t cl = cls_[j * n_ + k];
        const auto want = g_.adjacent(u, node_at_[j]) ? ClassStatus::in : ClassStatus::out;
        if (status_[cl] == ClassStatus::unknown) {
          if (want == ClassStatus::in && !may_enter(cl)) {
            ok = false;
          } else {
            status_[cl] = want;
            fixed.push_back(cl);
          }
        } else if (status_[cl] != want) {
          ok = false;
        }
      }
      node_at_[k] = u;
      if (ok && degrees_feasible(k + 1)) {
        used_[u] = 1;
        if (assign(k + 1)) return true;
        used_[u] = 0;
      }
      for (auto cl : fixed) status_[cl] = ClassStatus::unknown;
    }
    return false;
  }

  bool build() {
    std::vector<Point> points(n_);
    for (std::size_t i = 0; i < n_; ++i) points[node_at_[i]] = set_[i];
    std::vector<Point> moves;
    for (std::size_t cl = 0; cl < classes_.size(); ++cl) {
      if (status_[cl] == ClassStatus::in) moves.push_back(classes_[cl]);
    }
    found_ = Embedding::construct(g_, std::move(points), std::move(moves), set_,
                                  EmbeddingMethod::exhaustive_search);
    return true;
  }

  const Graph& g_;
  std::size_t n_, d_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<Point> grid_;
  std::vector<Point> set_;

  std::vector<Point> classes_;
  std::vector<std::size_t> cls_;
  std::vector<char> related_;
  std::vector<ClassStatus> status_;
  std::vector<NodeId> node_at_;
  std::vector<char> used_;
  std::optional<Embedding> found_;
};

}  // namespace

ExactSearchResult fdim_exact_search(const Graph& g, std::size_t d, std::int64_t box,
                                    std::uint64_t budget) {
  if (box < 0) throw InvalidInput("search box must be nonnegative");
  if (g.node_count() == 0) throw InvalidInput("exact search needs a nonempty graph");
  ExactSearchResult out;
  out.box = box;
  ExactSearch search(g, d, box, budget);
  try {
    out.embedding = search.run();
    out.status = out.embedding ? ExactSearchResult::Status::found
                               : ExactSearchResult::Status::none_in_box;
  } catch (const BudgetExhausted&) {
    out.status = ExactSearchResult::Status::budget_exceeded;
  }
  out.visited = search.visited();
  return out;
}

}  // namespace fibdim
