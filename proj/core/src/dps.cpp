#include "fdim/dps.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "fdim/errors.hpp"

namespace fibdim {

namespace {

std::vector<Point> sorted_unique(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::size_t distinct_sum_count(const std::vector<Point>& points) {
  std::unordered_set<Point, PointHash> sums;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) sums.insert(points[i] + points[j]);
  }
  return sums.size();
}

}  // namespace

DpsCheck is_distinct_pair_sum(std::span<const Point> points, const GeometryLimits& limits) {
  const auto pts = sorted_unique({points.begin(), points.end()});
  const std::size_t n = pts.size();
  DpsCheck out;
  out.sums_distinct = distinct_sum_count(pts) == n * (n - 1) / 2 + n;
  out.normal = is_normal_point_set(pts, limits);
  out.dps = out.normal && out.sums_distinct;
  return out;
}

DpsPointSet::DpsPointSet(std::vector<Point> points, const GeometryLimits& limits)
    : points_(sorted_unique(std::move(points))) {
  if (points_.empty()) throw InvalidInput("DPS point set must be nonempty");
  const std::size_t d = points_.front().size();
  for (const auto& p : points_) {
    if (p.size() != d) throw InvalidInput("DPS points of mixed dimension");
  }
  const DpsCheck check = is_distinct_pair_sum(points_, limits);
  if (!check.normal) throw InvalidInput("point set is not normal");
  if (!check.sums_distinct) throw InvalidInput("point set has a repeated pair sum");
  pair_sum_count_ = distinct_sum_count(points_);
}

Embedding embed_dps(const Graph& g, const DpsPointSet& dps) {
  if (g.node_count() != dps.size()) {
    throw InvalidInput("embed_dps: graph has " + std::to_string(g.node_count()) +
                       " nodes but the DPS set has " + std::to_string(dps.size()) + " points");
  }
  const auto& points = dps.points();
  std::vector<Point> moves;
  for (const auto& [u, v] : g.edges()) moves.push_back(points[u] - points[v]);
  return Embedding::construct(g, points, std::move(moves), points, EmbeddingMethod::dps);
}

namespace {

class DpsSearch {
 public:
  DpsSearch(std::size_t n, std::size_t d, std::int64_t box, std::uint64_t budget)
      : n_(n), d_(d), budget_(budget) {
    // Grid in lexicographic order.
    Point p(d, 0);
    while (true) {
      grid_.push_back(p);
      std::size_t i = d;
      while (i > 0 && p[i - 1] == box) p[--i] = 0;
      if (i == 0) break;
      ++p[i - 1];
    }
  }

  std::optional<std::vector<Point>> run() {
    if (n_ == 0) return std::vector<Point>{};
    if (run_from(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool anchored() const {
    for (std::size_t c = 0; c < d_; ++c) {
      bool hit = false;
      for (const auto& p : chosen_) hit = hit || p[c] == 0;
      if (!hit) return false;
    }
    return true;
  }

  bool run_from(std::size_t start) {
    if (++visited_ > budget_) throw CapExceeded("DPS search exceeded its budget");
    if (chosen_.size() == n_) {
      return anchored() && is_normal_point_set(chosen_, GeometryLimits{d_, ~std::uint64_t{0}});
    }
    for (std::size_t i = start; i + (n_ - chosen_.size()) <= grid_.size(); ++i) {
      const Point& p = grid_[i];
      // The lexicographic minimum has first coordinate 0.
      if (chosen_.empty() && d_ > 0 && p[0] != 0) break;
      std::vector<Point> added;
      bool ok = sums_.insert(p + p).second;
      if (ok) added.push_back(p + p);
      for (std::size_t j = 0; ok && j < chosen_.size(); ++j) {
        Point s = p + chosen_[j];
        ok = sums_.insert(s).second;
        if (ok) added.push_back(std::move(s));
      }
      if (ok) {
        chosen_.push_back(p);
        if (run_from(i + 1)) return true;
        chosen_.pop_back();
      }
      for (const auto& s : added) sums_.erase(s);
    }
    return false;
  }

  std::size_t n_, d_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<Point> grid_;
  std::vector<Point> chosen_;
  std::unordered_set<Point, PointHash> sums_;
};

}  // namespace

std::optional<DpsPointSet> find_dps_point_set(std::size_t n, std::size_t d, std::int64_t box,
                                              std::uint64_t budget) {
  if (box < 0) throw InvalidInput("search box must be nonnegative");
  if (n == 0) throw InvalidInput("DPS search needs n >= 1");
  DpsSearch search(n, d, box, budget);
  auto found = search.run();
  if (!found) return std::nullopt;
  return DpsPointSet(std::move(*found), GeometryLimits{d, ~std::uint64_t{0}});
}

}  // namespace fibdim
