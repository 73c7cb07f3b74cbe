#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fdim/embedding.hpp"
#include "fdim/lattice.hpp"

namespace fibdim {

struct DpsCheck {
  bool normal = false;
  bool sums_distinct = false;
  bool dps = false;
};

/// Duplicate points are collapsed first.
DpsCheck is_distinct_pair_sum(std::span<const Point> points,
                              const GeometryLimits& limits = {});

/// A normal point set whose n points have C(n, 2) + n distinct pair sums
/// (each point may be paired with itself).
class DpsPointSet {
 public:
  /// Throws InvalidInput unless `points` is a DPS set.
  explicit DpsPointSet(std::vector<Point> points, const GeometryLimits& limits = {});

  /// Sorted lexicographically.
  const std::vector<Point>& points() const { return points_; }
  std::size_t pair_sum_count() const { return pair_sum_count_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<Point> points_;
  std::size_t pair_sum_count_ = 0;
};

/// Node i goes to the i-th point in lexicographic order; moves are the edge
/// differences. Throws InvalidInput if the sizes differ.
Embedding embed_dps(const Graph& g, const DpsPointSet& dps);

inline constexpr std::uint64_t kDefaultDpsBudget = 50'000'000;

/// Exhaustive search for an n-point DPS set in [0, box]^d with every
/// coordinate attaining 0. nullopt means none exists in the box; CapExceeded
/// means the budget ran out first.
std::optional<DpsPointSet> find_dps_point_set(std::size_t n, std::size_t d, std::int64_t box,
                                              std::uint64_t budget = kDefaultDpsBudget);

}  // namespace fibdim
