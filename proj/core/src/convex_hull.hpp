#pragma once

#include <span>
#include <vector>

#include "fdim/lattice.hpp"

namespace fibdim::detail {

/// Facets of conv(points) for points affinely spanning Z^d (d >= 1), as
/// primitive integer inequalities normal . x <= rhs, sorted.
std::vector<Halfspace> facets_full_dimensional(std::span<const Point> points);

}  // namespace fibdim::detail
