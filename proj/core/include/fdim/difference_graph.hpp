#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fdim/graph.hpp"

namespace fibdim {

/// Witness that g ≅ D(n, dset): node u sits at position[u] in [1, n] and
/// u ~ v iff |position[u] - position[v]| is in dset.
struct DifferenceCertificate {
  std::size_t n = 0;
  std::vector<std::int64_t> dset;
  std::vector<std::int64_t> position;
};

/// No element of `dset` divides another. Elements must be positive.
bool is_anti_divisible(std::span<const std::int64_t> dset);

/// D(n, dset) with node i at position i + 1. Throws InvalidInput unless dset
/// is an anti-divisible subset of [1, n - 1].
Graph difference_graph(std::size_t n, std::span<const std::int64_t> dset);

bool check_difference_certificate(const Graph& g, const DifferenceCertificate& cert);

inline constexpr std::size_t kDefaultDifferenceCap = 10;

/// Complete search over node orderings; nullopt is a proof that g is not a
/// difference graph. Throws CapExceeded above `cap` nodes.
std::optional<DifferenceCertificate> is_difference_graph(
    const Graph& g, std::size_t cap = kDefaultDifferenceCap);

}  // namespace fibdim
