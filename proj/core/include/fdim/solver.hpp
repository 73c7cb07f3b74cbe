#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fdim/difference_graph.hpp"
#include "fdim/embedding.hpp"
#include "fdim/graph.hpp"

namespace fibdim {

/// Why the lower bound holds.
enum class LowerCertificate {
  /// fdim >= 0, or >= 1 once there are two nodes.
  node_count,
  /// The complete difference-graph search failed, so fdim >= 2.
  non_difference_graph,
  /// K_n: the n points of a complete fiber graph lie in distinct classes of
  /// Z^d / 2Z^d, so 2^d >= n.
  complete_graph_parity,
};

std::string_view to_string(LowerCertificate c);

struct FdimBracket {
  std::size_t lower = 0;
  std::size_t upper = 0;
  LowerCertificate lower_certificate = LowerCertificate::node_count;
  /// Absent only for the graph with no nodes.
  std::optional<Embedding> upper_certificate;
  /// Present when the difference-graph search found one.
  std::optional<DifferenceCertificate> difference;

  bool exact() const { return lower == upper; }
};

struct Effort {
  std::size_t difference_cap = kDefaultDifferenceCap;
  std::size_t exact_coloring_cap = kDefaultExactColoringCap;
  /// Side length of the box for the d = 2 exhaustive search; 0 disables it.
  std::int64_t search_box = 2;
  std::uint64_t search_budget = 2'000'000;
  GeometryLimits limits = kEmbeddingLimits;
};

/// Certified bounds on fdim(g). Budget exhaustion loosens the bracket but
/// never invalidates it.
FdimBracket fdim_bracket(const Graph& g, const Effort& effort = {});

struct ExactSearchResult {
  enum class Status { found, none_in_box, budget_exceeded };
  Status status = Status::none_in_box;
  std::optional<Embedding> embedding;
  /// The box searched. none_in_box says nothing about larger boxes.
  std::int64_t box = 0;
  std::uint64_t visited = 0;
};

std::string_view to_string(ExactSearchResult::Status s);

/// Tries every normal point set of node_count points in [0, box]^d that is
/// full-dimensional, touches 0 in each coordinate and is canonical under
/// coordinate permutations, and every bijection onto it whose matched
/// differences form a valid move set realising g exactly.
ExactSearchResult fdim_exact_search(const Graph& g, std::size_t d, std::int64_t box,
                                    std::uint64_t budget = 2'000'000);

/// Sizes of the parts if g is complete multipartite (parts in order of their
/// smallest node), otherwise nullopt.
std::optional<std::vector<std::size_t>> complete_multipartite_parts(const Graph& g);

/// An equivalent embedding whose graph is exactly g. Throws InvalidInput if
/// g is not isomorphic to e.graph().
Embedding relabel(const Embedding& e, const Graph& g);

}  // namespace fibdim
