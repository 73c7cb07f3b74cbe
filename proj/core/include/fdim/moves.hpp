#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "fdim/errors.hpp"
#include "fdim/lattice.hpp"

namespace fibdim {

/// A set of moves: finite, symmetric (m in M iff -m in M), free of zero and
/// of positive multiples (lambda * m not in M for lambda >= 2).
///
/// Both signs are stored. size() counts both, matching |M|.
class MoveSet {
 public:
  /// Empty move set in Z^d.
  explicit MoveSet(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }
  bool contains(const Point& m) const { return lookup_.count(m) != 0; }

  /// All moves, lexicographically sorted.
  const std::vector<Point>& moves() const { return moves_; }
  /// One representative per {m, -m}: the lexicographically positive one.
  std::vector<Point> positive_representatives() const;

  friend bool operator==(const MoveSet& a, const MoveSet& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.moves_ == b.moves_;
  }

 private:
  friend MoveSet validate_move_set(std::size_t, std::vector<Point>);
  std::size_t ambient_dim_ = 0;
  std::vector<Point> moves_;
  std::unordered_set<Point, PointHash> lookup_;
};

/// Which move-set axiom a candidate violates.
class MoveSetError : public InvalidInput {
 public:
  enum class Kind { zero_vector, asymmetric, multiple, dimension };

  MoveSetError(Kind kind, std::string message, Point move, Point other = {},
               std::int64_t factor = 0)
      : InvalidInput(std::move(message)),
        kind_(kind),
        move_(std::move(move)),
        other_(std::move(other)),
        factor_(factor) {}

  Kind kind() const { return kind_; }
  /// The offending vector (the unmatched one, or the multiple).
  const Point& move() const { return move_; }
  /// For Kind::multiple: the base m with move() == factor() * m.
  const Point& base() const { return other_; }
  std::int64_t factor() const { return factor_; }

 private:
  Kind kind_;
  Point move_;
  Point other_;
  std::int64_t factor_;
};

/// Validates the move-set axioms; duplicates collapse. Throws MoveSetError.
MoveSet validate_move_set(std::size_t ambient_dim, std::vector<Point> candidate);

/// Adds -m for every m, then validates.
MoveSet symmetric_move_set(std::size_t ambient_dim, std::vector<Point> generators);

/// Lexicographically positive: first nonzero coordinate > 0.
bool is_positive(const Point& m);

/// m == lambda * base for some integer lambda >= 2; returns lambda or 0.
std::int64_t multiple_factor(const Point& m, const Point& base);

}  // namespace fibdim
