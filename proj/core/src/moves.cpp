#include "fdim/moves.hpp"

#include <algorithm>

namespace fibdim {

bool is_positive(const Point& m) {
  for (auto x : m) {
    if (x != 0) return x > 0;
  }
  return false;
}

std::int64_t multiple_factor(const Point& m, const Point& base) {
  std::int64_t lambda = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (base[i] == 0) {
      if (m[i] != 0) return 0;
      continue;
    }
    if (m[i] % base[i] != 0) return 0;
    const std::int64_t q = m[i] / base[i];
    if (q == 0) return 0;
    if (lambda == 0) lambda = q;
    if (q != lambda) return 0;
  }
  return lambda >= 2 ? lambda : 0;
}

std::vector<Point> MoveSet::positive_representatives() const {
  std::vector<Point> out;
  for (const auto& m : moves_) {
    if (is_positive(m)) out.push_back(m);
  }
  return out;
}

MoveSet validate_move_set(std::size_t ambient_dim, std::vector<Point> candidate) {
  std::sort(candidate.begin(), candidate.end());
  candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
  MoveSet out(ambient_dim);
  for (const auto& m : candidate) {
    if (m.size() != ambient_dim) {
      throw MoveSetError(MoveSetError::Kind::dimension,
                         "move " + to_string(m) + " is not in Z^" +
                             std::to_string(ambient_dim),
                         m);
    }
    if (std::all_of(m.begin(), m.end(), [](auto x) { return x == 0; })) {
      throw MoveSetError(MoveSetError::Kind::zero_vector, "zero vector is not a move", m);
    }
    out.lookup_.insert(m);
  }
  for (const auto& m : candidate) {
    if (!out.lookup_.count(-m)) {
      throw MoveSetError(MoveSetError::Kind::asymmetric,
                         "move " + to_string(m) + " has no negative " + to_string(-m), m);
    }
  }
  for (const auto& m : candidate) {
    for (const auto& base : candidate) {
      if (const auto lambda = multiple_factor(m, base); lambda != 0) {
        throw MoveSetError(MoveSetError::Kind::multiple,
                           "move " + to_string(m) + " = " + std::to_string(lambda) +
                               " * " + to_string(base),
                           m, base, lambda);
      }
    }
  }
  out.moves_ = std::move(candidate);
  return out;
}

MoveSet symmetric_move_set(std::size_t ambient_dim, std::vector<Point> generators) {
  const std::size_t n = generators.size();
  for (std::size_t i = 0; i < n; ++i) generators.push_back(-generators[i]);
  return validate_move_set(ambient_dim, std::move(generators));
}

}  // namespace fibdim
