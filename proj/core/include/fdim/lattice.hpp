#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fdim/int_matrix.hpp"

namespace fibdim {

/// An integer point of Z^d.
using Point = std::vector<std::int64_t>;

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

std::string to_string(const Point& p);

Point operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a);

/// normal . x <= rhs (inequality) or normal . x == rhs (equation).
struct Halfspace {
  std::vector<std::int64_t> normal;
  std::int64_t rhs = 0;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// H-representation: the affine hull as equations, plus one inequality per
/// facet. Every inequality is tight at one or more generators.
struct HalfspaceDescription {
  std::vector<Halfspace> equations;
  std::vector<Halfspace> facets;
};

/// Caps guarding the bounding-box scans.
struct GeometryLimits {
  std::size_t max_dim = 8;
  std::uint64_t max_box_volume = std::uint64_t{1} << 22;
};

/// An injective affine map Z^k -> Z^d, y |-> matrix * y + offset, together
/// with a left inverse certifying injectivity: left_inverse * (matrix * y) = y
/// and left_inverse * offset = 0.
struct AffineLatticeMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  /// target_dim rows, source_dim columns.
  std::vector<std::vector<std::int64_t>> matrix;
  Point offset;
  /// source_dim rows, target_dim columns.
  std::vector<std::vector<std::int64_t>> left_inverse;

  static AffineLatticeMap identity(std::size_t d);

  Point apply(std::span<const std::int64_t> y) const;
  /// left_inverse * x; only meaningful for x in the image.
  Point pull_back(std::span<const std::int64_t> x) const;
  /// Linear part only (for moves): left_inverse * m.
  Point pull_back_direction(std::span<const std::int64_t> m) const;
  bool in_image(std::span<const std::int64_t> x) const;
  /// Checks the left-inverse identities exactly.
  bool is_certified() const;
};

/// Affine hull of a nonempty point set: equations plus a parametrisation of
/// the integer points of the hull.
///
/// The parametrisation comes from the Hermite normal form of the equation
/// matrix E = (H, 0) C: integer points of {E x = e} are exactly
/// C^{-1} (H^{-1} e, y) for y in Z^k, so `lattice` is a bijection from Z^k
/// onto the integer points of the hull.
struct AffineHull {
  std::size_t dimension = 0;
  std::vector<Halfspace> equations;
  AffineLatticeMap lattice;
};

AffineHull affine_hull(std::span<const Point> points);

/// Lattice polytope given by its generators (V-representation). The
/// H-representation is computed on first use and cached; copies share the
/// cache and concurrent reads are safe.
class LatticePolytope {
 public:
  /// Generators are sorted and deduplicated. Throws InvalidInput if empty or
  /// ragged.
  explicit LatticePolytope(std::vector<Point> generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Point>& generators() const { return generators_; }

  const HalfspaceDescription& halfspaces() const;
  const AffineHull& hull() const;

  bool contains(std::span<const std::int64_t> x) const;

 private:
  struct Cache;
  std::size_t ambient_dim_ = 0;
  std::vector<Point> generators_;
  std::shared_ptr<Cache> cache_;
};

/// conv(generators) ∩ Z^d in lexicographic order.
/// Throws CapExceeded beyond `limits`.
std::vector<Point> enumerate_lattice_points(const LatticePolytope& p,
                                            const GeometryLimits& limits = {});

/// Affine dimension of the polytope.
std::size_t dimension(const LatticePolytope& p);
std::size_t affine_dimension(std::span<const Point> points);

/// conv(f) ∩ Z^d == f. The empty set is normal.
bool is_normal_point_set(std::span<const Point> f, const GeometryLimits& limits = {});

/// Full-rank sublattice of Z^d spanned by the rows of `basis`.
class Sublattice {
 public:
  /// Throws InvalidInput unless basis is d linearly independent d-vectors.
  explicit Sublattice(std::vector<Point> basis);

  static Sublattice scaled(std::size_t d, std::int64_t factor);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Point>& basis() const { return basis_; }
  /// |Z^d / L| = |det(basis)|.
  const Integer& index() const { return index_; }
  bool contains(std::span<const std::int64_t> v) const;

 private:
  std::vector<Point> basis_;
  Integer index_;
  // Inverse of the basis matrix (rows = basis vectors), transposed.
  std::vector<std::vector<Rational>> coords_;
};

struct QuotientCheck {
  bool distinct = false;
  Integer bound;
};

/// Whether no two distinct points differ by a vector of `l`. When distinct,
/// |points| <= |Z^d / L| is checked and a violation raises InternalError.
QuotientCheck lattice_quotient_distinct(std::span<const Point> points,
                                        const Sublattice& l);

}  // namespace fibdim
