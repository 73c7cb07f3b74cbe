#include "fdim/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "convex_hull.hpp"
#include "fdim/errors.hpp"
#include "fdim/hnf.hpp"

namespace fibdim {

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ p.size();
  for (auto x : p) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

Point operator-(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Point operator+(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Point operator-(const Point& a) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

namespace {

__extension__ using i128 = __int128;

i128 dot128(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<i128>(a[i]) * b[i];
  return s;
}

Point mat_vec(const std::vector<std::vector<std::int64_t>>& m,
              std::span<const std::int64_t> x) {
  Point out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    const i128 v = dot128(m[r], x);
    if (v > INT64_MAX || v < INT64_MIN) throw CapExceeded("coordinate overflow");
    out[r] = static_cast<std::int64_t>(v);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = to_int64(m(r, c));
  }
  return out;
}

void check_points(std::span<const Point> points) {
  if (points.empty()) throw InvalidInput("empty point set");
  const std::size_t d = points.front().size();
  for (const auto& p : points) {
    if (p.size() != d) throw InvalidInput("points of mixed dimension");
  }
}

}  // namespace

AffineLatticeMap AffineLatticeMap::identity(std::size_t d) {
  AffineLatticeMap m;
  m.source_dim = m.target_dim = d;
  m.matrix.assign(d, std::vector<std::int64_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i) m.matrix[i][i] = 1;
  m.left_inverse = m.matrix;
  m.offset.assign(d, 0);
  return m;
}

Point AffineLatticeMap::apply(std::span<const std::int64_t> y) const {
  if (y.size() != source_dim) throw InvalidInput("affine map: wrong source dimension");
  Point x = mat_vec(matrix, y);
  for (std::size_t i = 0; i < target_dim; ++i) x[i] += offset[i];
  return x;
}

Point AffineLatticeMap::pull_back(std::span<const std::int64_t> x) const {
  if (x.size() != target_dim) throw InvalidInput("affine map: wrong target dimension");
  return mat_vec(left_inverse, x);
}

Point AffineLatticeMap::pull_back_direction(std::span<const std::int64_t> m) const {
  return pull_back(m);
}

bool AffineLatticeMap::in_image(std::span<const std::int64_t> x) const {
  const Point back = apply(pull_back(x));
  return std::equal(back.begin(), back.end(), x.begin(), x.end());
}

bool AffineLatticeMap::is_certified() const {
  if (matrix.size() != target_dim || left_inverse.size() != source_dim ||
      offset.size() != target_dim) {
    return false;
  }
  for (std::size_t i = 0; i < source_dim; ++i) {
    for (std::size_t j = 0; j < source_dim; ++j) {
      i128 s = 0;
      for (std::size_t t = 0; t < target_dim; ++t) {
        s += static_cast<i128>(left_inverse[i][t]) * matrix[t][j];
      }
      if (s != (i == j ? 1 : 0)) return false;
    }
    if (dot128(left_inverse[i], offset) != 0) return false;
  }
  return true;
}

AffineHull affine_hull(std::span<const Point> points) {
  check_points(points);
  const std::size_t d = points.front().size();
  const Point& base = points.front();

  IntMatrix directions(points.size() - 1, d);
  for (std::size_t r = 1; r < points.size(); ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      directions(r - 1, c) = Integer(static_cast<long>(points[r][c] - base[c]));
    }
  }
  // Normals of the hull: rational kernel of the direction matrix.
  const auto normals = rational_kernel(directions);
  const std::size_t n = normals.size();
  IntMatrix eq(n, d);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) eq(r, c) = normals[r][c];
  }

  AffineHull hull;
  hull.dimension = d - n;
  for (std::size_t r = 0; r < n; ++r) {
    Halfspace h;
    h.normal.resize(d);
    Integer rhs = 0;
    for (std::size_t c = 0; c < d; ++c) {
      h.normal[c] = to_int64(eq(r, c));
      rhs += eq(r, c) * Integer(static_cast<long>(base[c]));
    }
    h.rhs = to_int64(rhs);
    hull.equations.push_back(std::move(h));
  }

  const HnfDecomposition hnf = hermite_normal_form(eq);
  // C * base = (z, y0); the integer points of the hull are C^{-1} (z, y).
  IntMatrix base_col(d, 1);
  for (std::size_t c = 0; c < d; ++c) base_col(c, 0) = Integer(static_cast<long>(base[c]));
  const IntMatrix cb = hnf.c * base_col;
  IntMatrix z_col(d, 1);
  for (std::size_t r = 0; r < n; ++r) z_col(r, 0) = cb(r, 0);
  const IntMatrix offset = hnf.c_inverse * z_col;

  AffineLatticeMap& map = hull.lattice;
  map.source_dim = d - n;
  map.target_dim = d;
  map.matrix = to_rows(hnf.c_inverse.col_block(n, d - n));
  map.left_inverse = to_rows(hnf.c.row_block(n, d - n));
  map.offset.resize(d);
  for (std::size_t c = 0; c < d; ++c) map.offset[c] = to_int64(offset(c, 0));
  if (!map.is_certified()) throw InternalError("affine hull map failed certification");
  return hull;
}

struct LatticePolytope::Cache {
  std::once_flag once;
  AffineHull hull;
  HalfspaceDescription halfspaces;
};

LatticePolytope::LatticePolytope(std::vector<Point> generators)
    : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  check_points(generators_);
  ambient_dim_ = generators_.front().size();
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

namespace {

void compute_halfspaces(const std::vector<Point>& generators, AffineHull& hull,
                        HalfspaceDescription& out) {
  hull = affine_hull(generators);
  out.equations = hull.equations;
  if (hull.dimension == 0) return;
  std::vector<Point> local;
  local.reserve(generators.size());
  for (const auto& g : generators) local.push_back(hull.lattice.pull_back(g));
  const auto local_facets = detail::facets_full_dimensional(local);
  const std::size_t d = generators.front().size();
  const auto& lift = hull.lattice.left_inverse;
  for (const auto& f : local_facets) {
    // a . (L x) <= b  ==  (a^T L) . x <= b on the hull.
    std::vector<Integer> normal(d, Integer(0));
    for (std::size_t i = 0; i < f.normal.size(); ++i) {
      for (std::size_t c = 0; c < d; ++c) {
        normal[c] += Integer(static_cast<long>(f.normal[i])) *
                     Integer(static_cast<long>(lift[i][c]));
      }
    }
    Integer rhs(static_cast<long>(f.rhs));
    Integer g = rhs;
    for (const auto& x : normal) g = gcd(g, x);
    Halfspace h;
    h.normal.resize(d);
    for (std::size_t c = 0; c < d; ++c) {
      h.normal[c] = to_int64(g > 1 ? Integer(normal[c] / g) : normal[c]);
    }
    h.rhs = to_int64(g > 1 ? Integer(rhs / g) : rhs);
    out.facets.push_back(std::move(h));
  }
}

}  // namespace

const HalfspaceDescription& LatticePolytope::halfspaces() const {
  std::call_once(cache_->once, [this] {
    compute_halfspaces(generators_, cache_->hull, cache_->halfspaces);
  });
  return cache_->halfspaces;
}

const AffineHull& LatticePolytope::hull() const {
  halfspaces();
  return cache_->hull;
}

bool LatticePolytope::contains(std::span<const std::int64_t> x) const {
  if (x.size() != ambient_dim_) return false;
  const auto& hs = halfspaces();
  for (const auto& e : hs.equations) {
    if (dot128(e.normal, x) != e.rhs) return false;
  }
  for (const auto& f : hs.facets) {
    if (dot128(f.normal, x) > f.rhs) return false;
  }
  return true;
}

std::vector<Point> enumerate_lattice_points(const LatticePolytope& p,
                                            const GeometryLimits& limits) {
  const std::size_t d = p.ambient_dim();
  if (d > limits.max_dim) {
    throw CapExceeded("lattice point enumeration limited to dimension " +
                      std::to_string(limits.max_dim) + ", polytope lives in dimension " +
                      std::to_string(d));
  }
  Point lo = p.generators().front(), hi = lo;
  for (const auto& g : p.generators()) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], g[i]);
      hi[i] = std::max(hi[i], g[i]);
    }
  }
  std::uint64_t volume = 1;
  for (std::size_t i = 0; i < d; ++i) {
    const auto width = static_cast<std::uint64_t>(hi[i] - lo[i]) + 1;
    if (width > limits.max_box_volume || volume > limits.max_box_volume / width) {
      throw CapExceeded("bounding box too large for enumeration (box " +
                        to_string(lo) + " .. " + to_string(hi) + ")");
    }
    volume *= width;
  }

  std::vector<Point> out;
  Point x = lo;
  for (;;) {
    if (p.contains(x)) out.push_back(x);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return out;
    }
    if (d == 0) return out;
  }
}

std::size_t dimension(const LatticePolytope& p) { return p.hull().dimension; }

std::size_t affine_dimension(std::span<const Point> points) {
  check_points(points);
  const std::size_t d = points.front().size();
  IntMatrix directions(points.size() - 1, d);
  for (std::size_t r = 1; r < points.size(); ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      directions(r - 1, c) = Integer(static_cast<long>(points[r][c] - points[0][c]));
    }
  }
  return rank(directions);
}

bool is_normal_point_set(std::span<const Point> f, const GeometryLimits& limits) {
  if (f.empty()) return true;
  std::vector<Point> pts(f.begin(), f.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const LatticePolytope p(pts);
  return enumerate_lattice_points(p, limits) == pts;
}

Sublattice::Sublattice(std::vector<Point> basis) : basis_(std::move(basis)) {
  const std::size_t d = basis_.size();
  for (const auto& b : basis_) {
    if (b.size() != d) throw InvalidInput("sublattice basis must be d vectors in Z^d");
  }
  const IntMatrix m = IntMatrix::from_rows(basis_, d);
  index_ = abs(determinant(m));
  if (index_ == 0) throw InvalidInput("sublattice basis is not full rank");

  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t c = 0; c < d; ++c) a[i][c] = Integer(static_cast<long>(basis_[i][c]));
    a[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * d; ++j) a[r][j] -= f * a[c][j];
    }
  }
  coords_.assign(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) coords_[i][j] = a[i][d + j];
  }
}

Sublattice Sublattice::scaled(std::size_t d, std::int64_t factor) {
  std::vector<Point> basis(d, Point(d, 0));
  for (std::size_t i = 0; i < d; ++i) basis[i][i] = factor;
  return Sublattice(std::move(basis));
}

bool Sublattice::contains(std::span<const std::int64_t> v) const {
  // v = lambda * B  <=>  lambda = v * B^{-1}.
  const std::size_t d = basis_.size();
  if (v.size() != d) return false;
  for (std::size_t j = 0; j < d; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i) s += Rational(static_cast<long>(v[i])) * coords_[i][j];
    if (s.get_den() != 1) return false;
  }
  return true;
}

QuotientCheck lattice_quotient_distinct(std::span<const Point> points,
                                        const Sublattice& l) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  QuotientCheck out;
  out.bound = l.index();
  out.distinct = true;
  for (std::size_t i = 0; i < pts.size() && out.distinct; ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (l.contains(pts[i] - pts[j])) {
        out.distinct = false;
        break;
      }
    }
  }
  if (out.distinct && Integer(static_cast<unsigned long>(pts.size())) > out.bound) {
    throw InternalError("discrete Blichfeldt bound violated");
  }
  return out;
}

}  // namespace fibdim
