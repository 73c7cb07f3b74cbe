// Facet enumeration for full-dimensional point sets by the double description
// method, in exact integer arithmetic.

#include "convex_hull.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <tuple>

#include "fdim/errors.hpp"

namespace fibdim::detail {

namespace {

using Vec = std::vector<Integer>;

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
    return out;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Vec v;
  Bitset zero;
};

Integer dot(const Vec& a, const Vec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(Vec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Row of the homogenised constraint b - a.v >= 0 on (b, a).
Vec constraint_row(const Point& v) {
  Vec row(v.size() + 1);
  row[0] = 1;
  for (std::size_t i = 0; i < v.size(); ++i) row[i + 1] = Integer(static_cast<long>(-v[i]));
  return row;
}

}  // namespace

std::vector<Halfspace> facets_full_dimensional(std::span<const Point> points) {
  if (points.empty()) throw InvalidInput("facet computation needs points");
  const std::size_t d = points.front().size();
  const std::size_t dim = d + 1;
  if (d == 0) return {};

  std::vector<Vec> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(constraint_row(p));
  const std::size_t m = rows.size();

  // Greedily pick dim linearly independent rows for the initial simplicial cone.
  std::vector<std::size_t> basis_rows;
  {
    std::vector<std::vector<Rational>> echelon;
    std::vector<std::size_t> pivot_col;
    for (std::size_t r = 0; r < m && basis_rows.size() < dim; ++r) {
      std::vector<Rational> x(rows[r].begin(), rows[r].end());
      for (std::size_t e = 0; e < echelon.size(); ++e) {
        const Rational f = x[pivot_col[e]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < dim; ++c) x[c] -= f * echelon[e][c];
      }
      std::size_t pc = 0;
      while (pc < dim && x[pc] == 0) ++pc;
      if (pc == dim) continue;
      const Rational inv = 1 / x[pc];
      for (auto& c : x) c *= inv;
      // Keep echelon rows reduced against each other at the new pivot.
      for (auto& er : echelon) {
        const Rational f = er[pc];
        if (f == 0) continue;
        for (std::size_t c = 0; c < dim; ++c) er[c] -= f * x[c];
      }
      echelon.push_back(std::move(x));
      pivot_col.push_back(pc);
      basis_rows.push_back(r);
    }
  }
  if (basis_rows.size() != dim) {
    throw InvalidInput("facets_full_dimensional: points are not full-dimensional");
  }

  // Initial rays: columns of the inverse of the chosen square block.
  std::vector<Ray> rays;
  {
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(2 * dim));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t c = 0; c < dim; ++c) a[i][c] = rows[basis_rows[i]][c];
      a[i][dim + i] = 1;
    }
    for (std::size_t c = 0; c < dim; ++c) {
      std::size_t p = c;
      while (a[p][c] == 0) ++p;
      std::swap(a[p], a[c]);
      const Rational inv = 1 / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (std::size_t r = 0; r < dim; ++r) {
        if (r == c || a[r][c] == 0) continue;
        const Rational f = a[r][c];
        for (std::size_t j = 0; j < 2 * dim; ++j) a[r][j] -= f * a[c][j];
      }
    }
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<Rational> col(dim);
      for (std::size_t i = 0; i < dim; ++i) col[i] = a[i][dim + j];
      Integer scale = 1;
      for (const auto& x : col) scale = lcm(scale, Integer(x.get_den()));
      Ray ray{Vec(dim), Bitset(m)};
      for (std::size_t i = 0; i < dim; ++i) ray.v[i] = Integer(col[i] * scale);
      make_primitive(ray.v);
      rays.push_back(std::move(ray));
    }
  }

  std::vector<char> processed(m, 0);
  for (auto r : basis_rows) processed[r] = 1;
  for (auto& ray : rays) {
    for (auto r : basis_rows) {
      if (dot(rows[r], ray.v) == 0) ray.zero.set(r);
    }
  }

  for (std::size_t r = 0; r < m; ++r) {
    if (processed[r]) continue;
    processed[r] = 1;
    std::vector<std::size_t> pos, neg;
    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(rows[r], rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
      else rays[i].zero.set(r);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] >= 0) next.push_back(rays[i]);
    }
    for (auto p : pos) {
      for (auto q : neg) {
        const Bitset common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          if (common.subset_of(rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr{Vec(dim), common};
        for (std::size_t c = 0; c < dim; ++c) {
          nr.v[c] = val[p] * rays[q].v[c] - val[q] * rays[p].v[c];
        }
        make_primitive(nr.v);
        nr.zero.set(r);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  std::vector<Halfspace> out;
  for (const auto& ray : rays) {
    bool trivial = true;
    for (std::size_t c = 1; c < dim; ++c) trivial = trivial && ray.v[c] == 0;
    if (trivial) continue;
    Halfspace h;
    h.rhs = to_int64(ray.v[0]);
    h.normal.resize(d);
    for (std::size_t c = 0; c < d; ++c) h.normal[c] = to_int64(ray.v[c + 1]);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Halfspace& a, const Halfspace& b) {
    return std::tie(a.normal, a.rhs) < std::tie(b.normal, b.rhs);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fibdim::detail
