#include "fdim/hnf.hpp"

#include <utility>

#include "fdim/errors.hpp"

namespace fibdim {

namespace {

// Tracks A = B * U together with U and U^{-1} under unimodular column
// operations on A.
struct ColumnReducer {
  IntMatrix a;
  IntMatrix u;
  IntMatrix u_inv;

  // (col_i, col_j) <- (col_i, col_j) * [[p, -y], [q, x]], det = p*x + q*y = 1.
  // Inverse acts on rows of U^{-1}: (row_i, row_j) <- [[x, y], [-q, p]].
  void combine(std::size_t i, std::size_t j, const Integer& p, const Integer& q,
               const Integer& x, const Integer& y) {
    auto cols = [&](IntMatrix& m) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        const Integer ci = m(r, i);
        const Integer cj = m(r, j);
        m(r, i) = p * ci + q * cj;
        m(r, j) = -y * ci + x * cj;
      }
    };
    cols(a);
    cols(u);
    for (std::size_t c = 0; c < u_inv.cols(); ++c) {
      const Integer ri = u_inv(i, c);
      const Integer rj = u_inv(j, c);
      u_inv(i, c) = x * ri + y * rj;
      u_inv(j, c) = -q * ri + p * rj;
    }
  }

  void negate(std::size_t i) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = -a(r, i);
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, i) = -u(r, i);
    for (std::size_t c = 0; c < u_inv.cols(); ++c) u_inv(i, c) = -u_inv(i, c);
  }

  // col_j <- col_j - f * col_i; inverse: row_i <- row_i + f * row_j.
  void subtract(std::size_t j, std::size_t i, const Integer& f) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, j) -= f * a(r, i);
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, j) -= f * u(r, i);
    for (std::size_t c = 0; c < u_inv.cols(); ++c) u_inv(i, c) += f * u_inv(j, c);
  }
};

}  // namespace

HnfDecomposition hermite_normal_form(const IntMatrix& b) {
  const std::size_t n = b.rows();
  const std::size_t k = b.cols();
  if (n > k) throw InvalidInput("hermite_normal_form: more rows than columns");
  ColumnReducer red{b, IntMatrix::identity(k), IntMatrix::identity(k)};

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Integer a = red.a(i, i);
      const Integer c = red.a(i, j);
      if (c == 0) continue;
      Integer g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
                 c.get_mpz_t());
      // new col_i has entry p*a + q*c = g; new col_j has -(c/g)*a + (a/g)*c = 0.
      red.combine(i, j, p, q, Integer(a / g), Integer(c / g));
    }
    if (red.a(i, i) == 0) {
      throw InvalidInput("hermite_normal_form: matrix does not have full row rank");
    }
    if (red.a(i, i) < 0) red.negate(i);
    for (std::size_t j = 0; j < i; ++j) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), red.a(i, j).get_mpz_t(), red.a(i, i).get_mpz_t());
      if (f != 0) red.subtract(j, i, f);
    }
  }

  HnfDecomposition out;
  out.h = red.a.col_block(0, n);
  out.c = std::move(red.u_inv);
  out.c_inverse = std::move(red.u);
  return out;
}

}  // namespace fibdim
