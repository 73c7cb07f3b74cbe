#pragma once

#include "fdim/int_matrix.hpp"

namespace fibdim {

/// B = (H, 0) * C with C unimodular.
///
/// H is n x n lower triangular with positive diagonal; every entry left of
/// the diagonal satisfies 0 <= H(i, j) < H(i, i).
struct HnfDecomposition {
  IntMatrix h;
  IntMatrix c;
  /// C^{-1}; integral because C is unimodular.
  IntMatrix c_inverse;
};

/// Column-style Hermite normal form of a full-row-rank integer matrix.
/// Throws InvalidInput when the rows are linearly dependent.
HnfDecomposition hermite_normal_form(const IntMatrix& b);

}  // namespace fibdim
