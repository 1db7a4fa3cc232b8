// Fraction-free elimination on polynomial matrices.
#pragma once

#include <cstddef>
#include <optional>

#include "bess/matrix.hpp"
#include "bess/polynomial.hpp"

namespace bess {

using PolyMatrix = Matrix<Polynomial>;

PolyMatrix poly_zero(const Field& field, std::size_t n_vars, std::size_t rows, std::size_t cols);

// Determinant by Bareiss elimination with full pivoting.
Polynomial poly_det(const PolyMatrix& a);

// Determinant by Laplace expansion along the sparsest row; exponential, for small sizes.
Polynomial poly_det_cofactor(const PolyMatrix& a);

// Schur complement of the trailing block: S = numerators / denominator.
struct SchurFraction {
  PolyMatrix numerators;   // split x split
  Polynomial denominator;
  Polynomial block_det;    // det of the trailing (m - split) block
};

// Eliminates pivots drawn only from the trailing block; nullopt when that block is singular.
std::optional<SchurFraction> schur_fraction(const PolyMatrix& a, std::size_t split);

}  // namespace bess
