// Pencil combinators: each builds a pencil whose Schur complement is a fixed
// algebraic function of the input Schur complements.
#pragma once

#include <cstddef>

#include "bess/pencil.hpp"

namespace bess {

// Eager checks verify invertibility preconditions by exact determinants;
// deferred skips them so a pipeline can be verified once at the end.
enum class Checks { eager, deferred };

// Schur: lambda * (A/A22).
LinearPencil op_scale(const LinearPencil& p, const FieldElement& lambda, Checks checks = Checks::eager);
// Schur: A/A22 + B/B22.
LinearPencil op_add(const LinearPencil& a, const LinearPencil& b, Checks checks = Checks::eager);
// Schur: A/A22 + (A/A22)^T.
LinearPencil op_symmetrize(const LinearPencil& p, Checks checks = Checks::eager);
// Schur: U (A/A22) V with U l x k and V k x l.
LinearPencil op_sandwich(const ConstMatrix& u, const LinearPencil& p, const ConstMatrix& v,
                         Checks checks = Checks::eager);
// Schur: (A/A22) X^{-1} (B/B22) for an invertible k x k linear matrix X.
LinearPencil op_product(const LinearPencil& a, const LinearMatrix& x, const LinearPencil& b,
                        Checks checks = Checks::eager);
// Schur: (A/A22)^{-1}.
LinearPencil op_inverse(const LinearPencil& p, Checks checks = Checks::eager);
// Schur: (A/A22) kron I_l.
LinearPencil op_kron_identity(const LinearPencil& p, std::size_t l, Checks checks = Checks::eager);
// Schur: z_{n+1} (A/A22)(z / z_{n+1}); the result is homogeneous.
LinearPencil op_homogenize(const LinearPencil& p, Checks checks = Checks::eager);

}  // namespace bess
