// Independent correctness checks for realizations.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bess/pencil.hpp"

namespace bess {

struct EntryMismatch {
  std::size_t row;  // 0-based
  std::size_t col;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  bool schur_ok = false;
  bool structure_ok = false;
  bool det_ok = false;
  std::vector<EntryMismatch> mismatches;
  bool passed() const { return schur_ok && structure_ok && det_ok; }
};

// Schur complement from bordered determinants det[[a_ij, A12_i], [A21_j, A22]] / det A22,
// sharing no elimination code path with schur_complement().
RationalMatrix schur_by_bordered_determinants(const LinearPencil& p);

// Throws DimensionMismatch when split != rows of F and SingularBlock when det A22 = 0.
VerificationReport check_realization(const LinearPencil& p, const RationalMatrix& f,
                                     RealizationKind kind);

// det A computed on the full matrix against det A22 * det(A/A22).
bool cross_validate_det(const LinearPencil& p);

}  // namespace bess
