// Linear matrix pencils A(z) = A0 + z1 A1 + ... + zn An with a 2x2 block split.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bess/elimination.hpp"
#include "bess/matrix.hpp"
#include "bess/rational_matrix.hpp"

namespace bess {

// A0 + z1 A1 + ... + zn An with constant rows x cols coefficients.
class LinearMatrix {
 public:
  LinearMatrix() = default;
  LinearMatrix(const Field& field, std::size_t n_vars, std::size_t rows, std::size_t cols);
  LinearMatrix(const Field& field, std::size_t n_vars, std::vector<ConstMatrix> coeffs);
  static LinearMatrix constant(const Field& field, std::size_t n_vars, const ConstMatrix& a0);
  // Entries must have total degree at most 1.
  static LinearMatrix from_polynomials(const PolyMatrix& m);

  const Field& field() const noexcept { return field_; }
  std::size_t n_vars() const noexcept { return coeffs_.size() - 1; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const ConstMatrix& coefficient(std::size_t j) const { return coeffs_.at(j); }
  const std::vector<ConstMatrix>& coefficients() const noexcept { return coeffs_; }
  void set_coefficient(std::size_t j, ConstMatrix a);

  LinearMatrix transpose() const;
  LinearMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  bool is_symmetric() const;
  bool is_homogeneous() const;  // A0 = 0
  PolyMatrix as_polynomials() const;
  RationalMatrix as_rational() const;

  friend bool operator==(const LinearMatrix&, const LinearMatrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ConstMatrix> coeffs_;
};

enum class PencilClass { LP, sLP, hLP, hsLP };
std::string to_string(PencilClass c);

struct PencilStructure {
  bool symmetric = false;
  bool homogeneous = false;
  bool contains(PencilClass c) const;
  std::vector<PencilClass> classes() const;
  std::string to_string() const;  // "{LP, sLP}"
};

enum class RealizationKind { BR, SBR, hBR, hSBR };
std::string to_string(RealizationKind k);
// Accepts "br", "sbr", "hbr", "hsbr" (any case).
RealizationKind parse_realization_kind(std::string_view text);
PencilClass required_class(RealizationKind k);

class LinearPencil {
 public:
  LinearPencil() = default;
  // Requires a square matrix and 1 <= split < size.
  LinearPencil(LinearMatrix matrix, std::size_t split);

  const Field& field() const noexcept { return matrix_.field(); }
  std::size_t n_vars() const noexcept { return matrix_.n_vars(); }
  std::size_t size() const noexcept { return matrix_.rows(); }
  std::size_t split() const noexcept { return split_; }
  const LinearMatrix& matrix() const noexcept { return matrix_; }
  const ConstMatrix& coefficient(std::size_t j) const { return matrix_.coefficient(j); }

  LinearMatrix block11() const;
  LinearMatrix block12() const;
  LinearMatrix block21() const;
  LinearMatrix block22() const;

  LinearPencil transpose() const;
  PencilStructure classify() const;

  friend bool operator==(const LinearPencil&, const LinearPencil&) = default;

 private:
  LinearMatrix matrix_;
  std::size_t split_ = 1;
};

RationalMatrix pencil_as_matrix(const LinearPencil& p);
// det of the (2,2) block as a polynomial.
Polynomial block22_det(const LinearPencil& p);
// A11 - A12 A22^{-1} A21; throws SingularBlock when det A22 = 0.
RationalMatrix schur_complement(const LinearPencil& p);
// det A = det A22 * det(A / A22).
bool det_identity_check(const LinearPencil& p);

}  // namespace bess
