// Matrices over the rational function field.
#pragma once

#include <cstddef>
#include <string>

#include "bess/elimination.hpp"
#include "bess/matrix.hpp"
#include "bess/rational_function.hpp"

namespace bess {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(const Field& field, std::size_t n_vars, std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const PolyMatrix& m);

  static RationalMatrix identity(const Field& field, std::size_t n_vars, std::size_t n);
  static RationalMatrix scalar(const RationalFunction& f);  // 1 x 1

  const Field& field() const noexcept { return field_; }
  std::size_t n_vars() const noexcept { return n_vars_; }
  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  bool is_square() const noexcept { return entries_.is_square(); }

  const RationalFunction& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const RationalFunction& at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
  void set(std::size_t i, std::size_t j, RationalFunction value);

  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator*(const FieldElement& c) const;
  RationalMatrix transpose() const;
  RationalMatrix kron_identity(std::size_t l) const;
  RationalMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  bool is_symmetric() const;
  bool is_zero() const;
  bool is_polynomial() const;
  bool is_homogeneous(int d) const;

  RationalFunction det() const;
  RationalMatrix inverse() const;  // throws SingularMatrix

  // Common-denominator form: each row i is (row of polynomials) / row_den[i].
  PolyMatrix cleared_rows(std::vector<Polynomial>& row_den) const;

  // "[[a, b], [c, d]]"; a 1 x 1 matrix prints as its entry.
  std::string to_string() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  void check_compatible(const RationalMatrix& other) const;

  Field field_;
  std::size_t n_vars_ = 0;
  Matrix<RationalFunction> entries_;
};

RationalMatrix dehomogenize_last(const RationalMatrix& f);
RationalMatrix homogenize_new_variable(const RationalMatrix& g);

}  // namespace bess
