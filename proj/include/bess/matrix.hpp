// Dense row-major matrix storage and constant matrices over a Field.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bess/errors.hpp"
#include "bess/field.hpp"

namespace bess {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  Matrix transpose() const {
    Matrix out;
    out.rows_ = cols_;
    out.cols_ = rows_;
    out.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) out.data_.push_back((*this)(i, j));
    }
    return out;
  }

  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_) throw DimensionMismatch("block out of range");
    Matrix out;
    out.rows_ = rows;
    out.cols_ = cols;
    out.data_.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) out.data_.push_back((*this)(row0 + i, col0 + j));
    }
    return out;
  }

  void set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
    if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_) {
      throw DimensionMismatch("block out of range");
    }
    for (std::size_t i = 0; i < b.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(row0 + i, col0 + j) = b(i, j);
    }
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ConstMatrix = Matrix<FieldElement>;

ConstMatrix const_zero(const Field& field, std::size_t rows, std::size_t cols);
ConstMatrix const_identity(const Field& field, std::size_t n);
// Column e_i of length n (n x 1).
ConstMatrix const_unit_column(const Field& field, std::size_t n, std::size_t i);
ConstMatrix const_add(const ConstMatrix& a, const ConstMatrix& b);
ConstMatrix const_mul(const ConstMatrix& a, const ConstMatrix& b);
ConstMatrix const_scale(const ConstMatrix& a, const FieldElement& c);
ConstMatrix const_kron_identity(const ConstMatrix& a, std::size_t l);
bool const_is_zero(const ConstMatrix& a);
bool const_is_symmetric(const ConstMatrix& a);
// Determinant by Gaussian elimination over the field.
FieldElement const_det(const ConstMatrix& a);
std::string const_to_string(const ConstMatrix& a);

}  // namespace bess
