#include "bess/matrix.hpp"

#include <utility>

namespace bess {

namespace {

const Field& field_of(const ConstMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw DimensionMismatch("empty constant matrix");
  return a(0, 0).field();
}

}  // namespace

ConstMatrix const_zero(const Field& field, std::size_t rows, std::size_t cols) {
  return ConstMatrix(rows, cols, FieldElement::zero(field));
}

ConstMatrix const_identity(const Field& field, std::size_t n) {
  ConstMatrix out = const_zero(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = FieldElement::one(field);
  return out;
}

ConstMatrix const_unit_column(const Field& field, std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("unit vector index out of range");
  ConstMatrix out = const_zero(field, n, 1);
  out(i, 0) = FieldElement::one(field);
  return out;
}

ConstMatrix const_add(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("const_add");
  ConstMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

ConstMatrix const_mul(const ConstMatrix& a, const ConstMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("const_mul");
  const Field& field = field_of(a);
  ConstMatrix out = const_zero(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      if (a(i, t).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(t, j).is_zero()) out(i, j) += a(i, t) * b(t, j);
      }
    }
  }
  return out;
}

ConstMatrix const_scale(const ConstMatrix& a, const FieldElement& c) {
  ConstMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!out(i, j).is_zero()) out(i, j) *= c;
    }
  }
  return out;
}

ConstMatrix const_kron_identity(const ConstMatrix& a, std::size_t l) {
  ConstMatrix out = const_zero(field_of(a), a.rows() * l, a.cols() * l);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t t = 0; t < l; ++t) out(i * l + t, j * l + t) = a(i, j);
    }
  }
  return out;
}

bool const_is_zero(const ConstMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool const_is_symmetric(const ConstMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (!(a(i, j) == a(j, i))) return false;
    }
  }
  return true;
}

FieldElement const_det(const ConstMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  const Field& field = field_of(a);
  ConstMatrix m = a;
  const std::size_t n = m.rows();
  FieldElement det = FieldElement::one(field);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return FieldElement::zero(field);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const FieldElement inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const FieldElement f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
      }
    }
  }
  return det;
}

std::string const_to_string(const ConstMatrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += ", ";
    out += '[';
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ", ";
      out += a(i, j).to_string();
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace bess
