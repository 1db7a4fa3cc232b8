#include "bess/rational_matrix.hpp"

#include <stdexcept>

namespace bess {

RationalMatrix::RationalMatrix(const Field& field, std::size_t n_vars, std::size_t rows,
                               std::size_t cols)
    : field_(field), n_vars_(n_vars),
      entries_(rows, cols, RationalFunction::zero(field, n_vars)) {}

RationalMatrix::RationalMatrix(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw DimensionMismatch("empty matrix");
  field_ = m(0, 0).field();
  n_vars_ = m(0, 0).n_vars();
  entries_ = Matrix<RationalFunction>(m.rows(), m.cols(), RationalFunction::zero(field_, n_vars_));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) set(i, j, RationalFunction(m(i, j)));
  }
}

RationalMatrix RationalMatrix::identity(const Field& field, std::size_t n_vars, std::size_t n) {
  RationalMatrix out(field, n_vars, n, n);
  for (std::size_t i = 0; i < n; ++i) out.entries_(i, i) = RationalFunction::one(field, n_vars);
  return out;
}

RationalMatrix RationalMatrix::scalar(const RationalFunction& f) {
  RationalMatrix out(f.field(), f.n_vars(), 1, 1);
  out.entries_(0, 0) = f;
  return out;
}

void RationalMatrix::set(std::size_t i, std::size_t j, RationalFunction value) {
  require_same_field(field_, value.field());
  if (value.n_vars() != n_vars_) throw DescriptorMismatch("variable count mismatch");
  entries_.at(i, j) = std::move(value);
}

void RationalMatrix::check_compatible(const RationalMatrix& other) const {
  require_same_field(field_, other.field_);
  if (n_vars_ != other.n_vars_) throw DescriptorMismatch("variable count mismatch");
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  check_compatible(other);
  if (rows() != other.rows() || cols() != other.cols()) throw DimensionMismatch("matrix add");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out.entries_(i, j) += other.entries_(i, j);
  }
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  return *this + other * FieldElement(field_, -1LL);
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  check_compatible(other);
  if (cols() != other.rows()) throw DimensionMismatch("matrix multiply");
  RationalMatrix out(field_, n_vars_, rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t t = 0; t < cols(); ++t) {
      const RationalFunction& a = entries_(i, t);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols(); ++j) {
        const RationalFunction& b = other.entries_(t, j);
        if (!b.is_zero()) out.entries_(i, j) += a * b;
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator*(const FieldElement& c) const {
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out.entries_(i, j) = entries_(i, j) * c;
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out = *this;
  out.entries_ = entries_.transpose();
  return out;
}

RationalMatrix RationalMatrix::kron_identity(std::size_t l) const {
  if (l == 0) throw DimensionMismatch("Kronecker factor must be positive");
  RationalMatrix out(field_, n_vars_, rows() * l, cols() * l);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      for (std::size_t t = 0; t < l; ++t) out.entries_(i * l + t, j * l + t) = entries_(i, j);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                                     std::size_t cols) const {
  RationalMatrix out = *this;
  out.entries_ = entries_.block(row0, col0, rows, cols);
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = i + 1; j < cols(); ++j) {
      if (!(entries_(i, j) == entries_(j, i))) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_zero() const {
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!entries_(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_polynomial() const {
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!entries_(i, j).is_polynomial()) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_homogeneous(int d) const {
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!entries_(i, j).is_homogeneous(d)) return false;
    }
  }
  return true;
}

PolyMatrix RationalMatrix::cleared_rows(std::vector<Polynomial>& row_den) const {
  PolyMatrix out = poly_zero(field_, n_vars_, rows(), cols());
  row_den.clear();
  for (std::size_t i = 0; i < rows(); ++i) {
    // Product of the distinct denominators in the row.
    Polynomial den = Polynomial::constant(field_, n_vars_, 1);
    std::vector<Polynomial> seen;
    for (std::size_t j = 0; j < cols(); ++j) {
      const Polynomial& q = entries_(i, j).den();
      if (q.is_constant()) continue;
      bool dup = false;
      for (const auto& s : seen) dup = dup || s == q;
      if (!dup) {
        seen.push_back(q);
        den *= q;
      }
    }
    for (std::size_t j = 0; j < cols(); ++j) {
      const RationalFunction& f = entries_(i, j);
      if (f.is_zero()) continue;
      out(i, j) = (f.num() * den).divide_exact(f.den());
    }
    row_den.push_back(std::move(den));
  }
  return out;
}

RationalFunction RationalMatrix::det() const {
  if (!is_square() || rows() == 0) throw DimensionMismatch("determinant of non-square matrix");
  std::vector<Polynomial> row_den;
  const PolyMatrix p = cleared_rows(row_den);
  Polynomial den = Polynomial::constant(field_, n_vars_, 1);
  for (const auto& d : row_den) den *= d;
  return RationalFunction(poly_det(p), std::move(den));
}

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square() || rows() == 0) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = rows();
  // Gauss-Jordan over F(z) on [A | I].
  Matrix<RationalFunction> a = entries_;
  RationalMatrix inv = identity(field_, n_vars_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = n;
    for (std::size_t i = c; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      if (p == n || a(i, c).num().term_count() + a(i, c).den().term_count() <
                        a(p, c).num().term_count() + a(p, c).den().term_count()) {
        p = i;
      }
    }
    if (p == n) throw SingularMatrix("matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv.entries_(p, j), inv.entries_(c, j));
      }
    }
    const RationalFunction pivot_inv = a(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(c, j).is_zero()) a(c, j) *= pivot_inv;
      if (!inv.entries_(c, j).is_zero()) inv.entries_(c, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const RationalFunction f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv.entries_(c, j).is_zero()) inv.entries_(i, j) -= f * inv.entries_(c, j);
      }
    }
  }
#ifndef NDEBUG
  if (!(*this * inv == identity(field_, n_vars_, n))) {
    throw std::logic_error("inverse check failed");
  }
#endif
  return inv;
}

std::string RationalMatrix::to_string() const {
  if (rows() == 1 && cols() == 1) return entries_(0, 0).to_string();
  std::string out = "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) out += ", ";
    out += '[';
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) out += ", ";
      out += entries_(i, j).to_string();
    }
    out += ']';
  }
  return out + "]";
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  if (!(a.field_ == b.field_) || a.n_vars_ != b.n_vars_ || a.rows() != b.rows() ||
      a.cols() != b.cols()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a.entries_(i, j) == b.entries_(i, j))) return false;
    }
  }
  return true;
}

RationalMatrix dehomogenize_last(const RationalMatrix& f) {
  if (f.n_vars() == 0) throw DimensionMismatch("no variable to dehomogenize");
  RationalMatrix out(f.field(), f.n_vars() - 1, f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out.set(i, j, dehomogenize_last(f(i, j)));
  }
  return out;
}

RationalMatrix homogenize_new_variable(const RationalMatrix& g) {
  RationalMatrix out(g.field(), g.n_vars() + 1, g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) out.set(i, j, homogenize_new_variable(g(i, j)));
  }
  return out;
}

}  // namespace bess
