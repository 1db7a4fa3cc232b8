#include "bess/schur_algebra.hpp"

#include <utility>
#include <vector>

namespace bess {

namespace {

void require_block22_invertible(const LinearPencil& p, Checks checks) {
  if (checks == Checks::deferred) return;
  if (block22_det(p).is_zero()) throw SingularBlock("(2,2) block is singular");
}

void require_compatible(const LinearPencil& a, const LinearPencil& b) {
  require_same_field(a.field(), b.field());
  if (a.n_vars() != b.n_vars()) throw DescriptorMismatch("pencils use different variable counts");
}

// Coefficient-wise assembly of a size x size pencil from blocks.
class Assembly {
 public:
  Assembly(const Field& field, std::size_t n_vars, std::size_t size)
      : field_(field), coeffs_(n_vars + 1, const_zero(field, size, size)) {}

  // Places every coefficient of m at (row, col), optionally negated.
  void place(std::size_t row, std::size_t col, const LinearMatrix& m, bool negate = false) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const ConstMatrix& c = m.coefficient(j);
      if (const_is_zero(c)) continue;
      coeffs_[j].set_block(row, col, negate ? const_scale(c, FieldElement(field_, -1LL)) : c);
    }
  }
  // Adds every coefficient of m into the block at (row, col).
  void add(std::size_t row, std::size_t col, const LinearMatrix& m) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const ConstMatrix& c = m.coefficient(j);
      for (std::size_t r = 0; r < c.rows(); ++r) {
        for (std::size_t s = 0; s < c.cols(); ++s) {
          if (!c(r, s).is_zero()) coeffs_[j](row + r, col + s) += c(r, s);
        }
      }
    }
  }
  void place_identity(std::size_t row, std::size_t col, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) coeffs_[0](row + i, col + i) = FieldElement::one(field_);
  }

  LinearPencil finish(std::size_t split) {
    const std::size_t n = coeffs_.size() - 1;
    return LinearPencil(LinearMatrix(field_, n, std::move(coeffs_)), split);
  }

 private:
  Field field_;
  std::vector<ConstMatrix> coeffs_;
};

LinearMatrix map_coefficients(const LinearMatrix& m, const ConstMatrix* left,
                              const ConstMatrix* right) {
  std::vector<ConstMatrix> out;
  for (const auto& c : m.coefficients()) {
    ConstMatrix t = c;
    if (left) t = const_mul(*left, t);
    if (right) t = const_mul(t, *right);
    out.push_back(std::move(t));
  }
  return LinearMatrix(m.field(), m.n_vars(), std::move(out));
}

}  // namespace

LinearPencil op_scale(const LinearPencil& p, const FieldElement& lambda, Checks checks) {
  require_same_field(p.field(), lambda.field());
  if (lambda.is_zero()) throw ZeroScalar("scale factor must be nonzero");
  require_block22_invertible(p, checks);
  std::vector<ConstMatrix> coeffs;
  for (const auto& c : p.matrix().coefficients()) coeffs.push_back(const_scale(c, lambda));
  return LinearPencil(LinearMatrix(p.field(), p.n_vars(), std::move(coeffs)), p.split());
}

LinearPencil op_add(const LinearPencil& a, const LinearPencil& b, Checks checks) {
  require_compatible(a, b);
  if (a.split() != b.split()) throw BlockSizeMismatch("summands have different split sizes");
  require_block22_invertible(a, checks);
  require_block22_invertible(b, checks);
  const std::size_t k = a.split(), m = a.size(), l = b.size();
  Assembly out(a.field(), a.n_vars(), m + l - k);
  out.place(0, 0, a.block11());
  out.add(0, 0, b.block11());
  out.place(0, k, a.block12());
  out.place(0, m, b.block12());
  out.place(k, 0, a.block21());
  out.place(k, k, a.block22());
  out.place(m, 0, b.block21());
  out.place(m, m, b.block22());
  return out.finish(k);
}

LinearPencil op_symmetrize(const LinearPencil& p, Checks checks) {
  require_block22_invertible(p, checks);
  const std::size_t k = p.split(), m = p.size(), r = m - k;
  Assembly out(p.field(), p.n_vars(), 2 * m - k);
  const LinearMatrix a11 = p.block11(), a12 = p.block12(), a21 = p.block21(), a22 = p.block22();
  out.place(0, 0, a11);
  out.add(0, 0, a11.transpose());
  out.place(0, k, a21.transpose());
  out.place(0, k + r, a12);
  out.place(k, 0, a21);
  out.place(k, k + r, a22);
  out.place(k + r, 0, a12.transpose());
  out.place(k + r, k, a22.transpose());
  return out.finish(k);
}

LinearPencil op_sandwich(const ConstMatrix& u, const LinearPencil& p, const ConstMatrix& v,
                         Checks checks) {
  const std::size_t k = p.split(), m = p.size();
  if (u.cols() != k || v.rows() != k || u.rows() != v.cols() || u.rows() == 0) {
    throw DimensionMismatch("sandwich factors must be l x k and k x l");
  }
  require_block22_invertible(p, checks);
  const std::size_t l = u.rows();
  Assembly out(p.field(), p.n_vars(), l + m - k);
  out.place(0, 0, map_coefficients(p.block11(), &u, &v));
  out.place(0, l, map_coefficients(p.block12(), &u, nullptr));
  out.place(l, 0, map_coefficients(p.block21(), nullptr, &v));
  out.place(l, l, p.block22());
  return out.finish(l);
}

LinearPencil op_product(const LinearPencil& a, const LinearMatrix& x, const LinearPencil& b,
                        Checks checks) {
  require_compatible(a, b);
  require_same_field(a.field(), x.field());
  if (x.n_vars() != a.n_vars()) throw DescriptorMismatch("X uses a different variable count");
  const std::size_t k = a.split();
  if (b.split() != k || x.rows() != k || x.cols() != k) {
    throw BlockSizeMismatch("product factors need matching split sizes");
  }
  require_block22_invertible(a, checks);
  require_block22_invertible(b, checks);
  if (checks == Checks::eager && poly_det(x.as_polynomials()).is_zero()) {
    throw SingularX("X is singular");
  }
  const std::size_t m = a.size(), l = b.size();
  // Block rows: k | l-k | m-k | k; block columns: k | m-k | l-k | k.
  const std::size_t r2 = k, r3 = k + (l - k), r4 = r3 + (m - k);
  const std::size_t c2 = k, c3 = k + (m - k), c4 = c3 + (l - k);
  Assembly out(a.field(), a.n_vars(), m + l);
  out.place(0, c2, a.block12());
  out.place(0, c4, a.block11());
  out.place(r2, 0, b.block21());
  out.place(r2, c3, b.block22());
  out.place(r3, c2, a.block22());
  out.place(r3, c4, a.block21());
  out.place(r4, 0, b.block11());
  out.place(r4, c3, b.block12());
  out.place(r4, c4, x, true);
  return out.finish(k);
}

LinearPencil op_inverse(const LinearPencil& p, Checks checks) {
  require_block22_invertible(p, checks);
  const std::size_t k = p.split(), m = p.size();
  if (checks == Checks::eager && poly_det(p.matrix().as_polynomials()).is_zero()) {
    throw SingularSchurComplement("Schur complement is singular");
  }
  Assembly out(p.field(), p.n_vars(), m + k);
  out.place_identity(0, k, k);
  out.place_identity(k, 0, k);
  out.place(k, k, p.matrix(), true);
  return out.finish(k);
}

LinearPencil op_kron_identity(const LinearPencil& p, std::size_t l, Checks checks) {
  if (l == 0) throw DimensionMismatch("Kronecker factor must be positive");
  require_block22_invertible(p, checks);
  std::vector<ConstMatrix> coeffs;
  for (const auto& c : p.matrix().coefficients()) coeffs.push_back(const_kron_identity(c, l));
  return LinearPencil(LinearMatrix(p.field(), p.n_vars(), std::move(coeffs)), p.split() * l);
}

LinearPencil op_homogenize(const LinearPencil& p, Checks checks) {
  require_block22_invertible(p, checks);
  std::vector<ConstMatrix> coeffs;
  const std::size_t n = p.n_vars();
  coeffs.push_back(const_zero(p.field(), p.size(), p.size()));
  for (std::size_t j = 1; j <= n; ++j) coeffs.push_back(p.coefficient(j));
  coeffs.push_back(p.coefficient(0));
  return LinearPencil(LinearMatrix(p.field(), n + 1, std::move(coeffs)), p.split());
}

}  // namespace bess
