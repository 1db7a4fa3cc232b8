#include "bess/verify.hpp"

namespace bess {

namespace {

constexpr std::size_t kCofactorLimit = 5;

Polynomial determinant(const PolyMatrix& a) {
  return a.rows() <= kCofactorLimit ? poly_det_cofactor(a) : poly_det(a);
}

struct BorderedSchur {
  RationalMatrix schur;
  Polynomial block_det;
};

BorderedSchur bordered(const LinearPencil& p) {
  const PolyMatrix full = p.matrix().as_polynomials();
  const std::size_t k = p.split();
  const std::size_t r = p.size() - k;
  const Polynomial d22 = determinant(full.block(k, k, r, r));
  if (d22.is_zero()) throw SingularBlock("det A22 vanishes identically");
  RationalMatrix s(p.field(), p.n_vars(), k, k);
  PolyMatrix b = poly_zero(p.field(), p.n_vars(), r + 1, r + 1);
  b.set_block(1, 1, full.block(k, k, r, r));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      b(0, 0) = full(i, j);
      for (std::size_t t = 0; t < r; ++t) {
        b(0, 1 + t) = full(i, k + t);
        b(1 + t, 0) = full(k + t, j);
      }
      s.set(i, j, RationalFunction(determinant(b), d22));
    }
  }
  return BorderedSchur{std::move(s), d22};
}

bool det_matches(const LinearPencil& p, const BorderedSchur& bs) {
  const Polynomial lhs = determinant(p.matrix().as_polynomials());
  return RationalFunction(lhs) == RationalFunction(bs.block_det) * bs.schur.det();
}

}  // namespace

RationalMatrix schur_by_bordered_determinants(const LinearPencil& p) { return bordered(p).schur; }

VerificationReport check_realization(const LinearPencil& p, const RationalMatrix& f,
                                     RealizationKind kind) {
  if (!f.is_square() || f.rows() != p.split()) {
    throw DimensionMismatch("pencil split does not match the target size");
  }
  require_same_field(p.field(), f.field());
  if (p.n_vars() != f.n_vars()) throw DimensionMismatch("variable counts differ");
  VerificationReport report;
  report.structure_ok = p.classify().contains(required_class(kind));
  const BorderedSchur bs = bordered(p);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (!(bs.schur(i, j) == f(i, j))) {
        report.mismatches.push_back({i, j, f(i, j).to_string(), bs.schur(i, j).to_string()});
      }
    }
  }
  report.schur_ok = report.mismatches.empty();
  report.det_ok = det_matches(p, bs);
  return report;
}

bool cross_validate_det(const LinearPencil& p) { return det_matches(p, bordered(p)); }

}  // namespace bess
