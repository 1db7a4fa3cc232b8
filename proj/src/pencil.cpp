#include "bess/pencil.hpp"

#include <algorithm>
#include <cctype>

namespace bess {

// ---------------------------------------------------------------- LinearMatrix

LinearMatrix::LinearMatrix(const Field& field, std::size_t n_vars, std::size_t rows,
                           std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      coeffs_(n_vars + 1, const_zero(field, rows, cols)) {
  if (rows == 0 || cols == 0) throw DimensionMismatch("empty linear matrix");
}

LinearMatrix::LinearMatrix(const Field& field, std::size_t n_vars, std::vector<ConstMatrix> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != n_vars + 1) throw DimensionMismatch("need n_vars + 1 coefficients");
  rows_ = coeffs_[0].rows();
  cols_ = coeffs_[0].cols();
  if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("empty linear matrix");
  for (const auto& c : coeffs_) {
    if (c.rows() != rows_ || c.cols() != cols_) throw DimensionMismatch("coefficient shapes differ");
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) require_same_field(field_, c(i, j).field());
    }
  }
}

LinearMatrix LinearMatrix::constant(const Field& field, std::size_t n_vars, const ConstMatrix& a0) {
  LinearMatrix out(field, n_vars, a0.rows(), a0.cols());
  out.set_coefficient(0, a0);
  return out;
}

LinearMatrix LinearMatrix::from_polynomials(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw DimensionMismatch("empty matrix");
  const Field field = m(0, 0).field();
  const std::size_t n = m(0, 0).n_vars();
  LinearMatrix out(field, n, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const Term& t : m(i, j).terms()) {
        if (t.monomial.degree() > 1) throw NotLinearEntries("entry of degree above one");
        std::size_t k = 0;
        if (t.monomial.degree() == 1) {
          while (t.monomial.exponent(k) == 0) ++k;
          ++k;
        }
        out.coeffs_[k](i, j) = t.coefficient;
      }
    }
  }
  return out;
}

void LinearMatrix::set_coefficient(std::size_t j, ConstMatrix a) {
  if (a.rows() != rows_ || a.cols() != cols_) throw DimensionMismatch("coefficient shape");
  coeffs_.at(j) = std::move(a);
}

LinearMatrix LinearMatrix::transpose() const {
  LinearMatrix out = *this;
  std::swap(out.rows_, out.cols_);
  for (auto& c : out.coeffs_) c = c.transpose();
  return out;
}

LinearMatrix LinearMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                                 std::size_t cols) const {
  LinearMatrix out = *this;
  out.rows_ = rows;
  out.cols_ = cols;
  for (auto& c : out.coeffs_) c = c.block(row0, col0, rows, cols);
  return out;
}

bool LinearMatrix::is_symmetric() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), const_is_symmetric);
}

bool LinearMatrix::is_homogeneous() const { return const_is_zero(coeffs_[0]); }

PolyMatrix LinearMatrix::as_polynomials() const {
  const std::size_t n = n_vars();
  PolyMatrix out = poly_zero(field_, n, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k <= n; ++k) {
        const FieldElement& c = coeffs_[k](i, j);
        if (c.is_zero()) continue;
        terms.push_back(Term{k == 0 ? Monomial() : Monomial::variable(k - 1), c});
      }
      if (!terms.empty()) out(i, j) = Polynomial::from_terms(field_, n, std::move(terms));
    }
  }
  return out;
}

RationalMatrix LinearMatrix::as_rational() const { return RationalMatrix(as_polynomials()); }

// ---------------------------------------------------------------- classes

std::string to_string(PencilClass c) {
  switch (c) {
    case PencilClass::LP: return "LP";
    case PencilClass::sLP: return "sLP";
    case PencilClass::hLP: return "hLP";
    case PencilClass::hsLP: return "hsLP";
  }
  return "?";
}

bool PencilStructure::contains(PencilClass c) const {
  switch (c) {
    case PencilClass::LP: return true;
    case PencilClass::sLP: return symmetric;
    case PencilClass::hLP: return homogeneous;
    case PencilClass::hsLP: return symmetric && homogeneous;
  }
  return false;
}

std::vector<PencilClass> PencilStructure::classes() const {
  std::vector<PencilClass> out;
  for (PencilClass c : {PencilClass::LP, PencilClass::sLP, PencilClass::hLP, PencilClass::hsLP}) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

std::string PencilStructure::to_string() const {
  std::string out = "{";
  for (PencilClass c : classes()) {
    if (out.size() > 1) out += ", ";
    out += bess::to_string(c);
  }
  return out + "}";
}

std::string to_string(RealizationKind k) {
  switch (k) {
    case RealizationKind::BR: return "BR";
    case RealizationKind::SBR: return "SBR";
    case RealizationKind::hBR: return "hBR";
    case RealizationKind::hSBR: return "hSBR";
  }
  return "?";
}

RealizationKind parse_realization_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "br") return RealizationKind::BR;
  if (s == "sbr") return RealizationKind::SBR;
  if (s == "hbr") return RealizationKind::hBR;
  if (s == "hsbr") return RealizationKind::hSBR;
  throw FormatError("unknown realization kind '" + std::string(text) + "'");
}

PencilClass required_class(RealizationKind k) {
  switch (k) {
    case RealizationKind::BR: return PencilClass::LP;
    case RealizationKind::SBR: return PencilClass::sLP;
    case RealizationKind::hBR: return PencilClass::hLP;
    case RealizationKind::hSBR: return PencilClass::hsLP;
  }
  return PencilClass::LP;
}

// ---------------------------------------------------------------- LinearPencil

LinearPencil::LinearPencil(LinearMatrix matrix, std::size_t split)
    : matrix_(std::move(matrix)), split_(split) {
  if (matrix_.rows() != matrix_.cols()) throw DimensionMismatch("pencil must be square");
  if (split_ < 1 || split_ >= matrix_.rows()) {
    throw DimensionMismatch("split must satisfy 1 <= k < m");
  }
}

LinearMatrix LinearPencil::block11() const { return matrix_.block(0, 0, split_, split_); }
LinearMatrix LinearPencil::block12() const {
  return matrix_.block(0, split_, split_, size() - split_);
}
LinearMatrix LinearPencil::block21() const {
  return matrix_.block(split_, 0, size() - split_, split_);
}
LinearMatrix LinearPencil::block22() const {
  return matrix_.block(split_, split_, size() - split_, size() - split_);
}

LinearPencil LinearPencil::transpose() const { return LinearPencil(matrix_.transpose(), split_); }

PencilStructure LinearPencil::classify() const {
  return PencilStructure{matrix_.is_symmetric(), matrix_.is_homogeneous()};
}

RationalMatrix pencil_as_matrix(const LinearPencil& p) { return p.matrix().as_rational(); }

Polynomial block22_det(const LinearPencil& p) { return poly_det(p.block22().as_polynomials()); }

RationalMatrix schur_complement(const LinearPencil& p) {
  auto sf = schur_fraction(p.matrix().as_polynomials(), p.split());
  if (!sf) throw SingularBlock("det A22 vanishes identically");
  RationalMatrix out(p.field(), p.n_vars(), p.split(), p.split());
  for (std::size_t i = 0; i < p.split(); ++i) {
    for (std::size_t j = 0; j < p.split(); ++j) {
      out.set(i, j, RationalFunction(sf->numerators(i, j), sf->denominator));
    }
  }
  return out;
}

bool det_identity_check(const LinearPencil& p) {
  const PolyMatrix full = p.matrix().as_polynomials();
  auto sf = schur_fraction(full, p.split());
  if (!sf) throw SingularBlock("det A22 vanishes identically");
  RationalMatrix s(p.field(), p.n_vars(), p.split(), p.split());
  for (std::size_t i = 0; i < p.split(); ++i) {
    for (std::size_t j = 0; j < p.split(); ++j) {
      s.set(i, j, RationalFunction(sf->numerators(i, j), sf->denominator));
    }
  }
  const RationalFunction rhs = RationalFunction(sf->block_det) * s.det();
  return RationalFunction(poly_det(full)) == rhs;
}

}  // namespace bess
