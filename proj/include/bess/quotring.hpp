// The characteristic-2 quotient ring R = F[z] / <z_i^2 + l_i^2> and the
// reduction of ring realizers to linear elements.
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "bess/elimination.hpp"
#include "bess/matrix.hpp"
#include "bess/polynomial.hpp"

namespace bess {

class QuotContext {
 public:
  // Throws WrongCharacteristic unless char F = 2.
  QuotContext(const Field& field, std::vector<FieldElement> ell);

  const Field& field() const noexcept { return field_; }
  std::size_t n_vars() const noexcept { return ell_.size(); }
  const std::vector<FieldElement>& ell() const noexcept { return ell_; }
  const FieldElement& ell_squared(std::size_t i) const { return ell_sq_.at(i); }

  friend bool operator==(const QuotContext& a, const QuotContext& b) {
    return a.field_ == b.field_ && a.ell_ == b.ell_;
  }

 private:
  Field field_;
  std::vector<FieldElement> ell_;
  std::vector<FieldElement> ell_sq_;
};

using QuotContextPtr = std::shared_ptr<const QuotContext>;
QuotContextPtr make_quot_context(const Field& field, std::vector<FieldElement> ell);

// Multilinear normal form: z^alpha -> prod (l_i^2)^floor(alpha_i / 2) z_i^(alpha_i mod 2).
Polynomial mult_normal_form(const Polynomial& p, const QuotContext& ctx);

class QuotElement {
 public:
  // Projection of a polynomial in ctx->n_vars() variables.
  QuotElement(QuotContextPtr ctx, const Polynomial& p);

  static QuotElement zero(QuotContextPtr ctx);
  static QuotElement constant(QuotContextPtr ctx, const FieldElement& c);
  static QuotElement variable(QuotContextPtr ctx, std::size_t i);

  const QuotContextPtr& context() const noexcept { return ctx_; }
  // The multilinear representative (the lift).
  const Polynomial& normal_form() const noexcept { return nf_; }

  bool is_zero() const noexcept { return nf_.is_zero(); }
  bool is_linear() const;  // degree <= 1
  // |r|: the normal form evaluated at l; satisfies r^2 = |r|^2.
  FieldElement abs() const;
  bool is_invertible() const { return !abs().is_zero(); }
  // |r|^-2 r; throws NotInvertible.
  QuotElement inverse() const;

  QuotElement operator+(const QuotElement& other) const;
  QuotElement operator-(const QuotElement& other) const;
  QuotElement operator*(const QuotElement& other) const;
  QuotElement operator*(const FieldElement& c) const;

  std::string to_string() const { return nf_.to_string(); }

  friend bool operator==(const QuotElement& a, const QuotElement& b);

 private:
  QuotElement(QuotContextPtr ctx, Polynomial nf, bool) : ctx_(std::move(ctx)), nf_(std::move(nf)) {}
  void check_compatible(const QuotElement& other) const;

  QuotContextPtr ctx_;
  Polynomial nf_;
};

class QuotMatrix {
 public:
  QuotMatrix(QuotContextPtr ctx, std::size_t rows, std::size_t cols);
  QuotMatrix(QuotContextPtr ctx, const PolyMatrix& m);

  const QuotContextPtr& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return entries_.rows(); }
  std::size_t cols() const noexcept { return entries_.cols(); }
  const QuotElement& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  void set(std::size_t i, std::size_t j, const QuotElement& e);

  bool is_symmetric() const;
  bool has_linear_entries() const;
  QuotMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  PolyMatrix lift() const;

  // One bracketed row per line.
  std::string to_string() const;

  friend bool operator==(const QuotMatrix& a, const QuotMatrix& b);

 private:
  QuotContextPtr ctx_;
  Matrix<QuotElement> entries_;
};

// Determinant via elimination over F[z] on the lift, then projection.
QuotElement quot_det(const QuotMatrix& a);
// Permutation expansion; at most 8 x 8.
QuotElement det_leibniz(const QuotMatrix& a);
// Sum over involutions, valid for symmetric matrices in characteristic 2; at most 10 x 10.
QuotElement det_involution(const QuotMatrix& a);

struct TraceEvent {
  std::string label;
  QuotMatrix matrix;
};
using Trace = std::vector<TraceEvent>;
std::string trace_to_string(const Trace& trace);

// Off-diagonal entries replaced by their absolute values.
QuotMatrix clean(const QuotMatrix& a);
// R_j + alpha R_i -> R_j, then C_j + alpha C_i -> C_j, then CLEAN. Indices 0-based.
QuotMatrix add_transform(const QuotMatrix& a, std::size_t i, std::size_t j,
                         const QuotElement& alpha, Trace* trace = nullptr);
// Clears the off-diagonal entries of row and column i. Requires a cleaned
// symmetric matrix (NotCleaned) with |a_ii| != 0 (NotInvertibleDiagonal).
QuotMatrix isolate(const QuotMatrix& a, std::size_t i, Trace* trace = nullptr);
QuotMatrix delete_index(const QuotMatrix& a, std::size_t i);

// A with split 1 realizes r: A symmetric with linear entries, det A22
// invertible and det A = r det A22. Throws NotSymmetric or NotLinearEntries.
bool is_ring_realizer(const QuotMatrix& a, const QuotElement& r);

// Reduces a ring realizer of r step by step down to a linear element equal
// to r. Throws NotARealizer.
QuotElement reduce_realizer(const QuotMatrix& a, const QuotElement& r, Trace* trace = nullptr);

}  // namespace bess
