#include "bess/quotring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bess/errors.hpp"

namespace bess {

QuotContext::QuotContext(const Field& field, std::vector<FieldElement> ell)
    : field_(field), ell_(std::move(ell)) {
  if (field.characteristic() != 2) {
    throw WrongCharacteristic("quotient ring requires characteristic 2, got " + field.to_string());
  }
  for (const FieldElement& l : ell_) {
    require_same_field(field_, l.field());
    ell_sq_.push_back(l * l);
  }
}

QuotContextPtr make_quot_context(const Field& field, std::vector<FieldElement> ell) {
  return std::make_shared<const QuotContext>(field, std::move(ell));
}

Polynomial mult_normal_form(const Polynomial& p, const QuotContext& ctx) {
  if (p.n_vars() != ctx.n_vars()) throw DimensionMismatch("variable count differs from context");
  require_same_field(p.field(), ctx.field());
  std::map<Monomial, FieldElement> acc;
  for (const Term& t : p.terms()) {
    Monomial reduced;
    FieldElement c = t.coefficient;
    for (std::size_t i = 0; i < ctx.n_vars(); ++i) {
      const unsigned e = t.monomial.exponent(i);
      if (e >= 2) c *= ctx.ell_squared(i).pow(e / 2);
      reduced.set_exponent(i, e % 2);
    }
    if (c.is_zero()) continue;
    auto [it, fresh] = acc.try_emplace(reduced, c);
    if (!fresh) it->second += c;
  }
  std::vector<Term> terms;
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back(Term{m, c});
  }
  return Polynomial::from_terms(ctx.field(), ctx.n_vars(), std::move(terms));
}

QuotElement::QuotElement(QuotContextPtr ctx, const Polynomial& p)
    : ctx_(std::move(ctx)), nf_(mult_normal_form(p, *ctx_)) {}

QuotElement QuotElement::zero(QuotContextPtr ctx) {
  Polynomial p(ctx->field(), ctx->n_vars());
  return QuotElement(std::move(ctx), std::move(p), true);
}

QuotElement QuotElement::constant(QuotContextPtr ctx, const FieldElement& c) {
  Polynomial p = Polynomial::constant(ctx->field(), ctx->n_vars(), c);
  return QuotElement(std::move(ctx), std::move(p), true);
}

QuotElement QuotElement::variable(QuotContextPtr ctx, std::size_t i) {
  if (i >= ctx->n_vars()) throw std::out_of_range("variable index out of range");
  Polynomial p = Polynomial::variable(ctx->field(), ctx->n_vars(), i);
  return QuotElement(std::move(ctx), std::move(p), true);
}

bool QuotElement::is_linear() const {
  const Degree d = nf_.total_degree();
  return d.is_minus_infinity() || d.value() <= 1;
}

FieldElement QuotElement::abs() const { return nf_.evaluate(ctx_->ell()); }

QuotElement QuotElement::inverse() const {
  const FieldElement a = abs();
  if (a.is_zero()) throw NotInvertible("element " + to_string() + " has |r| = 0");
  return *this * (a * a).inverse();
}

void QuotElement::check_compatible(const QuotElement& other) const {
  if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_)) {
    throw DescriptorMismatch("quotient ring elements from different contexts");
  }
}

QuotElement QuotElement::operator+(const QuotElement& other) const {
  check_compatible(other);
  return QuotElement(ctx_, nf_ + other.nf_, true);
}

QuotElement QuotElement::operator-(const QuotElement& other) const {
  check_compatible(other);
  return QuotElement(ctx_, nf_ - other.nf_, true);
}

QuotElement QuotElement::operator*(const QuotElement& other) const {
  check_compatible(other);
  return QuotElement(ctx_, nf_ * other.nf_);
}

QuotElement QuotElement::operator*(const FieldElement& c) const {
  return QuotElement(ctx_, nf_ * c, true);
}

bool operator==(const QuotElement& a, const QuotElement& b) {
  return (a.ctx_ == b.ctx_ || *a.ctx_ == *b.ctx_) && a.nf_ == b.nf_;
}

QuotMatrix::QuotMatrix(QuotContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), entries_(rows, cols, QuotElement::zero(ctx)) {}

QuotMatrix::QuotMatrix(QuotContextPtr ctx, const PolyMatrix& m)
    : QuotMatrix(ctx, m.rows(), m.cols()) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) entries_(i, j) = QuotElement(ctx_, m(i, j));
  }
}

void QuotMatrix::set(std::size_t i, std::size_t j, const QuotElement& e) {
  if (!(*e.context() == *ctx_)) throw DescriptorMismatch("entry from a different context");
  entries_.at(i, j) = e;
}

bool QuotMatrix::is_symmetric() const {
  if (rows() != cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = i + 1; j < cols(); ++j) {
      if (!(entries_(i, j) == entries_(j, i))) return false;
    }
  }
  return true;
}

bool QuotMatrix::has_linear_entries() const {
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!entries_(i, j).is_linear()) return false;
    }
  }
  return true;
}

QuotMatrix QuotMatrix::block(std::size_t row0, std::size_t col0, std::size_t r,
                             std::size_t c) const {
  QuotMatrix out(ctx_, 0, 0);
  out.entries_ = entries_.block(row0, col0, r, c);
  return out;
}

PolyMatrix QuotMatrix::lift() const {
  PolyMatrix out = poly_zero(ctx_->field(), ctx_->n_vars(), rows(), cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out(i, j) = entries_(i, j).normal_form();
  }
  return out;
}

std::string QuotMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i != 0) out += '\n';
    out += '[';
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j != 0) out += ", ";
      out += entries_(i, j).to_string();
    }
    out += ']';
  }
  return out;
}

bool operator==(const QuotMatrix& a, const QuotMatrix& b) {
  return *a.ctx_ == *b.ctx_ && a.entries_ == b.entries_;
}

namespace {

void require_square(const QuotMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("matrix is not square");
}

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

std::string factor_string(const QuotElement& e) {
  const std::string s = e.to_string();
  return e.normal_form().term_count() > 1 ? "(" + s + ")" : s;
}

void record(Trace* trace, std::string label, const QuotMatrix& m) {
  if (trace != nullptr) trace->push_back(TraceEvent{std::move(label), m});
}

void involution_sum(const QuotMatrix& a, std::vector<bool>& used, const QuotElement& prefix,
                    QuotElement& total) {
  const std::size_t m = a.rows();
  std::size_t i = 0;
  while (i < m && used[i]) ++i;
  if (i == m) {
    total = total + prefix;
    return;
  }
  used[i] = true;
  involution_sum(a, used, prefix * a(i, i), total);
  for (std::size_t j = i + 1; j < m; ++j) {
    if (used[j]) continue;
    used[j] = true;
    involution_sum(a, used, prefix * a(i, j) * a(j, i), total);
    used[j] = false;
  }
  used[i] = false;
}

QuotMatrix swap_indices(const QuotMatrix& a, std::size_t i, std::size_t j) {
  QuotMatrix out = a;
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i], perm[j]);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(perm[r], perm[c]));
  }
  return out;
}

// Inserts a new index 1 (0-based) with diagonal 1, coupled by 1 to the old
// index 1, whose diagonal gains 1.
QuotMatrix augment(const QuotMatrix& a) {
  const QuotContextPtr& ctx = a.context();
  const std::size_t m = a.rows();
  const QuotElement one = QuotElement::constant(ctx, FieldElement::one(ctx->field()));
  QuotMatrix out(ctx, m + 1, m + 1);
  auto old_index = [](std::size_t k) { return k == 0 ? std::size_t{0} : k - 1; };
  for (std::size_t r = 0; r <= m; ++r) {
    for (std::size_t c = 0; c <= m; ++c) {
      if (r == 1 || c == 1) continue;
      out.set(r, c, a(old_index(r), old_index(c)));
    }
  }
  out.set(1, 1, one);
  out.set(1, 2, one);
  out.set(2, 1, one);
  out.set(2, 2, a(1, 1) + one);
  return out;
}

}  // namespace

QuotElement quot_det(const QuotMatrix& a) {
  require_square(a);
  const QuotContextPtr& ctx = a.context();
  if (a.rows() == 0) return QuotElement::constant(ctx, FieldElement::one(ctx->field()));
  return QuotElement(ctx, poly_det(a.lift()));
}

QuotElement det_leibniz(const QuotMatrix& a) {
  require_square(a);
  if (a.rows() > 8) throw DimensionMismatch("permutation expansion limited to 8 x 8");
  const QuotContextPtr& ctx = a.context();
  const std::size_t m = a.rows();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  QuotElement total = QuotElement::zero(ctx);
  const FieldElement minus_one = -FieldElement::one(ctx->field());
  do {
    QuotElement term = QuotElement::constant(ctx, FieldElement::one(ctx->field()));
    for (std::size_t i = 0; i < m && !term.is_zero(); ++i) term = term * a(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    total = total + (inversions % 2 == 0 ? term : term * minus_one);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

QuotElement det_involution(const QuotMatrix& a) {
  require_square(a);
  if (!a.is_symmetric()) throw NotSymmetric("involution expansion requires a symmetric matrix");
  if (a.rows() > 10) throw DimensionMismatch("involution expansion limited to 10 x 10");
  const QuotContextPtr& ctx = a.context();
  std::vector<bool> used(a.rows(), false);
  QuotElement total = QuotElement::zero(ctx);
  involution_sum(a, used, QuotElement::constant(ctx, FieldElement::one(ctx->field())), total);
  return total;
}

std::string trace_to_string(const Trace& trace) {
  std::string out;
  for (const TraceEvent& e : trace) {
    out += e.label;
    out += '\n';
    out += e.matrix.to_string();
    out += "\n\n";
  }
  return out;
}

QuotMatrix clean(const QuotMatrix& a) {
  const QuotContextPtr& ctx = a.context();
  QuotMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) out.set(i, j, QuotElement::constant(ctx, a(i, j).abs()));
    }
  }
  return out;
}

QuotMatrix add_transform(const QuotMatrix& a, std::size_t i, std::size_t j,
                         const QuotElement& alpha, Trace* trace) {
  require_square(a);
  const std::size_t m = a.rows();
  if (i >= m || j >= m || i == j) {
    throw BadIndices("ADD needs distinct indices in range, got " + one_based(i) + ", " +
                     one_based(j));
  }
  const std::string tag = "ADD(" + one_based(i) + "," + one_based(j) + "," + alpha.to_string() + ")";
  const std::string factor = factor_string(alpha);
  QuotMatrix out = a;
  for (std::size_t c = 0; c < m; ++c) out.set(j, c, out(j, c) + alpha * out(i, c));
  record(trace, tag + ": R" + one_based(j) + " + " + factor + "*R" + one_based(i) + " -> R" +
                    one_based(j),
         out);
  for (std::size_t r = 0; r < m; ++r) out.set(r, j, out(r, j) + alpha * out(r, i));
  record(trace, tag + ": C" + one_based(j) + " + " + factor + "*C" + one_based(i) + " -> C" +
                    one_based(j),
         out);
  out = clean(out);
  record(trace, tag + ": CLEAN", out);
  return out;
}

QuotMatrix isolate(const QuotMatrix& a, std::size_t i, Trace* trace) {
  require_square(a);
  const std::size_t m = a.rows();
  if (i >= m) throw BadIndices("ISOLATE index " + one_based(i) + " out of range");
  if (!a.is_symmetric()) throw NotSymmetric("ISOLATE requires a symmetric matrix");
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (r != c && !a(r, c).normal_form().is_constant()) {
        throw NotCleaned("off-diagonal entry (" + one_based(r) + "," + one_based(c) +
                         ") is not constant");
      }
    }
  }
  const FieldElement d = a(i, i).abs();
  if (d.is_zero()) {
    throw NotInvertibleDiagonal("diagonal entry " + one_based(i) + " has |a_ii| = 0");
  }
  const FieldElement d_inv = d.inverse();
  QuotMatrix out = a;
  for (std::size_t j = 0; j < m; ++j) {
    if (j == i) continue;
    out = add_transform(out, i, j, out(i, j) * d_inv, trace);
  }
  record(trace, "ISOLATE(" + one_based(i) + ")", out);
  return out;
}

QuotMatrix delete_index(const QuotMatrix& a, std::size_t i) {
  require_square(a);
  const std::size_t m = a.rows();
  if (i >= m) throw BadIndices("DELETE index " + one_based(i) + " out of range");
  QuotMatrix out(a.context(), m - 1, m - 1);
  for (std::size_t r = 0, rr = 0; r < m; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, cc = 0; c < m; ++c) {
      if (c == i) continue;
      out.set(rr, cc, a(r, c));
      ++cc;
    }
    ++rr;
  }
  return out;
}

bool is_ring_realizer(const QuotMatrix& a, const QuotElement& r) {
  require_square(a);
  if (!(*a.context() == *r.context())) throw DescriptorMismatch("realizer and target differ in context");
  if (!a.is_symmetric()) throw NotSymmetric("ring realizer must be symmetric");
  if (!a.has_linear_entries()) throw NotLinearEntries("ring realizer entries must be linear");
  if (a.rows() < 2) return false;
  const QuotElement d22 = quot_det(a.block(1, 1, a.rows() - 1, a.rows() - 1));
  if (!d22.is_invertible()) return false;
  return quot_det(a) == r * d22;
}

QuotElement reduce_realizer(const QuotMatrix& input, const QuotElement& r, Trace* trace) {
  if (!is_ring_realizer(input, r)) {
    throw NotARealizer("matrix does not realize " + r.to_string() + " with split 1");
  }
  QuotMatrix a = clean(input);
  record(trace, "CLEAN", a);
  while (a.rows() > 2) {
    const std::size_t m = a.rows();
    // (a) an invertible diagonal entry in the trailing block is isolated and removed.
    std::size_t pick = m;
    for (std::size_t i = 1; i < m && pick == m; ++i) {
      if (a(i, i).is_invertible()) pick = i;
    }
    if (pick != m) {
      a = isolate(a, pick, trace);
      a = delete_index(a, pick);
      record(trace, "DELETE(" + one_based(pick) + ")", a);
      continue;
    }
    // (b) a nonzero, non-invertible diagonal entry with a nonzero coupling
    // in the trailing block is made invertible by augmentation.
    for (std::size_t i = 1; i < m && pick == m; ++i) {
      if (a(i, i).is_zero()) continue;
      for (std::size_t j = 1; j < m; ++j) {
        if (j != i && !a(i, j).is_zero()) {
          pick = i;
          break;
        }
      }
    }
    if (pick != m) {
      if (pick != 1) {
        a = swap_indices(a, pick, 1);
        record(trace, "SWAP(" + one_based(pick) + ",2)", a);
      }
      a = augment(a);
      record(trace, "AUGMENT", a);
      a = isolate(a, 2, trace);
      a = delete_index(a, 2);
      record(trace, "DELETE(3)", a);
      continue;
    }
    // (c) every trailing diagonal entry vanishes: solve directly.
    for (std::size_t i = 1; i < m; ++i) {
      if (!a(i, i).is_zero()) throw NotARealizer("trailing block lost invertibility");
    }
    const QuotElement d22 = quot_det(a.block(1, 1, m - 1, m - 1));
    const QuotElement out = quot_det(a) * d22.inverse();
    record(trace, "BASE: r = " + out.to_string(), a);
    if (!(out == r)) throw std::logic_error("reduction changed the realized element");
    return out;
  }
  if (!a(1, 1).is_invertible()) throw NotARealizer("trailing entry is not invertible");
  const QuotElement c = a(0, 1);
  const QuotElement out = a(0, 0) + c * c * a(1, 1).inverse();
  record(trace, "BASE: r = " + out.to_string(), a);
  if (!(out == r)) throw std::logic_error("reduction changed the realized element");
  return out;
}

}  // namespace bess
