#include "bess/elimination.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <vector>

namespace bess {

namespace {

int permutation_sign(const std::vector<std::size_t>& seq) {
  std::vector<std::size_t> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> rank(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    rank[i] = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin());
  }
  int sign = 1;
  std::vector<bool> seen(rank.size(), false);
  for (std::size_t i = 0; i < rank.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = rank[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Bareiss elimination whose true entries are gamma * stored. Pivots come from
// the trailing block [split, m) x [split, m).
class Eliminator {
 public:
  Eliminator(const PolyMatrix& a, std::size_t split)
      : b_(a), split_(split), field_(a(0, 0).field()),
        gamma_(FieldElement::one(field_)), prev_gamma_(FieldElement::one(field_)),
        prev_pivot_(Polynomial::constant(field_, a(0, 0).n_vars(), 1)) {
    const std::size_t m = a.rows();
    for (std::size_t i = 0; i < m; ++i) {
      rows_.push_back(i);
      cols_.push_back(i);
    }
    row_nnz_.assign(m, 0);
    col_nnz_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!b_(i, j).is_zero()) {
          ++row_nnz_[i];
          ++col_nnz_[j];
        }
      }
    }
  }

  // Returns false when the trailing block is singular.
  bool run() {
    const std::size_t steps = b_.rows() - split_;
    for (std::size_t s = 0; s < steps; ++s) {
      if (!step()) return false;
    }
    return true;
  }

  // det of the trailing block.
  Polynomial block_det() const {
    const int sign = permutation_sign(pivot_rows_) * permutation_sign(pivot_cols_);
    Polynomial d = prev_pivot_ * prev_gamma_;
    return sign < 0 ? -d : d;
  }

  SchurFraction schur() const {
    const FieldElement scale = gamma_ / prev_gamma_;
    PolyMatrix num = poly_zero(field_, prev_pivot_.n_vars(), split_, split_);
    for (std::size_t i = 0; i < split_; ++i) {
      for (std::size_t j = 0; j < split_; ++j) num(i, j) = b_(i, j) * scale;
    }
    return SchurFraction{std::move(num), prev_pivot_, block_det()};
  }

 private:
  void set_entry(std::size_t i, std::size_t j, Polynomial value) {
    const bool was = !b_(i, j).is_zero();
    const bool now = !value.is_zero();
    if (was != now) {
      const int delta = now ? 1 : -1;
      row_nnz_[i] += delta;
      col_nnz_[j] += delta;
    }
    b_(i, j) = std::move(value);
  }

  bool choose_pivot(std::size_t& r, std::size_t& c) const {
    bool found = false;
    std::tuple<int, std::size_t, std::size_t> best{};
    for (std::size_t i : rows_) {
      if (i < split_) continue;
      if (row_nnz_[i] == 0) continue;
      for (std::size_t j : cols_) {
        if (j < split_) continue;
        const Polynomial& e = b_(i, j);
        if (e.is_zero()) continue;
        const std::size_t markowitz = (row_nnz_[i] - 1) * (col_nnz_[j] - 1);
        std::tuple<int, std::size_t, std::size_t> key{e.is_constant() ? 0 : 1, e.term_count(),
                                                      markowitz};
        if (!found || key < best) {
          best = key;
          r = i;
          c = j;
          found = true;
        }
      }
    }
    return found;
  }

  bool step() {
    std::size_t r = 0, c = 0;
    if (!choose_pivot(r, c)) return false;
    const Polynomial pivot = b_(r, c);
    std::erase(rows_, r);
    std::erase(cols_, c);

    FieldElement new_gamma = gamma_ * gamma_;
    if (pivot.is_constant() && prev_pivot_.is_constant()) {
      const FieldElement inv = pivot.constant_value().inverse();
      for (std::size_t i : rows_) {
        if (b_(i, c).is_zero()) continue;
        const Polynomial f = b_(i, c) * inv;
        for (std::size_t j : cols_) {
          if (b_(r, j).is_zero()) continue;
          set_entry(i, j, b_(i, j) - f * b_(r, j));
        }
      }
      new_gamma *= pivot.constant_value();
      new_gamma /= prev_gamma_ * prev_pivot_.constant_value();
    } else {
      const bool scalar_div = prev_pivot_.is_constant();
      const FieldElement prev_inv =
          scalar_div ? prev_pivot_.constant_value().inverse() : FieldElement::one(field_);
      for (std::size_t i : rows_) {
        const bool has_c = !b_(i, c).is_zero();
        for (std::size_t j : cols_) {
          const bool cross = has_c && !b_(r, j).is_zero();
          if (b_(i, j).is_zero() && !cross) continue;
          Polynomial t = pivot * b_(i, j);
          if (cross) t -= b_(i, c) * b_(r, j);
          if (scalar_div) {
            t *= prev_inv;
          } else {
            t = t.divide_exact(prev_pivot_);
          }
          set_entry(i, j, std::move(t));
        }
      }
      new_gamma /= prev_gamma_;
    }
    // Row r and column c leave the active set; their counts no longer matter.
    for (std::size_t j : cols_) {
      if (!b_(r, j).is_zero()) --col_nnz_[j];
    }
    for (std::size_t i : rows_) {
      if (!b_(i, c).is_zero()) --row_nnz_[i];
    }
    pivot_rows_.push_back(r);
    pivot_cols_.push_back(c);
    prev_gamma_ = gamma_;
    prev_pivot_ = pivot;
    gamma_ = new_gamma;
    return true;
  }

  PolyMatrix b_;
  std::size_t split_;
  Field field_;
  FieldElement gamma_;
  FieldElement prev_gamma_;
  Polynomial prev_pivot_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  std::vector<std::size_t> row_nnz_;
  std::vector<std::size_t> col_nnz_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<std::size_t> pivot_cols_;
};

Polynomial cofactor_recursive(const PolyMatrix& a, std::vector<std::size_t>& rows,
                              std::vector<std::size_t>& cols) {
  const Polynomial& any = a(0, 0);
  if (rows.empty()) return Polynomial::constant(any.field(), any.n_vars(), 1);
  if (rows.size() == 1) return a(rows[0], cols[0]);
  // Expand along the row with fewest nonzeros.
  std::size_t best = 0, best_count = std::numeric_limits<std::size_t>::max();
  for (std::size_t t = 0; t < rows.size(); ++t) {
    std::size_t count = 0;
    for (std::size_t j : cols) count += a(rows[t], j).is_zero() ? 0 : 1;
    if (count < best_count) {
      best_count = count;
      best = t;
    }
  }
  Polynomial sum(any.field(), any.n_vars());
  if (best_count == 0) return sum;
  const std::size_t row = rows[best];
  rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
  for (std::size_t u = 0; u < cols.size(); ++u) {
    const Polynomial& e = a(row, cols[u]);
    if (e.is_zero()) continue;
    const std::size_t col = cols[u];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(u));
    Polynomial minor = cofactor_recursive(a, rows, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(u), col);
    if (minor.is_zero()) continue;
    Polynomial term = e * minor;
    if ((best + u) % 2 == 1) sum -= term; else sum += term;
  }
  rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(best), row);
  return sum;
}

}  // namespace

PolyMatrix poly_zero(const Field& field, std::size_t n_vars, std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, cols, Polynomial(field, n_vars));
}

Polynomial poly_det(const PolyMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  if (a.rows() == 0) throw DimensionMismatch("determinant of empty matrix");
  Eliminator e(a, 0);
  if (!e.run()) return Polynomial(a(0, 0).field(), a(0, 0).n_vars());
  return e.block_det();
}

Polynomial poly_det_cofactor(const PolyMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  if (a.rows() == 0) throw DimensionMismatch("determinant of empty matrix");
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    rows.push_back(i);
    cols.push_back(i);
  }
  return cofactor_recursive(a, rows, cols);
}

std::optional<SchurFraction> schur_fraction(const PolyMatrix& a, std::size_t split) {
  if (!a.is_square()) throw DimensionMismatch("Schur complement of non-square matrix");
  if (split == 0 || split >= a.rows()) throw DimensionMismatch("invalid block split");
  Eliminator e(a, split);
  if (!e.run()) return std::nullopt;
  return e.schur();
}

}  // namespace bess
