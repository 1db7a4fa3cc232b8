// Randomized quotient-ring laws over GF(2), shared by the unit tests and the
// acceptance binary.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bess/errors.hpp"
#include "bess/quotring.hpp"
#include "generators.hpp"

namespace bess::testing {

inline QuotContextPtr random_context(Generator& g, std::size_t min_vars = 1) {
  const Field f = Field::prime(2);
  const std::size_t n = static_cast<std::size_t>(g.uniform(static_cast<int>(min_vars), 3));
  std::vector<FieldElement> ell;
  for (std::size_t i = 0; i < n; ++i) ell.push_back(g.scalar(f));
  return make_quot_context(f, std::move(ell));
}

inline QuotElement random_element(Generator& g, const QuotContextPtr& ctx, unsigned degree = 4) {
  return QuotElement(ctx, g.polynomial(ctx->field(), ctx->n_vars(), degree, 5));
}

inline QuotElement random_linear(Generator& g, const QuotContextPtr& ctx) {
  return QuotElement(ctx, g.polynomial(ctx->field(), ctx->n_vars(), 1, 3));
}

inline bool is_multilinear(const Polynomial& p) {
  for (const Term& t : p.terms()) {
    for (std::size_t i = 0; i < p.n_vars(); ++i) {
      if (t.monomial.exponent(i) > 1) return false;
    }
  }
  return true;
}

// MULT is idempotent, multilinear-valued, fixes z_i^2 -> l_i^2, is additive and
// multiplicative modulo itself; projection and lift compose as expected.
inline bool quot_law_mult(Generator& g) {
  const QuotContextPtr ctx = random_context(g);
  const std::size_t n = ctx->n_vars();
  const Field& f = ctx->field();
  const Polynomial p = g.polynomial(f, n, 4, 5), q = g.polynomial(f, n, 4, 5);
  const Polynomial mp = mult_normal_form(p, *ctx), mq = mult_normal_form(q, *ctx);
  bool ok = is_multilinear(mp) && mult_normal_form(mp, *ctx) == mp;
  ok = ok && mult_normal_form(p + q, *ctx) == mp + mq;
  ok = ok && mult_normal_form(p * q, *ctx) == mult_normal_form(mp * mq, *ctx);
  const std::size_t v = static_cast<std::size_t>(g.uniform(0, static_cast<int>(n) - 1));
  const Polynomial zv = Polynomial::variable(f, n, v);
  ok = ok && mult_normal_form(zv * zv, *ctx) == Polynomial::constant(f, n, ctx->ell_squared(v));
  const QuotElement r(ctx, p);
  ok = ok && QuotElement(ctx, mp) == r;                // pi o MULT = pi
  ok = ok && r.normal_form() == mp;                    // rho o pi = MULT
  ok = ok && QuotElement(ctx, r.normal_form()) == r;   // pi o rho = id
  return ok;
}

inline bool quot_law_abs(Generator& g) {
  const QuotContextPtr ctx = random_context(g);
  const QuotElement a = random_element(g, ctx), b = random_element(g, ctx);
  bool ok = (a * b).abs() == a.abs() * b.abs();
  ok = ok && (a + b).abs() == a.abs() + b.abs();
  const FieldElement c = a.abs();
  ok = ok && QuotElement::constant(ctx, c * c) == a * a;
  if (a.abs().is_zero()) {
    ok = ok && !a.is_invertible() && (a * a).is_zero();
    try {
      (void)a.inverse();
      ok = false;
    } catch (const NotInvertible&) {
    }
  } else {
    ok = ok && a.is_invertible() && a * a.inverse() == QuotElement::constant(ctx, FieldElement(ctx->field(), 1));
  }
  return ok;
}

inline bool quot_law_inverse(Generator& g) {
  const QuotContextPtr ctx = random_context(g);
  for (;;) {
    const QuotElement r = random_element(g, ctx);
    if (r.abs().is_zero()) continue;
    const FieldElement a = r.abs();
    const QuotElement inv = r.inverse();
    return inv == r * (a * a).inverse() &&
           r * inv == QuotElement::constant(ctx, FieldElement(ctx->field(), 1)) && inv.abs() == a.inverse();
  }
}

inline QuotMatrix random_symmetric(Generator& g, const QuotContextPtr& ctx, std::size_t m,
                                   bool linear) {
  QuotMatrix a(ctx, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const QuotElement e = linear ? random_linear(g, ctx) : random_element(g, ctx, 2);
      a.set(i, j, e);
      a.set(j, i, e);
    }
  }
  return a;
}

// Involution sum, Leibniz expansion and elimination-then-projection agree;
// projection commutes with determinants of arbitrary polynomial matrices.
inline bool quot_law_det(Generator& g) {
  const QuotContextPtr ctx = random_context(g);
  const std::size_t m = static_cast<std::size_t>(g.uniform(1, 4));
  const QuotMatrix a = random_symmetric(g, ctx, m, false);
  const QuotElement lz = det_leibniz(a);
  bool ok = det_involution(a) == lz && quot_det(a) == lz;
  const std::size_t k = static_cast<std::size_t>(g.uniform(1, 3));
  PolyMatrix p = poly_zero(ctx->field(), ctx->n_vars(), k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) p(i, j) = g.polynomial(ctx->field(), ctx->n_vars(), 3, 3);
  }
  ok = ok && QuotElement(ctx, poly_det(p)) == det_leibniz(QuotMatrix(ctx, p));
  return ok;
}

inline PolyMatrix poly_product(const PolyMatrix& a, const PolyMatrix& b, const Field& f, std::size_t n) {
  PolyMatrix c = poly_zero(f, n, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t t = 0; t < a.cols(); ++t) c(i, j) = c(i, j) + a(i, t) * b(t, j);
    }
  }
  return c;
}

// A realizer of a known linear r: diag(r, U) with det U invertible, moved by
// a congruence [[1, 0], [w, Q]] with constant w and invertible constant Q.
struct KnownRealizer {
  QuotMatrix a;
  QuotElement r;
};

inline KnownRealizer padded_realizer(Generator& g, const QuotContextPtr& ctx, std::size_t m) {
  const Field& f = ctx->field();
  const std::size_t n = ctx->n_vars();
  const QuotElement r = random_linear(g, ctx);
  QuotMatrix u = random_symmetric(g, ctx, m - 1, true);
  while (!quot_det(u).is_invertible()) u = random_symmetric(g, ctx, m - 1, true);
  ConstMatrix pm = const_identity(f, m);
  for (;;) {
    for (std::size_t i = 1; i < m; ++i) {
      pm(i, 0) = g.scalar(f);
      for (std::size_t j = 1; j < m; ++j) pm(i, j) = g.scalar(f);
    }
    if (!const_det(pm).is_zero()) break;
  }
  PolyMatrix d = poly_zero(f, n, m, m);
  d(0, 0) = r.normal_form();
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < m; ++j) d(i, j) = u(i - 1, j - 1).normal_form();
  }
  PolyMatrix p = poly_zero(f, n, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) p(i, j) = Polynomial::constant(f, n, pm(i, j));
  }
  return {QuotMatrix(ctx, poly_product(poly_product(p.transpose(), d, f, n), p, f, n)), r};
}

// Any symmetric linear matrix with invertible det A22 realizes det A / det A22.
inline std::optional<KnownRealizer> random_realizer(Generator& g, const QuotContextPtr& ctx,
                                                    std::size_t m) {
  const QuotMatrix a = random_symmetric(g, ctx, m, true);
  const QuotElement d22 = quot_det(a.block(1, 1, m - 1, m - 1));
  if (!d22.is_invertible()) return std::nullopt;
  return KnownRealizer{a, quot_det(a) * d22.inverse()};
}

inline KnownRealizer some_realizer(Generator& g, const QuotContextPtr& ctx, std::size_t m) {
  if (g.coin()) return padded_realizer(g, ctx, m);
  for (;;) {
    if (auto r = random_realizer(g, ctx, m)) return *r;
  }
}

inline bool quot_law_clean_add(Generator& g) {
  const QuotContextPtr ctx = random_context(g);
  const std::size_t m = static_cast<std::size_t>(g.uniform(2, 5));
  const KnownRealizer k = some_realizer(g, ctx, m);
  if (!is_ring_realizer(k.a, k.r)) return false;
  QuotMatrix a = clean(k.a);
  if (!is_ring_realizer(a, k.r)) return false;
  for (int step = 0; step < 3; ++step) {
    const std::size_t i = static_cast<std::size_t>(g.uniform(1, static_cast<int>(m) - 1));
    std::size_t j = static_cast<std::size_t>(g.uniform(0, static_cast<int>(m) - 2));
    if (j >= i) ++j;
    a = add_transform(a, i, j, random_element(g, ctx, 2));
    if (!is_ring_realizer(a, k.r)) return false;
  }
  return true;
}

inline bool quot_law_reduce(Generator& g) {
  const QuotContextPtr ctx = random_context(g);
  const std::size_t m = static_cast<std::size_t>(g.uniform(2, 5));
  const KnownRealizer k = some_realizer(g, ctx, m);
  const QuotElement out = reduce_realizer(k.a, k.r);
  return out == k.r && out.is_linear() && k.r.is_linear();
}

struct QuotLaw {
  std::string name;
  std::function<bool(Generator&)> run;
};

inline std::vector<QuotLaw> quot_laws() {
  return {{"MULT / projection / lift", quot_law_mult},
          {"absolute value", quot_law_abs},
          {"inverse", quot_law_inverse},
          {"involution vs Leibniz determinant", quot_law_det},
          {"clean/add realizer preservation", quot_law_clean_add}};
}

}  // namespace bess::testing
