#include "bess/realizer.hpp"

#include <algorithm>
#include <map>

#include "bess/schur_algebra.hpp"

namespace bess {

namespace {

constexpr Checks kDeferred = Checks::deferred;

struct Context {
  Field field;
  std::size_t n;
};

FieldElement one(const Context& c) { return FieldElement::one(c.field); }

LinearPencil diagonal_pencil(const Context& c, const ConstMatrix& top, const FieldElement& bottom) {
  const std::size_t k = top.rows();
  ConstMatrix a0 = const_zero(c.field, k + 1, k + 1);
  a0.set_block(0, 0, top);
  a0(k, k) = bottom;
  return LinearPencil(LinearMatrix::constant(c.field, c.n, a0), k);
}

// Schur complement 0_k.
LinearPencil zero_pencil(const Context& c, std::size_t k) {
  return diagonal_pencil(c, const_zero(c.field, k, k), one(c));
}

// Schur complement B.
LinearPencil constant_pencil(const Context& c, const ConstMatrix& b) {
  return diagonal_pencil(c, b, one(c));
}

// Schur complement z_j (0-based j).
LinearPencil atom_variable(const Context& c, std::size_t j) {
  LinearMatrix m(c.field, c.n, 2, 2);
  ConstMatrix a0 = const_zero(c.field, 2, 2);
  a0(1, 1) = one(c);
  ConstMatrix aj = const_zero(c.field, 2, 2);
  aj(0, 0) = one(c);
  m.set_coefficient(0, a0);
  m.set_coefficient(j + 1, aj);
  return LinearPencil(std::move(m), 1);
}

LinearMatrix identity_x(const Context& c, std::size_t k) {
  return LinearMatrix::constant(c.field, c.n, const_identity(c.field, k));
}

LinearPencil br_monomial(const Context& c, const Monomial& m) {
  std::optional<LinearPencil> out;
  for (std::size_t j = 0; j < c.n; ++j) {
    for (unsigned e = 0; e < m.exponent(j); ++e) {
      LinearPencil atom = atom_variable(c, j);
      out = out ? op_product(*out, identity_x(c, 1), atom, kDeferred) : atom;
    }
  }
  return out ? *out : constant_pencil(c, const_identity(c.field, 1));
}

LinearPencil sum_pencils(const Context& c, std::vector<LinearPencil> parts, std::size_t k) {
  if (parts.empty()) return zero_pencil(c, k);
  LinearPencil acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) acc = op_add(acc, parts[i], kDeferred);
  return acc;
}

LinearPencil br_polynomial(const Context& c, const Polynomial& p) {
  std::vector<LinearPencil> parts;
  for (const Term& t : p.terms()) {
    if (t.monomial.is_one()) {
      ConstMatrix b = const_zero(c.field, 1, 1);
      b(0, 0) = t.coefficient;
      parts.push_back(constant_pencil(c, b));
      continue;
    }
    LinearPencil mono = br_monomial(c, t.monomial);
    parts.push_back(t.coefficient.is_one() ? mono : op_scale(mono, t.coefficient, kDeferred));
  }
  return sum_pencils(c, std::move(parts), 1);
}

// Realizes a k x k polynomial matrix grouped by monomial.
LinearPencil br_polynomial_matrix(const Context& c, const PolyMatrix& p) {
  const std::size_t k = p.rows();
  if (k == 1) return br_polynomial(c, p(0, 0));
  std::map<Monomial, ConstMatrix, std::greater<>> by_monomial;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (const Term& t : p(i, j).terms()) {
        auto [it, inserted] = by_monomial.try_emplace(t.monomial, const_zero(c.field, k, k));
        it->second(i, j) = t.coefficient;
      }
    }
  }
  std::vector<LinearPencil> parts;
  for (const auto& [mono, b] : by_monomial) {
    if (mono.is_one()) {
      parts.push_back(constant_pencil(c, b));
      continue;
    }
    LinearPencil scaled = op_kron_identity(br_monomial(c, mono), k, kDeferred);
    parts.push_back(op_sandwich(b, scaled, const_identity(c.field, k), kDeferred));
  }
  return sum_pencils(c, std::move(parts), k);
}

// (1/q) * P for a common denominator q.
LinearPencil br_over_denominator(const Context& c, const Polynomial& q, const PolyMatrix& p) {
  const std::size_t k = p.rows();
  if (q.is_constant()) {
    PolyMatrix scaled = p;
    const FieldElement inv = q.constant_value().inverse();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) scaled(i, j) *= inv;
    }
    return br_polynomial_matrix(c, scaled);
  }
  LinearPencil inv_q = op_inverse(br_polynomial(c, q), kDeferred);
  if (k > 1) inv_q = op_kron_identity(inv_q, k, kDeferred);
  return op_product(inv_q, identity_x(c, k), br_polynomial_matrix(c, p), kDeferred);
}

LinearPencil br_scalar(const Context& c, const RationalFunction& f) {
  PolyMatrix p = poly_zero(c.field, c.n, 1, 1);
  p(0, 0) = f.num();
  return br_over_denominator(c, f.den(), p);
}

ConstMatrix unit_column(const Context& c, std::size_t k, std::size_t i) {
  return const_unit_column(c.field, k, i);
}

// Embeds a 1 x 1 realization of f at entry (i, j) of a k x k matrix.
LinearPencil place_entry(const Context& c, const LinearPencil& scalar, std::size_t k, std::size_t i,
                         std::size_t j) {
  if (k == 1) return scalar;
  return op_sandwich(unit_column(c, k, i), scalar, unit_column(c, k, j).transpose(), kDeferred);
}

LinearPencil br_matrix(const Context& c, const RationalMatrix& f) {
  const std::size_t k = f.rows();
  // Group entries by (normalized) denominator; a lone entry is realized as a scalar.
  std::vector<std::pair<Polynomial, std::vector<std::pair<std::size_t, std::size_t>>>> groups;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (f(i, j).is_zero()) continue;
      const Polynomial& q = f(i, j).den();
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == q; });
      if (it == groups.end()) {
        groups.push_back({q, {{i, j}}});
      } else {
        it->second.push_back({i, j});
      }
    }
  }
  std::vector<LinearPencil> parts;
  for (const auto& [q, cells] : groups) {
    if (cells.size() == 1 && !q.is_constant()) {
      const auto [i, j] = cells.front();
      parts.push_back(place_entry(c, br_scalar(c, f(i, j)), k, i, j));
      continue;
    }
    PolyMatrix p = poly_zero(c.field, c.n, k, k);
    for (const auto& [i, j] : cells) p(i, j) = f(i, j).num();
    parts.push_back(br_over_denominator(c, q, p));
  }
  return sum_pencils(c, std::move(parts), k);
}

// x^2 / (W/W22) for a 1 x 1 realization of x and a symmetric W with split 1.
LinearPencil congruence_divide(const Context& c, const LinearPencil& x, const LinearPencil& w) {
  const std::size_t m = w.size();
  const ConstMatrix e1 = unit_column(c, m, 0);
  const LinearPencil lifted = op_sandwich(e1, x, e1.transpose(), kDeferred);
  const LinearPencil middle = op_product(lifted, w.matrix(), lifted.transpose(), kDeferred);
  return op_sandwich(e1.transpose(), middle, e1, kDeferred);
}

// x^2 for a 1 x 1 realization of x.
LinearPencil norm_square(const Context& c, const LinearPencil& x) {
  return op_product(x, identity_x(c, 1), x.transpose(), kDeferred);
}

// Symmetric realization of a polynomial in at most one variable.
LinearPencil sbr_univariate_polynomial(const Context& c, const Polynomial& p) {
  std::vector<LinearPencil> parts;
  for (const Term& t : p.terms()) {
    const unsigned a = t.monomial.degree();
    if (a == 0) {
      ConstMatrix b = const_zero(c.field, 1, 1);
      b(0, 0) = t.coefficient;
      parts.push_back(constant_pencil(c, b));
      continue;
    }
    LinearPencil mono = atom_variable(c, 0);
    if (a >= 2) {
      const LinearPencil half = br_monomial(c, Monomial::variable(0, a / 2));
      if (a % 2 == 0) {
        mono = norm_square(c, half);
      } else {
        // z^{2d+1} = ((z^{-d}) z^{-1} (z^{-d}))^{-1}
        const LinearPencil inv_half = op_inverse(half, kDeferred);
        LinearMatrix z(c.field, c.n, 1, 1);
        z.set_coefficient(1, const_identity(c.field, 1));
        mono = op_inverse(op_product(inv_half, z, inv_half.transpose(), kDeferred), kDeferred);
      }
    }
    parts.push_back(t.coefficient.is_one() ? mono : op_scale(mono, t.coefficient, kDeferred));
  }
  return sum_pencils(c, std::move(parts), 1);
}

// f = p/q in at most one variable: p (pq)^{-1} p.
LinearPencil sbr_univariate_scalar(const Context& c, const RationalFunction& f) {
  if (f.is_zero()) return zero_pencil(c, 1);
  if (f.den().is_constant()) {
    return sbr_univariate_polynomial(c, f.num() * f.den().constant_value().inverse());
  }
  const LinearPencil w = sbr_univariate_polynomial(c, f.num() * f.den());
  return congruence_divide(c, br_polynomial(c, f.num()), w);
}

// Square root of a polynomial with even exponents over GF(2).
Polynomial char2_sqrt(const Polynomial& g) {
  std::vector<Term> terms;
  for (const Term& t : g.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < g.n_vars(); ++i) m.set_exponent(i, t.monomial.exponent(i) / 2);
    terms.push_back(Term{m, t.coefficient});  // every element of GF(2) is its own square root
  }
  return Polynomial::from_terms(g.field(), g.n_vars(), std::move(terms));
}

// f = sum_beta z^beta (s_beta / q)^2 with s_beta^2 = g_beta.
LinearPencil sbr_char2_scalar(const Context& c, const RationalFunction& f,
                              const Char2Certificate& cert) {
  if (f.is_zero()) return zero_pencil(c, 1);
  std::vector<LinearPencil> parts;
  for (const ParityClass& cls : cert.classes) {
    const RationalFunction x(char2_sqrt(cls.g), f.den());
    const LinearPencil bx = br_scalar(c, x);
    if (cls.parity.is_one()) {
      parts.push_back(norm_square(c, bx));
      continue;
    }
    std::size_t j = 0;
    while (cls.parity.exponent(j) == 0) ++j;
    const LinearPencil w = op_inverse(atom_variable(c, j), kDeferred);
    parts.push_back(congruence_divide(c, bx, w));
  }
  return sum_pencils(c, std::move(parts), 1);
}

// F = F_upp + F_upp^T + diag F with diagonal entries from the given realizer.
template <class DiagonalRealizer>
LinearPencil assemble_symmetric(const Context& c, const RationalMatrix& f, DiagonalRealizer diag) {
  const std::size_t k = f.rows();
  std::vector<LinearPencil> parts;
  RationalMatrix upper(c.field, c.n, k, k);
  bool has_upper = false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (f(i, j).is_zero()) continue;
      upper.set(i, j, f(i, j));
      has_upper = true;
    }
  }
  if (has_upper) parts.push_back(op_symmetrize(br_matrix(c, upper), kDeferred));
  for (std::size_t i = 0; i < k; ++i) {
    if (f(i, i).is_zero()) continue;
    parts.push_back(place_entry(c, diag(i, f(i, i)), k, i, i));
  }
  return sum_pencils(c, std::move(parts), k);
}

void require_square(const RationalMatrix& f) {
  if (!f.is_square() || f.rows() == 0) throw DimensionMismatch("realization needs a square matrix");
}

void require_homogeneous_degree_one(const RationalMatrix& f) {
  if (!f.is_homogeneous(1)) throw NotHomogeneousDegreeOne("entries must be homogeneous of degree 1");
}

// n = 1: F = z1 F(1).
LinearPencil homogeneous_univariate(const Context& c, const RationalMatrix& f) {
  const std::size_t k = f.rows();
  const std::vector<FieldElement> point{one(c)};
  ConstMatrix a1 = const_zero(c.field, k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto v = f(i, j).evaluate(point);
      if (!v) throw DivisionByZero("entry undefined at z1 = 1");
      a1(i, j) = *v;
    }
  }
  a1(k, k) = one(c);
  LinearMatrix m(c.field, 1, k + 1, k + 1);
  m.set_coefficient(1, a1);
  return LinearPencil(std::move(m), k);
}

std::string parity_label(const Monomial& m) { return m.to_string(); }

}  // namespace

// ---------------------------------------------------------------- certificates

std::string Char2Certificate::to_string() const {
  std::string out = "h = " + h.to_string() + "\n";
  out += std::string("verdict: ") + (realizable ? "realizable" : "not realizable") + "\n";
  if (offending) {
    Monomial beta;
    for (std::size_t i = 0; i < kMaxVariables; ++i) beta.set_exponent(i, offending->exponent(i) % 2);
    out += "offending monomial: " + offending->to_string() + " (parity " + parity_label(beta) + ")\n";
  }
  for (const ParityClass& cls : classes) {
    out += "  parity " + parity_label(cls.parity) + ": g = " + cls.g.to_string() + "\n";
  }
  return out;
}

NotRealizableChar2::NotRealizableChar2(std::size_t index, Char2Certificate certificate)
    : Error("diagonal entry " + std::to_string(index + 1) +
            " has no symmetric realization in characteristic 2"),
      index_(index), certificate_(std::move(certificate)) {}

Char2Certificate decide_sbr_scalar_char2(const RationalFunction& f) {
  if (f.field().characteristic() != 2) throw WrongCharacteristic("parity test needs characteristic 2");
  if (f.n_vars() < 2) throw TooFewVariables("parity test needs at least two variables");
  Char2Certificate cert;
  cert.h = f.num() * f.den();
  std::map<Monomial, std::vector<Term>, std::greater<>> classes;
  for (const Term& t : cert.h.terms()) {
    Monomial beta;
    for (std::size_t i = 0; i < f.n_vars(); ++i) beta.set_exponent(i, t.monomial.exponent(i) % 2);
    if (beta.degree() >= 2 && !cert.offending) cert.offending = t.monomial;
    classes[beta].push_back(Term{t.monomial / beta, t.coefficient});
  }
  for (auto& [beta, terms] : classes) {
    cert.classes.push_back(
        ParityClass{beta, Polynomial::from_terms(f.field(), f.n_vars(), std::move(terms))});
  }
  cert.realizable = !cert.offending.has_value();
  return cert;
}

std::string RealizabilityVerdict::to_string() const {
  std::string out = std::string("verdict: ") + (realizable ? "realizable" : "not realizable") +
                    "\nreason: " + reason + "\n";
  for (const auto& [index, cert] : certificates) {
    out += "diagonal entry " + std::to_string(index + 1) + ":\n" + cert.to_string();
  }
  return out;
}

namespace {

RealizabilityVerdict diagonal_verdict(const RationalMatrix& g) {
  RealizabilityVerdict v;
  v.realizable = true;
  v.reason = "parity test on diagonal entries";
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Char2Certificate cert = decide_sbr_scalar_char2(g(i, i));
    v.realizable = v.realizable && cert.realizable;
    v.certificates.emplace_back(i, std::move(cert));
  }
  return v;
}

}  // namespace

RealizabilityVerdict decide_sbr(const RationalMatrix& f) {
  require_square(f);
  if (!f.is_symmetric()) return {false, "matrix is not symmetric", {}};
  if (f.field().characteristic() != 2) return {true, "characteristic is not 2", {}};
  if (f.n_vars() <= 1) return {true, "at most one variable", {}};
  return diagonal_verdict(f);
}

RealizabilityVerdict decide_hsbr(const RationalMatrix& f) {
  require_square(f);
  if (!f.is_symmetric()) return {false, "matrix is not symmetric", {}};
  if (f.n_vars() == 0) return {false, "no variables", {}};
  if (!f.is_homogeneous(1)) return {false, "entries are not homogeneous of degree 1", {}};
  if (f.field().characteristic() != 2) return {true, "characteristic is not 2", {}};
  if (f.n_vars() <= 2) return {true, "at most two variables", {}};
  RealizabilityVerdict v = diagonal_verdict(dehomogenize_last(f));
  v.reason = "parity test on dehomogenized diagonal entries";
  return v;
}

// ---------------------------------------------------------------- realizations

RealizationResult realize_br(const RationalMatrix& f) {
  require_square(f);
  const Context c{f.field(), f.n_vars()};
  return RealizationResult{br_matrix(c, f), RealizationKind::BR, f};
}

RealizationResult realize_hbr(const RationalMatrix& f) {
  require_square(f);
  if (f.n_vars() == 0) throw TooFewVariables("homogeneous realization needs a variable");
  require_homogeneous_degree_one(f);
  const Context c{f.field(), f.n_vars()};
  if (f.n_vars() == 1) {
    return RealizationResult{homogeneous_univariate(c, f), RealizationKind::hBR, f};
  }
  const RationalMatrix g = dehomogenize_last(f);
  const LinearPencil p = br_matrix(Context{f.field(), g.n_vars()}, g);
  return RealizationResult{op_homogenize(p, kDeferred), RealizationKind::hBR, f};
}

RealizationResult realize_sbr(const RationalMatrix& f) {
  require_square(f);
  if (!f.is_symmetric()) throw NotSymmetric("symmetric realization needs a symmetric matrix");
  const Context c{f.field(), f.n_vars()};
  LinearPencil p = [&]() {
    if (c.n <= 1) {
      return assemble_symmetric(c, f, [&](std::size_t, const RationalFunction& e) {
        return sbr_univariate_scalar(c, e);
      });
    }
    if (c.field.characteristic() != 2) {
      const FieldElement half = FieldElement(c.field, 2LL).inverse();
      return op_scale(op_symmetrize(br_matrix(c, f), kDeferred), half, kDeferred);
    }
    std::vector<Char2Certificate> certs;
    for (std::size_t i = 0; i < f.rows(); ++i) {
      Char2Certificate cert = decide_sbr_scalar_char2(f(i, i));
      if (!cert.realizable) throw NotRealizableChar2(i, std::move(cert));
      certs.push_back(std::move(cert));
    }
    return assemble_symmetric(c, f, [&](std::size_t i, const RationalFunction& e) {
      return sbr_char2_scalar(c, e, certs[i]);
    });
  }();
  return RealizationResult{std::move(p), RealizationKind::SBR, f};
}

std::variant<RealizationResult, DiagonalObstruction> decide_and_realize_hsbr(const RationalMatrix& f) {
  require_square(f);
  if (!f.is_symmetric()) throw NotSymmetric("symmetric realization needs a symmetric matrix");
  if (f.n_vars() == 0) throw TooFewVariables("homogeneous realization needs a variable");
  require_homogeneous_degree_one(f);
  const Context c{f.field(), f.n_vars()};
  if (f.n_vars() == 1) {
    return RealizationResult{homogeneous_univariate(c, f), RealizationKind::hSBR, f};
  }
  const RationalMatrix g = dehomogenize_last(f);
  if (f.field().characteristic() == 2 && f.n_vars() >= 3) {
    for (std::size_t i = 0; i < g.rows(); ++i) {
      Char2Certificate cert = decide_sbr_scalar_char2(g(i, i));
      if (!cert.realizable) return DiagonalObstruction{i, std::move(cert)};
    }
  }
  const LinearPencil p = realize_sbr(g).pencil;
  return RealizationResult{op_homogenize(p, kDeferred), RealizationKind::hSBR, f};
}

}  // namespace bess
