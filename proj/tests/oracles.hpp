// Reference computations that share no code with the library's elimination,
// realization or decision paths.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "bess/pencil.hpp"

namespace bess::testing {

// GF(p^k) = GF(p)[t]/(f) with a random monic irreducible f, for evaluating
// identities over GF(p) at points outside the prime field.
class ExtensionField {
 public:
  using Elem = std::vector<std::uint64_t>;  // k coefficients, low degree first

  ExtensionField(std::uint64_t p, std::mt19937_64& rng) : p_(p) {
    if (p > (1ULL << 20)) {
      k_ = 1;
      modulus_ = {0, 1};
      return;
    }
    k_ = static_cast<unsigned>(std::ceil(24.0 * std::log(2.0) / std::log(static_cast<double>(p))));
    for (;;) {
      Poly f(k_ + 1, 0);
      for (unsigned i = 0; i < k_; ++i) f[i] = rng() % p_;
      f[k_] = 1;
      if (is_irreducible(f)) {
        modulus_ = std::move(f);
        return;
      }
    }
  }

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const {
    Elem e = zero();
    e[0] = 1 % p_;
    return e;
  }
  Elem from_residue(std::uint64_t r) const {
    Elem e = zero();
    e[0] = r % p_;
    return e;
  }
  Elem random(std::mt19937_64& rng) const {
    Elem e = zero();
    for (auto& c : e) c = rng() % p_;
    return e;
  }
  bool is_zero(const Elem& a) const {
    for (auto c : a) {
      if (c != 0) return false;
    }
    return true;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    Poly prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j])) % p_;
    }
    reduce(prod, modulus_);
    Elem r = zero();
    for (unsigned i = 0; i < k_ && i < prod.size(); ++i) r[i] = prod[i];
    return r;
  }
  Elem inv(const Elem& a) const {
    // a^(p^k - 2)
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k_; ++i) e *= p_;
    e -= 2;
    Elem result = one(), base = a;
    while (e != 0) {
      if (e & 1U) result = mul(result, base);
      e >>= 1U;
      if (e != 0) base = mul(base, base);
    }
    return result;
  }

 private:
  using Poly = std::vector<std::uint64_t>;

  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t invmod(std::uint64_t a) const {
    std::uint64_t r = 1, base = a, e = p_ - 2;
    while (e != 0) {
      if (e & 1U) r = mulmod(r, base);
      base = mulmod(base, base);
      e >>= 1U;
    }
    return r;
  }
  static void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  void reduce(Poly& a, const Poly& m) const {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = invmod(m.back());
    while (a.size() > dm) {
      const std::uint64_t c = mulmod(a.back(), lead_inv);
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + p_ - mulmod(c, m[i])) % p_;
      }
      trim(a);
    }
  }
  Poly mulmod_poly(const Poly& a, const Poly& b, const Poly& m) const {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j])) % p_;
    }
    reduce(prod, m);
    return prod;
  }
  Poly gcd(Poly a, Poly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      reduce(a, b);
      std::swap(a, b);
    }
    return a;
  }
  // Ben-Or: f is irreducible iff gcd(t^(p^i) - t, f) = 1 for 1 <= i <= k/2.
  bool is_irreducible(const Poly& f) const {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    Poly t = {0, 1};
    Poly power = t;
    for (unsigned i = 1; i <= k / 2; ++i) {
      Poly base = power;
      Poly acc = {1};
      for (std::uint64_t e = p_; e != 0; e >>= 1U) {
        if (e & 1U) acc = mulmod_poly(acc, base, f);
        base = mulmod_poly(base, base, f);
      }
      power = acc;
      Poly diff = power;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = (diff[1] + p_ - 1) % p_;
      Poly g = gcd(f, diff);
      if (g.size() != 1) return false;
    }
    return true;
  }

  std::uint64_t p_;
  unsigned k_ = 1;
  Poly modulus_;
};

// Exact rationals.
struct RationalDomain {
  using Elem = mpq_class;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem embed(const FieldElement& c) const { return c.rational(); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Elem random(std::mt19937_64& rng) const {
    return mpq_class(static_cast<long>(rng() % 61) - 30, static_cast<long>(rng() % 5) + 1);
  }
};

struct ExtensionDomain {
  using Elem = ExtensionField::Elem;
  const ExtensionField* ext;
  Elem zero() const { return ext->zero(); }
  Elem one() const { return ext->one(); }
  Elem embed(const FieldElement& c) const { return ext->from_residue(c.residue()); }
  bool is_zero(const Elem& a) const { return ext->is_zero(a); }
  Elem add(const Elem& a, const Elem& b) const { return ext->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return ext->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return ext->mul(a, b); }
  Elem inv(const Elem& a) const { return ext->inv(a); }
  Elem random(std::mt19937_64& rng) const { return ext->random(rng); }
};

template <class D>
typename D::Elem eval_polynomial(const D& d, const Polynomial& p,
                                 const std::vector<typename D::Elem>& point) {
  auto acc = d.zero();
  for (const Term& t : p.terms()) {
    auto v = d.embed(t.coefficient);
    for (std::size_t i = 0; i < p.n_vars(); ++i) {
      for (unsigned e = 0; e < t.monomial.exponent(i); ++e) v = d.mul(v, point[i]);
    }
    acc = d.add(acc, v);
  }
  return acc;
}

template <class D>
std::optional<typename D::Elem> eval_rational(const D& d, const RationalFunction& f,
                                              const std::vector<typename D::Elem>& point) {
  auto den = eval_polynomial(d, f.den(), point);
  if (d.is_zero(den)) return std::nullopt;
  return d.mul(eval_polynomial(d, f.num(), point), d.inv(den));
}

// A11 - A12 A22^{-1} A21 at a point, by Gauss-Jordan on [A22 | A21].
template <class D>
std::optional<std::vector<std::vector<typename D::Elem>>> eval_schur(
    const D& d, const LinearPencil& p, const std::vector<typename D::Elem>& point) {
  using E = typename D::Elem;
  const std::size_t m = p.size(), k = p.split(), s = m - k;
  std::vector<std::vector<E>> a(m, std::vector<E>(m, d.zero()));
  for (std::size_t j = 0; j <= p.n_vars(); ++j) {
    const ConstMatrix& c = p.coefficient(j);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t q = 0; q < m; ++q) {
        if (c(r, q).is_zero()) continue;
        E v = d.embed(c(r, q));
        if (j > 0) v = d.mul(v, point[j - 1]);
        a[r][q] = d.add(a[r][q], v);
      }
    }
  }
  // aug = [A22 | A21], s x (s + k)
  std::vector<std::vector<E>> aug(s, std::vector<E>(s + k, d.zero()));
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t q = 0; q < s; ++q) aug[r][q] = a[k + r][k + q];
    for (std::size_t q = 0; q < k; ++q) aug[r][s + q] = a[k + r][q];
  }
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t piv = col;
    while (piv < s && d.is_zero(aug[piv][col])) ++piv;
    if (piv == s) return std::nullopt;
    std::swap(aug[piv], aug[col]);
    const E inv = d.inv(aug[col][col]);
    for (auto& v : aug[col]) {
      if (!d.is_zero(v)) v = d.mul(v, inv);
    }
    for (std::size_t r = 0; r < s; ++r) {
      if (r == col || d.is_zero(aug[r][col])) continue;
      const E factor = aug[r][col];
      for (std::size_t q = col; q < s + k; ++q) {
        if (!d.is_zero(aug[col][q])) aug[r][q] = d.sub(aug[r][q], d.mul(factor, aug[col][q]));
      }
    }
  }
  std::vector<std::vector<E>> out(k, std::vector<E>(k, d.zero()));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t q = 0; q < k; ++q) {
      E v = a[r][q];
      for (std::size_t t = 0; t < s; ++t) {
        if (!d.is_zero(a[r][k + t]) && !d.is_zero(aug[t][s + q])) {
          v = d.sub(v, d.mul(a[r][k + t], aug[t][s + q]));
        }
      }
      out[r][q] = v;
    }
  }
  return out;
}

struct EvaluationOutcome {
  int agreed = 0;  // points at which both sides were defined and equal
  bool mismatch = false;
};

template <class D>
EvaluationOutcome compare_at_points(const D& d, const LinearPencil& p, const RationalMatrix& f,
                                    std::mt19937_64& rng, int points) {
  EvaluationOutcome out;
  for (int attempt = 0; attempt < 4 * points && out.agreed < points; ++attempt) {
    std::vector<typename D::Elem> pt;
    for (std::size_t i = 0; i < p.n_vars(); ++i) pt.push_back(d.random(rng));
    auto s = eval_schur(d, p, pt);
    if (!s) continue;
    bool defined = true, equal = true;
    for (std::size_t r = 0; r < f.rows() && defined; ++r) {
      for (std::size_t q = 0; q < f.cols() && defined; ++q) {
        auto v = eval_rational(d, f(r, q), pt);
        if (!v) {
          defined = false;
        } else if (!d.is_zero(d.sub(*v, (*s)[r][q]))) {
          equal = false;
        }
      }
    }
    if (!defined) continue;
    if (!equal) {
      out.mismatch = true;
      return out;
    }
    ++out.agreed;
  }
  return out;
}

// Schur complement of p against F at random points of Q or of an extension of GF(p).
inline EvaluationOutcome schur_by_evaluation(const LinearPencil& p, const RationalMatrix& f,
                                             std::uint64_t seed, int points = 2) {
  std::mt19937_64 rng(seed);
  if (p.field().is_rationals()) return compare_at_points(RationalDomain{}, p, f, rng, points);
  ExtensionField ext(p.field().modulus(), rng);
  return compare_at_points(ExtensionDomain{&ext}, p, f, rng, points);
}

// Laplace expansion along the first row.
inline Polynomial cofactor_det(const PolyMatrix& a) {
  const std::size_t m = a.rows();
  const Field& field = a(0, 0).field();
  const std::size_t n = a(0, 0).n_vars();
  if (m == 1) return a(0, 0);
  Polynomial total(field, n);
  for (std::size_t j = 0; j < m; ++j) {
    if (a(0, j).is_zero()) continue;
    PolyMatrix minor = poly_zero(field, n, m - 1, m - 1);
    for (std::size_t r = 1; r < m; ++r) {
      for (std::size_t c = 0, cc = 0; c < m; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    Polynomial term = a(0, j) * cofactor_det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

inline FieldElement cofactor_det(const ConstMatrix& a) {
  const std::size_t m = a.rows();
  if (m == 0) return FieldElement{};
  const Field field = a(0, 0).field();
  if (m == 1) return a(0, 0);
  FieldElement total = FieldElement::zero(field);
  for (std::size_t j = 0; j < m; ++j) {
    if (a(0, j).is_zero()) continue;
    ConstMatrix minor = const_zero(field, m - 1, m - 1);
    for (std::size_t r = 1; r < m; ++r) {
      for (std::size_t c = 0, cc = 0; c < m; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    FieldElement term = a(0, j) * cofactor_det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

// GF(2) only: does h = g0 + z1 g1 + ... + zn gn hold for some g_i supported on
// exponent vectors with all entries even? Every candidate with monomials of
// degree <= bound (bound - 1 for i >= 1) is enumerated.
inline bool char2_decomposition_exists(const Polynomial& h, unsigned bound) {
  const Field& field = h.field();
  const std::size_t n = h.n_vars();
  std::vector<Polynomial> generators;  // z_i^[i>0] * (even monomial)
  std::vector<Monomial> even;
  // even monomials of degree <= bound
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      Monomial m;
      for (std::size_t v = 0; v < n; ++v) m.set_exponent(v, e[v]);
      even.push_back(m);
      return;
    }
    for (unsigned x = 0; x <= left; x += 2) {
      e[i] = x;
      rec(i + 1, left - x);
    }
    e[i] = 0;
  };
  rec(0, bound);
  for (const Monomial& m : even) {
    generators.push_back(Polynomial::monomial(field, n, m, FieldElement::one(field)));
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (const Monomial& m : even) {
      if (m.degree() + 1 > bound) continue;
      generators.push_back(
          Polynomial::monomial(field, n, m * Monomial::variable(v), FieldElement::one(field)));
    }
  }
  const std::size_t g = generators.size();
  for (std::uint64_t mask = 0; mask < (1ULL << g); ++mask) {
    Polynomial sum(field, n);
    for (std::size_t b = 0; b < g; ++b) {
      if (mask >> b & 1U) sum += generators[b];
    }
    if (sum == h) return true;
  }
  return false;
}

}  // namespace bess::testing
