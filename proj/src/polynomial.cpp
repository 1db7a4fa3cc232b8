#include "bess/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bess/errors.hpp"

namespace bess {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<std::uint16_t>::max();

bool descending(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Merges two descending term lists, b scaled by sign; drops cancellations.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto cmp = a[i].monomial <=> b[j].monomial;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      FieldElement c = a[i].coefficient;
      if (subtract) c -= b[j].coefficient; else c += b[j].coefficient;
      if (!c.is_zero()) out.push_back(Term{a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

void append_variable_power(std::string& out, std::size_t index, unsigned e) {
  out += 'z';
  out += std::to_string(index + 1);
  if (e > 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set_exponent(index, power);
  return m;
}

void Monomial::set_exponent(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw std::out_of_range("variable index exceeds supported count");
  if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
  degree_ = degree_ - exponents_[i] + e;
  exponents_[i] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = unsigned{exponents_[i]} + other.exponents_[i];
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
    out.exponents_[i] = static_cast<std::uint16_t>(e);
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (divisor.exponents_[i] > exponents_[i]) throw std::logic_error("monomial not divisible");
    out.exponents_[i] = static_cast<std::uint16_t>(exponents_[i] - divisor.exponents_[i]);
  }
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    out.exponents_[i] = std::min(exponents_[i], other.exponents_[i]);
    out.degree_ += out.exponents_[i];
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.exponents_[i] != b.exponents_[i]) return a.exponents_[i] <=> b.exponents_[i];
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    append_variable_power(out, i, exponents_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Field& field, std::size_t n_vars) : field_(field), n_vars_(n_vars) {
  if (n_vars > kMaxVariables) throw std::out_of_range("too many variables");
}

Polynomial Polynomial::constant(const Field& field, std::size_t n_vars, const FieldElement& c) {
  require_same_field(field, c.field());
  Polynomial p(field, n_vars);
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial(), c});
  return p;
}

Polynomial Polynomial::variable(const Field& field, std::size_t n_vars, std::size_t index) {
  if (index >= n_vars) throw std::out_of_range("variable index out of range");
  return monomial(field, n_vars, Monomial::variable(index), FieldElement::one(field));
}

Polynomial Polynomial::monomial(const Field& field, std::size_t n_vars, const Monomial& m,
                                const FieldElement& c) {
  require_same_field(field, c.field());
  Polynomial p(field, n_vars);
  if (!c.is_zero()) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(const Field& field, std::size_t n_vars, std::vector<Term> terms) {
  Polynomial p(field, n_vars);
  std::sort(terms.begin(), terms.end(), descending);
  for (auto& t : terms) {
    require_same_field(field, t.coefficient.field());
    for (std::size_t i = n_vars; i < kMaxVariables; ++i) {
      if (t.monomial.exponent(i) != 0) throw std::out_of_range("monomial uses undeclared variable");
    }
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient.is_zero()) p.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  require_same_field(field_, other.field_);
  if (n_vars_ != other.n_vars_) {
    throw DescriptorMismatch("variable count mismatch: " + std::to_string(n_vars_) + " vs " +
                             std::to_string(other.n_vars_));
  }
}

FieldElement Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? FieldElement::zero(field_) : terms_[0].coefficient;
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return FieldElement::zero(field_);
}

Degree Polynomial::total_degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree(terms_.front().monomial.degree());
}

Degree Polynomial::min_total_degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree(terms_.back().monomial.degree());
}

Degree Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return Degree::minus_infinity();
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
  return Degree(d);
}

std::vector<Degree> Polynomial::variable_degrees() const {
  std::vector<Degree> out;
  for (std::size_t i = 0; i < n_vars_; ++i) out.push_back(degree_in(i));
  return out;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

std::map<unsigned, Polynomial> Polynomial::homogeneous_components() const {
  std::map<unsigned, Polynomial> out;
  for (const auto& t : terms_) {
    auto [it, inserted] = out.try_emplace(t.monomial.degree(), field_, n_vars_);
    it->second.terms_.push_back(t);  // order within a degree is preserved
  }
  return out;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().monomial;
  for (const auto& t : terms_) {
    g = g.gcd(t.monomial);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& c) {
  require_same_field(field_, c.field());
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.terms_.empty() || b.terms_.empty()) return Polynomial(a.field_, a.n_vars_);
  const Polynomial& small = a.terms_.size() <= b.terms_.size() ? a : b;
  const Polynomial& large = &small == &a ? b : a;
  if (small.terms_.size() == 1) {
    Polynomial out = large.multiply_monomial(small.terms_[0].monomial);
    return out *= small.terms_[0].coefficient;
  }
  std::vector<Term> products;
  products.reserve(small.terms_.size() * large.terms_.size());
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) {
      products.push_back(Term{s.monomial * l.monomial, s.coefficient * l.coefficient});
    }
  }
  std::sort(products.begin(), products.end(), descending);
  Polynomial out(a.field_, a.n_vars_);
  for (auto& t : products) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coefficient += t.coefficient;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(field_, n_vars_, 1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m) const {
  Polynomial out = *this;
  if (m.is_one()) return out;
  for (auto& t : out.terms_) t.monomial = t.monomial * m;
  return out;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  Polynomial out = *this;
  if (m.is_one()) return out;
  for (auto& t : out.terms_) t.monomial = t.monomial / m;
  return out;
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (terms_.empty()) return *this;
  const Term& lead = divisor.terms_.front();
  const FieldElement lead_inv = lead.coefficient.inverse();
  if (divisor.terms_.size() == 1) {
    if (!lead.monomial.is_one()) {
      for (const auto& t : terms_) {
        if (!lead.monomial.divides(t.monomial)) return std::nullopt;
      }
    }
    Polynomial out = divide_monomial(lead.monomial);
    return out *= lead_inv;
  }
  // Cheap rejections: degree ranges must fit.
  if (total_degree() < divisor.total_degree()) return std::nullopt;
  if (min_total_degree().value() < divisor.min_total_degree().value()) return std::nullopt;
  if (terms_.size() < 2) return std::nullopt;

  std::vector<Term> remainder = terms_;
  std::vector<Term> quotient;
  std::vector<Term> scaled;
  while (!remainder.empty()) {
    const Term& r = remainder.front();
    if (!lead.monomial.divides(r.monomial)) return std::nullopt;
    Term q{r.monomial / lead.monomial, r.coefficient * lead_inv};
    scaled.clear();
    scaled.reserve(divisor.terms_.size());
    for (const auto& d : divisor.terms_) {
      scaled.push_back(Term{d.monomial * q.monomial, d.coefficient * q.coefficient});
    }
    remainder = merge_terms(remainder, scaled, true);
    quotient.push_back(std::move(q));
  }
  Polynomial out(field_, n_vars_);
  out.terms_ = std::move(quotient);
  return out;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw std::logic_error("inexact polynomial division");
  return std::move(*q);
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != n_vars_) throw DimensionMismatch("evaluation point has wrong length");
  FieldElement sum = FieldElement::zero(field_);
  for (const auto& t : terms_) {
    FieldElement v = t.coefficient;
    for (std::size_t i = 0; i < n_vars_; ++i) {
      if (t.monomial.exponent(i) != 0) v *= point[i].pow(t.monomial.exponent(i));
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::size_t var, const FieldElement& value, bool drop) const {
  if (var >= n_vars_) throw std::out_of_range("variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0, k = 0; i < n_vars_; ++i) {
      if (i == var) {
        if (!drop) ++k;
        continue;
      }
      m.set_exponent(k++, t.monomial.exponent(i));
    }
    out.push_back(Term{m, t.coefficient * value.pow(t.monomial.exponent(var))});
  }
  return from_terms(field_, drop ? n_vars_ - 1 : n_vars_, std::move(out));
}

Polynomial Polynomial::with_n_vars(std::size_t n_vars) const {
  Polynomial out = *this;
  if (n_vars > kMaxVariables) throw std::out_of_range("too many variables");
  for (const auto& t : terms_) {
    for (std::size_t i = n_vars; i < n_vars_; ++i) {
      if (t.monomial.exponent(i) != 0) throw DimensionMismatch("cannot drop a used variable");
    }
  }
  out.n_vars_ = n_vars;
  return out;
}

Polynomial Polynomial::homogenize(unsigned degree) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.monomial.degree() > degree) throw std::logic_error("homogenization degree too small");
    Monomial m = t.monomial;
    m.set_exponent(n_vars_, degree - t.monomial.degree());
    out.push_back(Term{m, t.coefficient});
  }
  return from_terms(field_, n_vars_ + 1, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
    const Term& t = terms_[idx];
    FieldElement c = t.coefficient;
    bool negative = c.field().is_rationals() && sgn(c.rational()) < 0;
    if (negative) c = -c;
    if (idx == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c.to_string();
    } else {
      if (!c.is_one()) {
        out += c.to_string();
        out += '*';
      }
      out += t.monomial.to_string();
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_) || a.n_vars_ != b.n_vars_ || a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        !(a.terms_[i].coefficient == b.terms_[i].coefficient)) {
      return false;
    }
  }
  return true;
}

}  // namespace bess
