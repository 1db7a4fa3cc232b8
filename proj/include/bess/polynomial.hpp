// Sparse multivariate polynomials over a Field.
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bess/field.hpp"

namespace bess {

inline constexpr std::size_t kMaxVariables = 16;

// Total or partial degree; the zero polynomial has degree minus infinity.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  explicit Degree(unsigned value) : value_(value) {}

  bool is_minus_infinity() const noexcept { return !value_.has_value(); }
  unsigned value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }

 private:
  Degree() = default;
  std::optional<unsigned> value_;
};

class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t i) const { return exponents_[i]; }
  void set_exponent(std::size_t i, unsigned e);
  unsigned degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Exact quotient; requires divides(other) on the divisor side.
  Monomial operator/(const Monomial& divisor) const;
  // Componentwise minimum.
  Monomial gcd(const Monomial& other) const;

  // Graded lexicographic order, z1 compared first on ties of total degree.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exponents_ == b.exponents_;
  }

  std::string to_string() const;  // "z1^2*z3", "1" for the unit

 private:
  std::array<std::uint16_t, kMaxVariables> exponents_{};
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  FieldElement coefficient;
};

class Polynomial {
 public:
  Polynomial() = default;  // zero over Q in zero variables
  Polynomial(const Field& field, std::size_t n_vars);

  static Polynomial constant(const Field& field, std::size_t n_vars, const FieldElement& c);
  static Polynomial constant(const Field& field, std::size_t n_vars, long long c) {
    return constant(field, n_vars, FieldElement(field, c));
  }
  static Polynomial variable(const Field& field, std::size_t n_vars, std::size_t index);
  static Polynomial monomial(const Field& field, std::size_t n_vars, const Monomial& m,
                             const FieldElement& c);
  // Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(const Field& field, std::size_t n_vars, std::vector<Term> terms);

  const Field& field() const noexcept { return field_; }
  std::size_t n_vars() const noexcept { return n_vars_; }
  // Terms in decreasing graded-lex order.
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || terms_[0].monomial.is_one(); }
  FieldElement constant_value() const;  // requires is_constant()
  const Term& leading_term() const { return terms_.front(); }
  FieldElement coefficient(const Monomial& m) const;

  Degree total_degree() const;
  Degree degree_in(std::size_t var) const;
  std::vector<Degree> variable_degrees() const;
  Degree min_total_degree() const;
  bool is_homogeneous() const;  // zero counts as homogeneous
  std::map<unsigned, Polynomial> homogeneous_components() const;
  // Common monomial factor of all terms.
  Monomial monomial_content() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const FieldElement& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const FieldElement& c) { return a *= c; }
  friend Polynomial operator*(const FieldElement& c, Polynomial a) { return a *= c; }
  Polynomial pow(unsigned exponent) const;
  Polynomial multiply_monomial(const Monomial& m) const;
  Polynomial divide_monomial(const Monomial& m) const;  // requires divisibility of every term

  // Exact quotient when divisor divides *this, otherwise nullopt.
  std::optional<Polynomial> try_divide(const Polynomial& divisor) const;
  // Throws std::logic_error if the quotient is not exact.
  Polynomial divide_exact(const Polynomial& divisor) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;
  // Substitutes a constant for one variable; with drop the variable is removed
  // and later variables shift down by one.
  Polynomial substitute(std::size_t var, const FieldElement& value, bool drop) const;
  // Changes the ambient variable count; shrinking requires the dropped
  // variables to be absent.
  Polynomial with_n_vars(std::size_t n_vars) const;
  // Homogenizes to the given degree with a new last variable.
  Polynomial homogenize(unsigned degree) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;

  Field field_;
  std::size_t n_vars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace bess
