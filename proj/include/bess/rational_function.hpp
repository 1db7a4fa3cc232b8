// Rational functions as unreduced numerator/denominator pairs.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "bess/polynomial.hpp"

namespace bess {

class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);  // throws DivisionByZero if den = 0

  static RationalFunction zero(const Field& field, std::size_t n_vars);
  static RationalFunction one(const Field& field, std::size_t n_vars);
  static RationalFunction constant(const Field& field, std::size_t n_vars, const FieldElement& c);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  const Field& field() const noexcept { return num_.field(); }
  std::size_t n_vars() const noexcept { return num_.n_vars(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator*(const FieldElement& c) const;
  RationalFunction inverse() const;  // throws DivisionByZero on zero

  // Degree-d homogeneity of the function, independent of the chosen representative.
  bool is_homogeneous(int d) const;
  // A representative (p, q) with p and q homogeneous, when f is homogeneous of degree d.
  std::optional<std::pair<Polynomial, Polynomial>> homogeneous_representative(int d) const;

  // nullopt when the denominator vanishes at the point.
  std::optional<FieldElement> evaluate(std::span<const FieldElement> point) const;

  std::string to_string() const;

  // Cross-multiplication equality.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_ = Polynomial::constant(Field(), 0, 1);
};

// Substitutes z_n = 1 and drops the last variable.
RationalFunction dehomogenize_last(const RationalFunction& f);
// G in n-1 variables to z_n * G(z_1/z_n, ..., z_{n-1}/z_n) in n variables.
RationalFunction homogenize_new_variable(const RationalFunction& g);

}  // namespace bess
