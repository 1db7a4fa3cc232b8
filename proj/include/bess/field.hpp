// Exact base fields: the rationals and prime fields GF(p).
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace bess {

bool is_prime(std::uint64_t n);

class Field {
 public:
  enum class Kind : std::uint8_t { rationals, prime_field };

  // Largest accepted modulus; keeps residue products inside 128 bits.
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 62);

  Field() noexcept = default;  // the rationals
  static Field rationals() noexcept { return Field(); }
  static Field prime(std::uint64_t p);
  // Accepts "q", "gf:<p>" and "gf2".
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::rationals; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::rationals;
  std::uint64_t modulus_ = 0;
};

void require_same_field(const Field& a, const Field& b);

class FieldElement {
 public:
  FieldElement() : value_(mpq_class(0)) {}
  FieldElement(const Field& field, long long value);
  FieldElement(const Field& field, const mpz_class& value);
  // Over GF(p) the denominator must be a unit; throws DivisionByZero otherwise.
  FieldElement(const Field& field, const mpq_class& value);

  static FieldElement zero(const Field& field) { return FieldElement(field, 0LL); }
  static FieldElement one(const Field& field) { return FieldElement(field, 1LL); }
  // Integer or "a/b" literal.
  static FieldElement parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace bess
