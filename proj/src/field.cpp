#include "bess/field.hpp"

#include <charconv>

#include "bess/errors.hpp"

namespace bess {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return mpz_get_ui(r.get_mpz_t());
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p) + ")");
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxModulus) throw InvalidField("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw InvalidField("modulus is not prime: " + std::to_string(p));
  return Field(Kind::prime_field, p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "gf2") return prime(2);
  if (text.substr(0, 3) == "gf:") {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime(p);
    }
  }
  throw InvalidField("unrecognised field descriptor '" + std::string(text) + "'");
}

std::string Field::to_string() const {
  if (is_rationals()) return "q";
  return "gf:" + std::to_string(modulus_);
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw DescriptorMismatch("field mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

FieldElement::FieldElement(const Field& field, long long value) : field_(field) {
  if (field.is_rationals()) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    const std::uint64_t p = field.modulus();
    std::uint64_t r = value >= 0 ? static_cast<std::uint64_t>(value) % p
                                 : (p - (static_cast<std::uint64_t>(-(value + 1)) + 1) % p) % p;
    value_ = r;
  }
}

FieldElement::FieldElement(const Field& field, const mpz_class& value) : field_(field) {
  if (field.is_rationals()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(value, field.modulus());
  }
}

FieldElement::FieldElement(const Field& field, const mpq_class& value) : field_(field) {
  if (field.is_rationals()) {
    if (value.get_den() == 0) throw DivisionByZero("zero denominator");
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const std::uint64_t p = field.modulus();
    const std::uint64_t den = reduce(value.get_den(), p);
    if (den == 0) throw DivisionByZero("denominator vanishes in GF(" + std::to_string(p) + ")");
    value_ = mul_mod(reduce(value.get_num(), p), inverse_mod(den, p), p);
  }
}

FieldElement FieldElement::parse(const Field& field, std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw FormatError("invalid field literal '" + s + "'");
  }
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in literal '" + s + "'");
  q.canonicalize();
  return FieldElement(field, q);
}

bool FieldElement::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    if (*r != 0) *r = field_.modulus() - *r;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_field(field_, other.field_);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t b = std::get<std::uint64_t>(other.value_);
    *r = (*r >= p - b) ? *r - (p - b) : *r + b;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) { return *this += -other; }

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  require_same_field(field_, other.field_);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = mul_mod(*r, std::get<std::uint64_t>(other.value_), field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  return *this *= other.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero field element");
  FieldElement out = *this;
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    *r = inverse_mod(*r, field_.modulus());
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = one(field_);
  FieldElement base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace bess
