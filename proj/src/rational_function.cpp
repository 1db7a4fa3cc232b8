#include "bess/rational_function.hpp"

#include "bess/errors.hpp"

namespace bess {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.field(), num_.n_vars(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_field(num_.field(), den_.field());
  if (num_.n_vars() != den_.n_vars()) throw DescriptorMismatch("variable count mismatch");
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::zero(const Field& field, std::size_t n_vars) {
  return RationalFunction(Polynomial(field, n_vars));
}

RationalFunction RationalFunction::one(const Field& field, std::size_t n_vars) {
  return RationalFunction(Polynomial::constant(field, n_vars, 1));
}

RationalFunction RationalFunction::constant(const Field& field, std::size_t n_vars,
                                            const FieldElement& c) {
  return RationalFunction(Polynomial::constant(field, n_vars, c));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(num_.field(), num_.n_vars(), 1);
    return;
  }
  const Monomial common = num_.monomial_content().gcd(den_.monomial_content());
  if (!common.is_one()) {
    num_ = num_.divide_monomial(common);
    den_ = den_.divide_monomial(common);
  }
  if (!den_.is_constant()) {
    if (auto q = num_.try_divide(den_)) {
      num_ = std::move(*q);
      den_ = Polynomial::constant(num_.field(), num_.n_vars(), 1);
      return;
    }
    if (num_.term_count() <= den_.term_count()) {
      if (auto q = den_.try_divide(num_)) {
        den_ = std::move(*q);
        num_ = Polynomial::constant(num_.field(), num_.n_vars(), 1);
      }
    }
  }
  const FieldElement lead = den_.leading_term().coefficient;
  if (!lead.is_one()) {
    const FieldElement inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = other;
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  return *this *= other.inverse();
}

RationalFunction RationalFunction::operator*(const FieldElement& c) const {
  RationalFunction out = *this;
  out.num_ *= c;
  if (out.num_.is_zero()) out.normalize();
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

std::optional<std::pair<Polynomial, Polynomial>> RationalFunction::homogeneous_representative(
    int d) const {
  if (num_.is_zero()) return std::make_pair(num_, den_);
  if (num_.is_homogeneous() && den_.is_homogeneous()) {
    const int dn = static_cast<int>(num_.total_degree().value());
    const int dd = static_cast<int>(den_.total_degree().value());
    if (dn - dd == d) return std::make_pair(num_, den_);
    return std::nullopt;
  }
  // f is homogeneous of degree d iff p_t * q = p * q_{t-d} for the top component p_t.
  const auto p_parts = num_.homogeneous_components();
  const auto q_parts = den_.homogeneous_components();
  const auto& [t, p_top] = *p_parts.rbegin();
  const int e = static_cast<int>(t) - d;
  if (e < 0) return std::nullopt;
  auto it = q_parts.find(static_cast<unsigned>(e));
  if (it == q_parts.end()) return std::nullopt;
  if (!(p_top * den_ == num_ * it->second)) return std::nullopt;
  return std::make_pair(p_top, it->second);
}

bool RationalFunction::is_homogeneous(int d) const {
  return homogeneous_representative(d).has_value();
}

std::optional<FieldElement> RationalFunction::evaluate(std::span<const FieldElement> point) const {
  const FieldElement q = den_.evaluate(point);
  if (q.is_zero()) return std::nullopt;
  return num_.evaluate(point) / q;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) {
    // Normalization leaves a unit denominator for polynomials.
    return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (!(a.field() == b.field()) || a.n_vars() != b.n_vars()) return false;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction dehomogenize_last(const RationalFunction& f) {
  if (f.n_vars() == 0) throw DimensionMismatch("no variable to dehomogenize");
  Polynomial p = f.num();
  Polynomial q = f.den();
  // The only candidate degree is deg p - deg q (compare top components).
  if (!p.is_zero()) {
    const int d = static_cast<int>(p.total_degree().value()) -
                  static_cast<int>(q.total_degree().value());
    if (auto rep = f.homogeneous_representative(d)) {
      p = rep->first;
      q = rep->second;
    }
  }
  const std::size_t last = f.n_vars() - 1;
  const FieldElement one = FieldElement::one(f.field());
  Polynomial qd = q.substitute(last, one, true);
  if (qd.is_zero()) throw DivisionByZero("denominator vanishes at z_n = 1");
  return RationalFunction(p.substitute(last, one, true), std::move(qd));
}

RationalFunction homogenize_new_variable(const RationalFunction& g) {
  const std::size_t n = g.n_vars() + 1;
  if (g.is_zero()) return RationalFunction::zero(g.field(), n);
  const unsigned dp = g.num().total_degree().value();
  const unsigned dq = g.den().total_degree().value();
  Polynomial p = g.num().homogenize(dp);
  Polynomial q = g.den().homogenize(dq);
  const int e = 1 + static_cast<int>(dq) - static_cast<int>(dp);
  const Monomial zn = Monomial::variable(n - 1, static_cast<unsigned>(e >= 0 ? e : -e));
  if (e >= 0) {
    p = p.multiply_monomial(zn);
  } else {
    q = q.multiply_monomial(zn);
  }
  return RationalFunction(std::move(p), std::move(q));
}

}  // namespace bess
