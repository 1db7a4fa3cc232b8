// Constructive realizations and the characteristic-2 parity decision.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bess/errors.hpp"
#include "bess/pencil.hpp"

namespace bess {

struct RealizationResult {
  LinearPencil pencil;
  RealizationKind kind;
  RationalMatrix target;
};

// One class of the parity split h = sum_beta z^beta g_beta, beta in {0,1}^n.
struct ParityClass {
  Monomial parity;  // beta
  Polynomial g;     // sum of c_alpha z^(alpha - beta); every exponent even
};

// Verdict for a scalar f = p/q over characteristic 2 with n >= 2 variables:
// f has a symmetric realization iff every nonzero parity class of h = p q has
// weight |beta| <= 1.
struct Char2Certificate {
  bool realizable = false;
  Polynomial h;
  std::vector<ParityClass> classes;  // nonzero classes, decreasing parity order
  std::optional<Monomial> offending;  // leading monomial of h with |beta| >= 2
  std::string to_string() const;
};

class NotRealizableChar2 : public Error {
 public:
  NotRealizableChar2(std::size_t index, Char2Certificate certificate);
  std::size_t index() const noexcept { return index_; }  // diagonal entry, 0-based
  const Char2Certificate& certificate() const noexcept { return certificate_; }

 private:
  std::size_t index_;
  Char2Certificate certificate_;
};

struct DiagonalObstruction {
  std::size_t index;  // 0-based diagonal entry
  Char2Certificate certificate;
};

RealizationResult realize_br(const RationalMatrix& f);
// Requires every entry to be homogeneous of degree one and n >= 1.
RealizationResult realize_hbr(const RationalMatrix& f);
// Requires F symmetric; in characteristic 2 with n >= 2 every diagonal entry
// must pass the parity test, otherwise NotRealizableChar2 is thrown.
RealizationResult realize_sbr(const RationalMatrix& f);
std::variant<RealizationResult, DiagonalObstruction> decide_and_realize_hsbr(const RationalMatrix& f);

Char2Certificate decide_sbr_scalar_char2(const RationalFunction& f);

// Existence verdict without constructing a pencil.
struct RealizabilityVerdict {
  bool realizable = false;
  std::string reason;
  std::vector<std::pair<std::size_t, Char2Certificate>> certificates;  // per checked diagonal
  std::string to_string() const;
};
RealizabilityVerdict decide_sbr(const RationalMatrix& f);
RealizabilityVerdict decide_hsbr(const RationalMatrix& f);

}  // namespace bess
