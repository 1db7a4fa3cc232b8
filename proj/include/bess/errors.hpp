// Exception types shared by all modules.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bess {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BESS_DEFINE_ERROR(Name)        \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

BESS_DEFINE_ERROR(InvalidField);
BESS_DEFINE_ERROR(DescriptorMismatch);
BESS_DEFINE_ERROR(DivisionByZero);
BESS_DEFINE_ERROR(DimensionMismatch);
BESS_DEFINE_ERROR(SingularMatrix);
BESS_DEFINE_ERROR(SingularBlock);
BESS_DEFINE_ERROR(ZeroScalar);
BESS_DEFINE_ERROR(BlockSizeMismatch);
BESS_DEFINE_ERROR(SingularX);
BESS_DEFINE_ERROR(SingularSchurComplement);
BESS_DEFINE_ERROR(NotHomogeneousDegreeOne);
BESS_DEFINE_ERROR(WrongCharacteristic);
BESS_DEFINE_ERROR(TooFewVariables);
BESS_DEFINE_ERROR(NotSymmetric);
BESS_DEFINE_ERROR(NotInvertible);
BESS_DEFINE_ERROR(NotInvertibleDiagonal);
BESS_DEFINE_ERROR(NotCleaned);
BESS_DEFINE_ERROR(BadIndices);
BESS_DEFINE_ERROR(NotLinearEntries);
BESS_DEFINE_ERROR(NotARealizer);
BESS_DEFINE_ERROR(DivisionByZeroPolynomial);
BESS_DEFINE_ERROR(FieldLiteralError);
BESS_DEFINE_ERROR(FormatError);

#undef BESS_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bess
