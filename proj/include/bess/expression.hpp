// Text syntax for rational functions and matrices of them.
//
//   input   := matrix | expr
//   matrix  := '[' row (',' row)* ']'
//   row     := '[' expr (',' expr)* ']'
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | 'z' INDEX | '(' expr ')'
#pragma once

#include <cstddef>
#include <string_view>

#include "bess/rational_matrix.hpp"

namespace bess {

// Variables z1..zN; the variable count is the largest index used, raised to
// min_vars when that is larger. Integer literals are mapped into the field.
// Throws ParseError, DivisionByZeroPolynomial or FieldLiteralError.
RationalMatrix parse_rational_matrix(std::string_view text, const Field& field,
                                     std::size_t min_vars = 0);

// Largest variable index appearing in the text (0 if none).
std::size_t max_variable_index(std::string_view text);

}  // namespace bess
