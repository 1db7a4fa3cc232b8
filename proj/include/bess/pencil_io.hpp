// JSON form of pencils and verification reports.
//
//   { "field": "q" | "gf:<p>", "n_vars": n, "m": m, "split": k,
//     "coeffs": [A0, A1, ..., An] }   each Aj an m x m array of strings such as "-3/4"
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "bess/pencil.hpp"
#include "bess/verify.hpp"

namespace bess {

nlohmann::json pencil_to_json(const LinearPencil& p);
// Throws FormatError on schema violations.
LinearPencil pencil_from_json(const nlohmann::json& j);

std::string serialize_pencil(const LinearPencil& p);  // two-space indented, trailing newline
LinearPencil parse_pencil(std::string_view text);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace bess
