#include "bess/pencil_io.hpp"

namespace bess {

using nlohmann::json;

json pencil_to_json(const LinearPencil& p) {
  json coeffs = json::array();
  for (const ConstMatrix& a : p.matrix().coefficients()) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
      rows.push_back(std::move(row));
    }
    coeffs.push_back(std::move(rows));
  }
  json out = json::object();
  out["field"] = p.field().to_string();
  out["n_vars"] = p.n_vars();
  out["m"] = p.size();
  out["split"] = p.split();
  out["coeffs"] = std::move(coeffs);
  return out;
}

LinearPencil pencil_from_json(const json& j) {
  try {
    if (!j.is_object()) throw FormatError("pencil must be a JSON object");
    for (const char* key : {"field", "n_vars", "m", "split", "coeffs"}) {
      if (!j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
    }
    const Field field = Field::parse(j.at("field").get<std::string>());
    const auto n = j.at("n_vars").get<std::size_t>();
    const auto m = j.at("m").get<std::size_t>();
    const auto k = j.at("split").get<std::size_t>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != n + 1) {
      throw FormatError("'coeffs' must hold n_vars + 1 matrices");
    }
    std::vector<ConstMatrix> mats;
    for (const json& a : coeffs) {
      if (!a.is_array() || a.size() != m) throw FormatError("coefficient must have m rows");
      ConstMatrix c = const_zero(field, m, m);
      for (std::size_t r = 0; r < m; ++r) {
        if (!a[r].is_array() || a[r].size() != m) throw FormatError("coefficient must have m columns");
        for (std::size_t s = 0; s < m; ++s) {
          if (!a[r][s].is_string()) throw FormatError("entries must be strings");
          c(r, s) = FieldElement::parse(field, a[r][s].get<std::string>());
        }
      }
      mats.push_back(std::move(c));
    }
    return LinearPencil(LinearMatrix(field, n, std::move(mats)), k);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed pencil: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw FormatError(std::string("malformed pencil: ") + e.what());
  } catch (const InvalidField& e) {
    throw FormatError(std::string("malformed pencil: ") + e.what());
  } catch (const DivisionByZero& e) {
    throw FormatError(std::string("malformed pencil: ") + e.what());
  }
}

std::string serialize_pencil(const LinearPencil& p) { return pencil_to_json(p).dump(2) + "\n"; }

LinearPencil parse_pencil(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return pencil_from_json(j);
}

json report_to_json(const VerificationReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back(
        {{"row", m.row + 1}, {"col", m.col + 1}, {"expected", m.expected}, {"got", m.got}});
  }
  json out = json::object();
  out["schur_ok"] = r.schur_ok;
  out["structure_ok"] = r.structure_ok;
  out["det_ok"] = r.det_ok;
  out["mismatches"] = std::move(mismatches);
  return out;
}

}  // namespace bess
