#include <istream>
#include <sstream>

#include <json.hpp>

#include "tdd/json_io.hpp"

namespace tdd {

namespace {

using nlohmann::json;

DensityMatrix from_json(const json& j, const StateTolerances& tol) {
  if (!j.is_object() || !j.contains("matrix")) {
    throw ParseError("state JSON must be an object with a \"matrix\" field");
  }
  const json& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != 4) {
    throw ParseError("\"matrix\" must be an array of 4 rows");
  }
  ComplexMatrix4 m;
  for (size_t i = 0; i < 4; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != 4) {
      throw ParseError("matrix[" + std::to_string(i) +
                       "] must be an array of 4 entries");
    }
    for (size_t k = 0; k < 4; ++k) {
      const json& entry = row[k];
      const std::string where =
          "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (!entry.is_array() || entry.size() != 2) {
        throw ParseError(where + " must be a [re, im] pair");
      }
      if (!entry[0].is_number() || !entry[1].is_number()) {
        throw ParseError(where + " entries must be numbers");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return validate(m, tol);
}

}  // namespace

std::string write_state_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int k = 0; k < 4; ++k) {
      const Complex v = rho.matrix()(i, k);
      row.push_back(json::array({v.real(), v.imag()}));
    }
    rows.push_back(std::move(row));
  }
  json j;
  j["matrix"] = std::move(rows);
  return j.dump(2) + "\n";
}

DensityMatrix read_state_json(std::istream& in, const StateTolerances& tol) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j, tol);
}

DensityMatrix read_state_json_text(const std::string& text,
                                   const StateTolerances& tol) {
  std::istringstream in(text);
  return read_state_json(in, tol);
}

}  // namespace tdd
