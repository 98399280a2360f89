#pragma once

// JSON encodings of the library's value types. Rationals and big integers are
// strings so that no precision is lost.

#include "json.hpp"  // vendored nlohmann/json

#include <string>
#include <vector>

#include "abelmod/flatf2.hpp"
#include "abelmod/hilbmatrix.hpp"
#include "abelmod/hodge_poly.hpp"
#include "abelmod/torsion.hpp"

namespace abelmod {

using Json = nlohmann::ordered_json;

inline Json to_json(const IntVector& v) {
  Json j = Json::array();
  for (auto x : v) j.push_back(x);
  return j;
}

inline Json to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    j.push_back(row);
  }
  return j;
}

inline Json to_json(const RationalMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    j.push_back(row);
  }
  return j;
}

inline IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InvalidInput("integer matrix must be a nonempty array of rows");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw InvalidInput("integer matrix rows differ in length");
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (!j[i][k].is_number_integer()) throw InvalidInput("integer matrix entry is not an integer: " + j[i][k].dump());
      m(i, k) = j[i][k].get<int64_t>();
    }
  }
  return m;
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("expected an integer or a rational string, got " + j.dump());
}

inline RationalMatrix rational_matrix_from_json(const Json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) throw InvalidInput("matrix must be an array of " + std::to_string(dim) + " rows");
  RationalMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!j[i].is_array() || j[i].size() != dim)
      throw InvalidInput("matrix row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

/// {"terms": [[p, q, "c"], ...], "text": "..."}
inline Json to_json(const BigradedPoly& h) {
  Json terms = Json::array();
  for (const auto& [k, c] : h.terms()) terms.push_back(Json::array({k.first, k.second, c.str()}));
  return Json{{"terms", terms}, {"text", h.to_string()}};
}

inline Json to_json(const MatrixPair& p) {
  return Json{{"dim", p.dim()}, {"mx", to_json(p.mx())}, {"my", to_json(p.my())}};
}

/// Reads {dim, mx, my}; entries are integers or rational strings.
inline MatrixPair matrix_pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("mx") || !j.contains("my"))
    throw InvalidInput("matrix pair JSON must be an object with dim, mx, my");
  const auto dim = j.at("dim").get<std::size_t>();
  return MatrixPair(rational_matrix_from_json(j.at("mx"), dim), rational_matrix_from_json(j.at("my"), dim));
}

inline Json to_json(const TorsionPoint& p) {
  Json j = Json::array();
  for (const auto& row : p.to_strings()) j.push_back(row);
  return j;
}

inline Json to_json(const StabilizerReport& s) {
  return Json{{"order", s.order.str()},
              {"orbit_size", s.orbit_size},
              {"full_group", s.full_group},
              {"classification", to_string(s.classification)},
              {"local_model", s.local_model_label},
              {"crepant", s.crepant_label},
              {"generator_count", s.generators.size()}};
}

inline Json to_json(const ExteriorF2& e) {
  Json terms = Json::array();
  for (const auto& m : e.monomials()) {
    Json idx = Json::array();
    for (auto i : m) idx.push_back(i + 1);
    terms.push_back(idx);
  }
  return Json{{"terms", terms}, {"text", e.to_string()}};
}

}  // namespace abelmod
