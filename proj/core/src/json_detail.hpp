#ifndef LATDEFORM_JSON_DETAIL_HPP
#define LATDEFORM_JSON_DETAIL_HPP

// Internal helpers shared by the JSON translation units. Not installed.

#include <string>

#include "json.hpp"
#include "latdeform/errors.hpp"
#include "latdeform/matrix.hpp"
#include "latdeform/rational.hpp"

namespace latdeform {
namespace jsondetail {

using Json = nlohmann::json;

inline Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("input is not valid JSON");
  return j;
}

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) {
    throw SchemaError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

inline Int read_int(const Json& j) {
  if (j.is_string()) return int_from_string(j.get<std::string>());
  if (j.is_number_integer()) {
    return Int(static_cast<long>(j.get<long long>()));
  }
  throw SchemaError("expected an integer as a decimal string");
}

inline Rat read_rat(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) {
    return Rat(static_cast<long>(j.get<long long>()));
  }
  throw SchemaError("expected a rational as a \"p/q\" string");
}

inline int read_small_int(const Json& j) {
  Int v = read_int(j);
  if (!v.fits_sint_p()) throw SchemaError("index out of range");
  return static_cast<int>(v.get_si());
}

inline IntVec read_int_vec(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of integers");
  IntVec v;
  for (const Json& e : j) v.push_back(read_int(e));
  return v;
}

inline IntMat read_int_mat(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError("expected a nonempty array of rows");
  }
  std::vector<IntVec> rows;
  for (const Json& r : j) rows.push_back(read_int_vec(r));
  size_t cols = rows[0].size();
  for (const IntVec& r : rows) {
    if (r.size() != cols) throw SchemaError("ragged matrix rows");
  }
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (size_t i = 0; i < rows.size(); ++i) {
    m.set_row(static_cast<int>(i), rows[i]);
  }
  return m;
}

inline Json write_int(const Int& v) { return int_to_string(v); }
inline Json write_rat(const Rat& v) { return rat_to_string(v); }

inline Json write_int_vec(const IntVec& v) {
  Json a = Json::array();
  for (const Int& e : v) a.push_back(write_int(e));
  return a;
}

inline Json write_rat_vec(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& e : v) a.push_back(write_rat(e));
  return a;
}

inline Json write_int_mat(const IntMat& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(write_int(m.at(i, j)));
    a.push_back(row);
  }
  return a;
}

inline Json write_rat_mat(const RatMat& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(write_rat(m.at(i, j)));
    a.push_back(row);
  }
  return a;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace jsondetail
}  // namespace latdeform

#endif
