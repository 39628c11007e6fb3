#pragma once

// JSON form of a StarAlgebra:
// {"name": str, "dim": int, "basis": [str], "unit": [rat] | null, "grading": [0|1],
//  "mult": [[i, j, [[k, rat], ...]], ...], "involution": [[i, [[k, rat], ...]], ...]}
// Indices are 0-based, rationals are strings, omitted products are zero.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pistar/catalog.hpp"

namespace pistar {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational json_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw Error("expected a rational string, got " + j.dump());
}

inline std::size_t json_index(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string(what) + ": index must be an integer");
  const auto i = j.get<std::int64_t>();
  if (i < 0 || static_cast<std::size_t>(i) >= dim) throw Error(std::string(what) + ": index out of range");
  return static_cast<std::size_t>(i);
}

inline SparseVector json_sparse(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + ": expected [[k, rat], ...]");
  std::vector<Rational> dense(dim);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error(std::string(what) + ": expected [k, rat] pairs");
    dense[json_index(e[0], dim, what)] += json_rational(e[1]);
  }
  return to_sparse(dense);
}

inline Json sparse_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [k, x] : v) out.push_back(Json::array({k, to_string(x)}));
  return out;
}

}  // namespace detail

inline Json to_json(const StarAlgebra& a) {
  const std::size_t d = a.dim();
  Json j;
  j["name"] = a.name();
  j["dim"] = d;
  j["basis"] = a.basis();
  if (a.unit()) {
    Json u = Json::array();
    for (const auto& x : *a.unit()) u.push_back(to_string(x));
    j["unit"] = u;
  } else {
    j["unit"] = nullptr;
  }
  j["grading"] = a.grading();
  Json mult = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (!a.product(i, k).empty()) mult.push_back(Json::array({i, k, detail::sparse_json(a.product(i, k))}));
  j["mult"] = mult;
  Json inv = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    RatVector col(d);
    for (std::size_t r = 0; r < d; ++r) col[r] = a.involution()(r, i);
    inv.push_back(Json::array({i, detail::sparse_json(to_sparse(col))}));
  }
  j["involution"] = inv;
  return j;
}

inline StarAlgebra from_json(const Json& j) {
  for (const char* key : {"name", "dim", "basis", "grading", "mult", "involution"})
    if (!j.contains(key)) throw Error(std::string("algebra JSON: missing key '") + key + "'");
  const auto dim_signed = j.at("dim").get<std::int64_t>();
  if (dim_signed < 0) throw Error("algebra JSON: negative dim");
  const std::size_t d = static_cast<std::size_t>(dim_signed);
  auto basis = j.at("basis").get<std::vector<std::string>>();
  auto grading = j.at("grading").get<std::vector<int>>();
  if (basis.size() != d) throw Error("algebra JSON: basis length differs from dim");
  std::vector<std::vector<SparseVector>> mult(d, std::vector<SparseVector>(d));
  std::vector<std::vector<bool>> seen(d, std::vector<bool>(d, false));
  for (const auto& e : j.at("mult")) {
    if (!e.is_array() || e.size() != 3) throw Error("algebra JSON: mult entries are [i, j, [[k, rat], ...]]");
    const auto i = detail::json_index(e[0], d, "mult");
    const auto k = detail::json_index(e[1], d, "mult");
    if (seen[i][k]) throw Error("algebra JSON: duplicate product entry");
    seen[i][k] = true;
    mult[i][k] = detail::json_sparse(e[2], d, "mult");
  }
  RatMatrix inv(d, d);
  std::vector<bool> have(d, false);
  for (const auto& e : j.at("involution")) {
    if (!e.is_array() || e.size() != 2) throw Error("algebra JSON: involution entries are [i, [[k, rat], ...]]");
    const auto i = detail::json_index(e[0], d, "involution");
    if (have[i]) throw Error("algebra JSON: duplicate involution entry");
    have[i] = true;
    for (const auto& [k, x] : detail::json_sparse(e[1], d, "involution")) inv(k, i) = x;
  }
  for (std::size_t i = 0; i < d; ++i)
    if (!have[i]) throw Error("algebra JSON: involution image of basis element " + std::to_string(i) + " missing");
  std::optional<RatVector> unit;
  if (j.contains("unit") && !j.at("unit").is_null()) {
    RatVector u;
    for (const auto& x : j.at("unit")) u.push_back(detail::json_rational(x));
    unit = std::move(u);
  }
  return StarAlgebra(j.at("name").get<std::string>(), std::move(basis), std::move(grading), std::move(mult),
                     std::move(inv), std::move(unit));
}

inline StarAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open algebra file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("algebra JSON " + path + ": " + e.what());
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error("algebra JSON " + path + ": " + e.what());
  }
}

/// A catalog key, '+'-separated keys, or a path to a JSON file.
inline StarAlgebra resolve_algebra(const std::string& spec) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return load_algebra_file(spec);
  return catalog_sum(spec);
}

}  // namespace pistar
