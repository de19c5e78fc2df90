#pragma once

#include <json.hpp>
#include <string>
#include <variant>

#include "daglim/diagram.hpp"
#include "daglim/limit.hpp"
#include "daglim/matcat.hpp"

namespace daglim {

using nlohmann::json;

// --------------------------------------------------------------------------
// Scalar encodings: complex as [re, im] (a bare number is taken as real),
// rationals as "p/q" strings, booleans as 0/1.
// --------------------------------------------------------------------------

inline json scalar_to_json(Cnum a) { return json::array({a.v.real(), a.v.imag()}); }
inline json scalar_to_json(const Rat& a) {
  return boost::multiprecision::numerator(a.v).str() + "/" +
         boost::multiprecision::denominator(a.v).str();
}
inline json scalar_to_json(Bit a) { return a.v ? 1 : 0; }

template <ScalarType S>
S scalar_from_json(const json& j);

template <>
inline Cnum scalar_from_json<Cnum>(const json& j) {
  if (j.is_number()) return Cnum{j.get<double>()};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Cnum{j[0].get<double>(), j[1].get<double>()};
  throw Error(Errc::BadInput, "complex scalar must be a number or [re, im]");
}

template <>
inline Rat scalar_from_json<Rat>(const json& j) {
  if (j.is_number_integer()) return Rat{static_cast<int>(j.get<std::int64_t>())};
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rat{BigRational(BigInt(s))};
      BigInt p(s.substr(0, slash)), q(s.substr(slash + 1));
      if (q == 0) throw Error(Errc::ZeroDenominator, "rational with q = 0");
      return Rat{BigRational(p) / BigRational(q)};
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(Errc::BadInput, "cannot parse rational '" + s + "'");
    }
  }
  throw Error(Errc::BadInput, "rational scalar must be an integer or a \"p/q\" string");
}

template <>
inline Bit scalar_from_json<Bit>(const json& j) {
  if (j.is_boolean()) return Bit{j.get<bool>()};
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v == 0 || v == 1) return Bit{v == 1};
  }
  throw Error(Errc::BadInput, "boolean scalar must be 0 or 1");
}

// --------------------------------------------------------------------------
// Matrices: row-major arrays of rows, rows() == cod.dim.
// --------------------------------------------------------------------------

template <ScalarType S>
json matrix_to_json(const Morphism<S>& f) {
  json rows = json::array();
  for (int r = 0; r < f.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < f.cols(); ++c) row.push_back(scalar_to_json(f.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <ScalarType S>
Morphism<S> morphism_from_json(Space dom, Space cod, const json& matrix) {
  if (!matrix.is_array() || static_cast<int>(matrix.size()) != cod.dim)
    throw Error(Errc::DimensionMismatch,
                "matrix must have " + std::to_string(cod.dim) + " rows for cod '" + cod.name + "'");
  Morphism<S> f(std::move(dom), std::move(cod));
  for (int r = 0; r < f.rows(); ++r) {
    const json& row = matrix[r];
    if (!row.is_array() || static_cast<int>(row.size()) != f.cols())
      throw Error(Errc::DimensionMismatch,
                  "row " + std::to_string(r) + " must have " + std::to_string(f.cols()) + " entries");
    for (int c = 0; c < f.cols(); ++c) f.at(r, c) = scalar_from_json<S>(row[c]);
  }
  return f;
}

// --------------------------------------------------------------------------
// Diagram files
// --------------------------------------------------------------------------

template <ScalarType S>
Diagram<S> diagram_from_json(const json& j) {
  Diagram<S> d;
  d.epsilon = j.value("epsilon", kDefaultEpsilon);
  if (d.epsilon <= 0) throw Error(Errc::BadInput, "epsilon must be positive");

  std::string shape = j.value("shape", std::string("general"));
  if (shape == "forest")
    d.shape = Shape::Forest;
  else if (shape == "general")
    d.shape = Shape::General;
  else
    throw Error(Errc::BadInput, "shape must be \"forest\" or \"general\"");

  if (!j.contains("objects") || !j["objects"].is_array())
    throw Error(Errc::BadInput, "missing \"objects\" array");
  for (const json& o : j["objects"]) {
    if (!o.contains("name") || !o.contains("dim"))
      throw Error(Errc::BadInput, "object needs \"name\" and \"dim\"");
    d.objects.push_back(Space{o["name"].get<std::string>(), o["dim"].get<int>(), false});
  }

  for (const json& a : j.value("arrows", json::array())) {
    std::string dom = a.at("dom").get<std::string>();
    std::string cod = a.at("cod").get<std::string>();
    if (!d.has_object(dom)) throw Error(Errc::UnknownObject, "arrow dom '" + dom + "'");
    if (!d.has_object(cod)) throw Error(Errc::UnknownObject, "arrow cod '" + cod + "'");
    d.arrows.push_back(Arrow<S>{a.value("name", dom + "->" + cod), dom, cod,
                                morphism_from_json<S>(d.object(dom), d.object(cod), a.at("matrix"))});
  }

  if (j.contains("supporting")) {
    std::vector<std::string> om;
    for (const json& s : j["supporting"]) om.push_back(s.get<std::string>());
    d.supporting = om;
  }

  validate(d);
  return d;
}

using AnyDiagram = std::variant<Diagram<Cnum>, Diagram<Rat>, Diagram<Bit>>;

inline AnyDiagram parse_diagram(const json& j) {
  std::string backend = j.value("backend", std::string("complex-f64"));
  if (backend == "complex-f64") return diagram_from_json<Cnum>(j);
  if (backend == "rational") return diagram_from_json<Rat>(j);
  if (backend == "boolean") return diagram_from_json<Bit>(j);
  throw Error(Errc::BadInput, "unknown backend '" + backend + "'");
}

template <ScalarType S>
json diagram_to_json(const Diagram<S>& d) {
  json j;
  j["backend"] = S::backend_name();
  j["epsilon"] = d.epsilon;
  j["shape"] = d.shape == Shape::Forest ? "forest" : "general";
  j["objects"] = json::array();
  for (const Space& o : d.objects) j["objects"].push_back({{"name", o.name}, {"dim", o.dim}});
  j["arrows"] = json::array();
  for (const auto& a : d.arrows)
    j["arrows"].push_back(
        {{"name", a.name}, {"dom", a.dom}, {"cod", a.cod}, {"matrix", matrix_to_json(a.mor)}});
  if (d.supporting) j["supporting"] = *d.supporting;
  return j;
}

// --------------------------------------------------------------------------
// Limit results
// --------------------------------------------------------------------------

template <ScalarType S>
json result_to_json(const DaggerLimitResult<S>& r) {
  json j;
  j["limit_dim"] = r.limit_object.dim;
  j["omega"] = r.omega;
  j["limit_maps"] = json::object();
  for (const auto& [name, l] : r.limit_maps) j["limit_maps"][name] = matrix_to_json(l);
  j["weights"] = json::object();
  for (const auto& [name, w] : r.weights) j["weights"][name] = scalar_to_json(w);
  j["normalization_residual"] = r.normalization_residual;
  j["trace_id_L"] = scalar_to_json(S::from_ratio(r.limit_object.dim, 1));
  return j;
}

}  // namespace daglim
