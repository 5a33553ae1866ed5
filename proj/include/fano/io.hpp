#pragma once

// JSON encodings for the library types.
//
//   rational      "p/q" or "n" (plain JSON integers are accepted on input)
//   matrix        [[...], ...]
//   DualGraph     {"vertices":[{"label":"C1","self":-2},...],"edges":[["C1","C3",1],...]}
//   Lattice       {"labels":[...],"gram":[[...]]}, or a DualGraph, or {"name":"D5"}
//   SurfaceModel  {"lattice":<lattice>,"canonical":[...],"chi":1}
//   Divisor       {"coeffs":["1/2",...]} or a bare array

#include <fano/exact.hpp>
#include <fano/fano.hpp>
#include <fano/groupscheme.hpp>
#include <fano/intersection.hpp>
#include <fano/lattice.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace fano::io {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(path + ": malformed JSON: " + e.what());
  }
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

// --- scalars -------------------------------------------------------------

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rational r = parse_rational(j.get<std::string>());
    if (!is_integral(r)) throw Error("expected an integer, got " + j.get<std::string>());
    return r.get_num();
  }
  throw Error("expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("expected a rational, got " + j.dump());
}

inline json to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

inline json to_json(const Rational& r) { return json(to_string(r)); }

inline IntVector int_vector_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected an array, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

inline RatVector rat_vector_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected an array, got " + j.dump());
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

template <typename V>
json vector_to_json(const V& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a matrix, got " + j.dump());
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(int_vector_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw Error("ragged matrix");
  return IntMatrix::from_rows(rows);
}

template <typename T>
json matrix_to_json(const Matrix<T>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

// --- lattices ------------------------------------------------------------

inline DualGraph dual_graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw Error("dual graph needs \"vertices\"");
  DualGraph g;
  for (const auto& v : j.at("vertices")) {
    if (!v.contains("label") || !v.contains("self")) throw Error("vertex needs \"label\" and \"self\"");
    g.vertices.push_back({v.at("label").get<std::string>(), integer_from_json(v.at("self"))});
  }
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw Error("edge must be [a, b] or [a, b, multiplicity]");
      g.edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                         e.size() == 3 ? integer_from_json(e[2]) : Integer(1)});
    }
  g.validate();
  return g;
}

inline json to_json(const DualGraph& g) {
  json out;
  out["vertices"] = json::array();
  for (const auto& v : g.vertices) out["vertices"].push_back({{"label", v.label}, {"self", to_json(v.self)}});
  out["edges"] = json::array();
  for (const auto& e : g.edges) out["edges"].push_back(json::array({e.a, e.b, to_json(e.multiplicity)}));
  return out;
}

inline Lattice lattice_from_json(const json& j) {
  try {
    if (j.is_string()) return named_lattice(j.get<std::string>());
    if (j.is_object() && j.contains("name")) return named_lattice(j.at("name").get<std::string>());
    if (j.is_object() && j.contains("vertices")) return gram_from_dual_graph(dual_graph_from_json(j));
    if (j.is_object() && j.contains("gram")) {
      IntMatrix g = int_matrix_from_json(j.at("gram"));
      if (j.contains("labels")) return Lattice(g, j.at("labels").get<std::vector<std::string>>());
      return Lattice(g);
    }
  } catch (const json::exception& e) {
    throw Error(std::string("bad lattice JSON: ") + e.what());
  }
  throw Error("lattice JSON needs \"gram\", \"vertices\" or \"name\"");
}

inline json to_json(const Lattice& l) {
  json out;
  out["labels"] = l.labels();
  out["gram"] = matrix_to_json(l.gram());
  return out;
}

inline SurfaceModel surface_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lattice")) throw Error("surface JSON needs \"lattice\"");
  Lattice l = lattice_from_json(j.at("lattice"));
  IntVector k = j.contains("canonical") ? int_vector_from_json(j.at("canonical")) : IntVector(l.rank(), Integer(0));
  Integer chi = j.contains("chi") ? integer_from_json(j.at("chi")) : Integer(1);
  return SurfaceModel(std::move(l), std::move(k), std::move(chi));
}

inline json to_json(const SurfaceModel& s) {
  json out;
  out["lattice"] = to_json(s.num);
  out["canonical"] = vector_to_json(s.canonical);
  out["chi"] = to_json(s.chi);
  return out;
}

/// Either a coefficient array or {"coeffs": [...]} or {"terms": {"C1": 2, ...}}
/// resolved against the labels of `l`.
inline Divisor divisor_from_json(const json& j, const Lattice& l) {
  Divisor d;
  if (j.is_array()) {
    d.coeffs = rat_vector_from_json(j);
  } else if (j.is_object() && j.contains("coeffs")) {
    d.coeffs = rat_vector_from_json(j.at("coeffs"));
  } else if (j.is_object() && j.contains("terms")) {
    d.coeffs.assign(l.rank(), Rational(0));
    for (const auto& [label, c] : j.at("terms").items()) d.coeffs[l.index_of(label)] += rational_from_json(c);
  } else {
    throw Error("divisor JSON must be an array, {\"coeffs\":...} or {\"terms\":...}");
  }
  if (d.coeffs.size() != l.rank()) throw Error("divisor dimension does not match lattice rank");
  return d;
}

inline json to_json(const Divisor& d) { return json{{"coeffs", vector_to_json(d.coeffs)}}; }

// --- resolution configurations ---------------------------------------------

inline ResolutionConfig resolution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("exceptional") || !j.contains("strict_meets"))
    throw Error("pullback config needs \"exceptional\" and \"strict_meets\"");
  ResolutionConfig cfg;
  cfg.exceptional = lattice_from_json(j.at("exceptional"));
  cfg.strict_meets = int_vector_from_json(j.at("strict_meets"));
  if (cfg.strict_meets.size() != cfg.exceptional.rank())
    throw Error("strict_meets length does not match exceptional rank");
  cfg.strict_self = j.contains("strict_self") ? rational_from_json(j.at("strict_self")) : Rational(0);
  return cfg;
}

inline json to_json(const PullbackResult& r) {
  json out;
  out["lambda"] = vector_to_json(r.lambda);
  out["strict_self"] = to_json(r.strict_self);
  out["rational_self"] = to_json(r.rational_self);
  out["strict_self_integral"] = r.strict_self_integral;
  return out;
}

// --- group schemes -----------------------------------------------------------

inline FiniteUnipotentData finite_unipotent_from_json(const json& j);

namespace detail {

inline void reject_unknown_keys(const json& j, std::initializer_list<const char*> known, const std::string& what) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw Error(what + " JSON has unknown key \"" + key + "\"");
  }
}

}  // namespace detail

/// Accepts the decomposition form (p, abelian_dim, ..., component) or the
/// output of to_json(FiniteUnipotentData).
inline GroupSchemeData group_scheme_from_json(const json& j) {
  if (!j.is_object()) throw Error("group scheme JSON must be an object");
  if (j.contains("local_pieces") || j.contains("etale_p_group")) return as_group_scheme(finite_unipotent_from_json(j));
  detail::reject_unknown_keys(j, {"p", "abelian_dim", "smooth_unipotent_dim", "mult_rank", "local_mult",
                                  "local_unipotent", "component"}, "group scheme");
  GroupSchemeData g;
  try {
    g.p = j.value("p", 2L);
    g.abelian_dim = j.value("abelian_dim", 0L);
    g.smooth_unipotent_dim = j.value("smooth_unipotent_dim", 0L);
    g.mult_rank = j.value("mult_rank", 0L);
  } catch (const json::exception& e) {
    throw Error(std::string("bad group scheme JSON: ") + e.what());
  }
  if (j.contains("local_mult")) g.local_mult = int_vector_from_json(j.at("local_mult"));
  if (j.contains("local_unipotent")) g.local_unipotent = int_vector_from_json(j.at("local_unipotent"));
  if (j.contains("component")) g.component_group = FiniteAbelianGroup::from_cyclic_orders(int_vector_from_json(j.at("component")));
  g.validate();
  return g;
}

inline json to_json(const FiniteAbelianGroup& g) { return vector_to_json(g.invariant_factors()); }

inline json to_json(const GroupSchemeData& g) {
  json out;
  out["p"] = g.p;
  out["abelian_dim"] = g.abelian_dim;
  out["smooth_unipotent_dim"] = g.smooth_unipotent_dim;
  out["mult_rank"] = g.mult_rank;
  out["local_mult"] = vector_to_json(g.local_mult);
  out["local_unipotent"] = vector_to_json(g.local_unipotent);
  out["component"] = to_json(g.component_group);
  return out;
}

inline json to_json(const FiniteUnipotentData& u) {
  json out;
  out["p"] = u.p;
  out["local_pieces"] = vector_to_json(u.local_pieces);
  out["etale_p_group"] = to_json(u.etale_p_group);
  out["order"] = to_json(u.order());
  out["description"] = u.describe();
  return out;
}

inline FiniteUnipotentData finite_unipotent_from_json(const json& j) {
  if (!j.is_object()) throw Error("finite unipotent JSON must be an object");
  detail::reject_unknown_keys(j, {"p", "local_pieces", "etale_p_group", "order", "description"}, "finite unipotent");
  FiniteUnipotentData u;
  u.p = j.value("p", 2L);
  if (j.contains("local_pieces")) u.local_pieces = int_vector_from_json(j.at("local_pieces"));
  if (j.contains("etale_p_group"))
    u.etale_p_group = FiniteAbelianGroup::from_cyclic_orders(int_vector_from_json(j.at("etale_p_group")));
  return u;
}

// --- Fano data ---------------------------------------------------------------

inline FanoData fano_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree")) throw Error("Fano JSON needs \"degree\"");
  FanoData f;
  f.dim = j.value("dim", 2L);
  f.degree = rational_from_json(j.at("degree"));
  f.index = j.value("index", 1L);
  if (j.contains("chi")) f.chi = integer_from_json(j.at("chi"));
  f.validate();
  return f;
}

inline json to_json(const FanoData& f) {
  json out;
  out["dim"] = f.dim;
  out["degree"] = to_json(f.degree);
  out["index"] = f.index;
  out["chi"] = to_json(f.chi);
  return out;
}

}  // namespace fano::io
