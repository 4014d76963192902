#pragma once

// JSON reading and writing for complexes, simplicial complexes, configurations,
// weights and ideals. Rationals are strings in canonical "p/q" form.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toric/edgewise.hpp"

namespace toric::io {

using nlohmann::json;

/// Malformed input; the message names the offending location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Rational parse_rational(const std::string& s, const std::string& where) {
  auto t = s;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  static const std::string allowed = "0123456789-+/";
  if (t.empty() || t.find_first_not_of(allowed) != std::string::npos || t.find('/') != t.rfind('/'))
    throw InputError(where + ": not a rational: '" + s + "'");
  if (t[0] == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0 || (t.find('/') != std::string::npos && q.get_den() == 0))
    throw InputError(where + ": not a rational: '" + s + "'");
  if (t.find('/') != std::string::npos && mpz_class(t.substr(t.find('/') + 1)) == 0)
    throw InputError(where + ": zero denominator");
  q.canonicalize();
  return q;
}

inline std::string format(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

// --- typed field access ----------------------------------------------------------

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

inline const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

inline Integer integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw InputError(where + ": expected an integer");
}

inline IntVec int_vec(const json& j, const std::string& where) {
  IntVec v;
  const auto& a = array(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) v.push_back(integer(a[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

inline std::string string(const json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a string");
  return j.get<std::string>();
}

inline std::vector<std::string> strings(const json& j, const std::string& where) {
  std::vector<std::string> out;
  const auto& a = array(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline json ints(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

}  // namespace detail

// --- toric complexes ------------------------------------------------------------------

/// Embedded: {ambient_dim, generators: [{id, coords}], faces: [[ids]]}.
/// General: {generators: [{id, coords_per_face: [{face, coords}]}], faces,
///           inclusions: [{from_face, to_face, matrix}]}.
inline ToricComplex complex_from_json(const json& j) {
  const auto& gens = detail::array(detail::field(j, "generators", "complex"), "generators");
  const auto& faces = detail::array(detail::field(j, "faces", "complex"), "faces");
  std::vector<std::string> ids;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto id = detail::string(detail::field(gens[i], "id", "generators[" + std::to_string(i) + "]"),
                             "generators[" + std::to_string(i) + "].id");
    if (!index.emplace(id, ids.size()).second) throw InputError("generators[" + std::to_string(i) + "]: duplicate id " + id);
    ids.push_back(id);
  }
  auto face_of = [&](const json& f, const std::string& where) {
    IndexSet s;
    for (const auto& id : detail::strings(f, where)) {
      auto it = index.find(id);
      if (it == index.end()) throw InputError(where + ": unknown generator " + id);
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<IndexSet> face_sets;
  for (std::size_t k = 0; k < faces.size(); ++k) face_sets.push_back(face_of(faces[k], "faces[" + std::to_string(k) + "]"));

  try {
    if (j.contains("ambient_dim")) {
      auto d = detail::integer(j["ambient_dim"], "ambient_dim");
      if (d < 1) throw InputError("ambient_dim: must be positive");
      std::vector<IntVec> coords;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto where = "generators[" + std::to_string(i) + "].coords";
        coords.push_back(detail::int_vec(detail::field(gens[i], "coords", where), where));
        if (coords.back().size() != d.get_ui()) throw InputError(where + ": expected " + d.get_str() + " entries");
      }
      return ToricComplex::embedded(ids, coords, d.get_ui(), face_sets);
    }
    std::map<IndexSet, Face> by_face;
    for (const auto& s : face_sets) by_face[s] = Face{s, s.empty() ? std::size_t{1} : std::size_t{0}, std::vector<IntVec>(s.size())};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto where = "generators[" + std::to_string(i) + "].coords_per_face";
      const auto& per = detail::array(detail::field(gens[i], "coords_per_face", where), where);
      for (std::size_t k = 0; k < per.size(); ++k) {
        auto w = where + "[" + std::to_string(k) + "]";
        auto s = face_of(detail::field(per[k], "face", w), w + ".face");
        auto it = by_face.find(s);
        if (it == by_face.end()) throw InputError(w + ".face: not listed in faces");
        auto pos = std::lower_bound(s.begin(), s.end(), i);
        if (pos == s.end() || *pos != i) throw InputError(w + ".face: does not contain " + ids[i]);
        auto c = detail::int_vec(detail::field(per[k], "coords", w), w + ".coords");
        if (it->second.dim != 0 && it->second.dim != c.size()) throw InputError(w + ".coords: dimension differs within face");
        it->second.dim = c.size();
        it->second.coords[static_cast<std::size_t>(pos - s.begin())] = c;
      }
    }
    std::vector<Face> out;
    for (auto& [s, f] : by_face) {
      for (std::size_t a = 0; a < s.size(); ++a)
        if (f.coords[a].empty()) {
          std::string name;
          for (auto g : s) name += (name.empty() ? "" : ",") + ids[g];
          throw InputError("generator " + ids[s[a]] + ": no coordinates in face {" + name + "}");
        }
      out.push_back(f);
    }
    std::map<std::pair<IndexSet, IndexSet>, IntMatrix> inc;
    if (j.contains("inclusions")) {
      const auto& list = detail::array(j["inclusions"], "inclusions");
      for (std::size_t k = 0; k < list.size(); ++k) {
        auto w = "inclusions[" + std::to_string(k) + "]";
        auto from = face_of(detail::field(list[k], "from_face", w), w + ".from_face");
        auto to = face_of(detail::field(list[k], "to_face", w), w + ".to_face");
        const auto& rows = detail::array(detail::field(list[k], "matrix", w), w + ".matrix");
        std::vector<IntVec> m;
        for (std::size_t r = 0; r < rows.size(); ++r) m.push_back(detail::int_vec(rows[r], w + ".matrix[" + std::to_string(r) + "]"));
        std::size_t cols = m.empty() ? 0 : m[0].size();
        for (const auto& row : m)
          if (row.size() != cols) throw InputError(w + ".matrix: ragged rows");
        inc[{from, to}] = IntMatrix::from_rows(m, cols);
      }
    }
    return ToricComplex::general(ids, out, inc);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("complex: ") + e.what());
  }
}

inline json complex_to_json(const ToricComplex& t) {
  json j;
  json gens = json::array();
  if (t.is_embedded()) {
    j["ambient_dim"] = t.ambient_dim();
    for (std::size_t a = 0; a < t.generator_count(); ++a) gens.push_back({{"id", t.id(a)}, {"coords", detail::ints(t.coords(a))}});
  } else {
    for (std::size_t a = 0; a < t.generator_count(); ++a) {
      json per = json::array();
      for (auto fi : t.faces_containing({a}))
        per.push_back({{"face", t.id_set(t.faces()[fi].gens)}, {"coords", detail::ints(t.face_coords(fi, a))}});
      gens.push_back({{"id", t.id(a)}, {"coords_per_face", per}});
    }
  }
  j["generators"] = gens;
  json faces = json::array();
  for (const auto& f : t.faces()) faces.push_back(t.id_set(f.gens));
  j["faces"] = faces;
  if (!t.is_embedded()) {
    json inc = json::array();
    for (const auto& [key, m] : t.inclusions()) {
      json rows = json::array();
      for (const auto& r : m.row_list()) rows.push_back(detail::ints(r));
      inc.push_back({{"from_face", t.id_set(key.first)}, {"to_face", t.id_set(key.second)}, {"matrix", rows}});
    }
    j["inclusions"] = inc;
  }
  return j;
}

// --- simplicial complexes and configurations -------------------------------------

/// {vertices: n, facets: [[ints]]} on the vertex set {1..n}.
inline SimplicialComplex simplicial_from_json(const json& j) {
  auto n = detail::integer(detail::field(j, "vertices", "simplicial"), "vertices");
  if (n < 1 || n > 64) throw InputError("vertices: must be between 1 and 64");
  const auto& facets = detail::array(detail::field(j, "facets", "simplicial"), "facets");
  std::vector<Simplex> fs;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    Simplex f;
    for (const auto& v : detail::int_vec(facets[k], "facets[" + std::to_string(k) + "]")) f.push_back(static_cast<int>(v.get_si()));
    fs.push_back(f);
  }
  try {
    return SimplicialComplex::from_facets(static_cast<int>(n.get_si()), fs);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("simplicial: ") + e.what());
  }
}

inline json simplicial_to_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (const auto& f : c.facets()) facets.push_back(f);
  return {{"vertices", c.vertex_count()}, {"facets", facets}};
}

/// esd output: the simplicial schema plus the vertex dictionary rV → ι-coordinates.
inline json edgewise_to_json(const Edgewise& e) {
  auto j = simplicial_to_json(e.complex);
  json dict = json::array();
  for (std::size_t k = 0; k < e.vertices.size(); ++k)
    dict.push_back({{"vertex", k + 1}, {"u", e.vertices[k]}, {"tuple", psi_inverse(e.vertices[k])}, {"coords", detail::ints(iota(e.vertices[k]))}});
  j["r"] = e.r;
  j["vertex_map"] = dict;
  return j;
}

/// {points: [[ints]]}; the dimension is the common length.
inline VectorConfig config_from_json(const json& j) {
  const auto& pts = detail::array(detail::field(j, "points", "config"), "points");
  std::vector<IntVec> v;
  for (std::size_t k = 0; k < pts.size(); ++k) v.push_back(detail::int_vec(pts[k], "points[" + std::to_string(k) + "]"));
  if (v.empty()) throw InputError("points: empty configuration");
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k].size() != v[0].size()) throw InputError("points[" + std::to_string(k) + "]: dimension differs");
  try {
    return VectorConfig(v, v[0].size());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("config: ") + e.what());
  }
}

// --- weights and ideals ----------------------------------------------------------

/// Inline "0,-1,1/2" in generator order, or a JSON file mapping ids to rationals.
inline Weights parse_weights(const std::string& spec, const ToricComplex& t) {
  Weights w;
  if (std::filesystem::is_regular_file(spec)) {
    auto j = read_json(spec);
    if (!j.is_object()) throw InputError(spec + ": expected an object of id -> weight");
    for (std::size_t a = 0; a < t.generator_count(); ++a) {
      auto it = j.find(t.id(a));
      if (it == j.end()) throw InputError(spec + ": missing weight for " + t.id(a));
      std::string s = it->is_string() ? it->get<std::string>() : it->dump();
      w.push_back(parse_rational(s, spec + "." + t.id(a)));
    }
    return w;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) w.push_back(parse_rational(item, "weights[" + std::to_string(w.size()) + "]"));
  if (w.size() != t.generator_count())
    throw InputError("weights: expected " + std::to_string(t.generator_count()) + " values, got " + std::to_string(w.size()));
  return w;
}

inline json weights_to_json(const Weights& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(format(x));
  return a;
}

inline json polys_to_json(std::span<const Polynomial> fs, std::span<const std::string> names) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(to_string(f, names));
  return a;
}

/// {variables: [names], generators: [strings]}.
struct PolynomialSystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
};

inline PolynomialSystem polys_from_json(const json& j) {
  PolynomialSystem p;
  p.variables = detail::strings(detail::field(j, "variables", "ideal"), "variables");
  const auto& gens = detail::array(detail::field(j, "generators", "ideal"), "generators");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto where = "generators[" + std::to_string(k) + "]";
    try {
      p.generators.push_back(parse_polynomial(detail::string(gens[k], where), p.variables));
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  return p;
}

inline json presentation_to_json(const IdealPresentation& p) {
  return {{"variables", p.variables},
          {"monomials", polys_to_json(p.monomials, p.variables)},
          {"binomials", polys_to_json(p.binomials, p.variables)}};
}

inline json subdivision_to_json(const ToricComplex& t, const SubdivisionResult& res) {
  json faces = json::array();
  for (const auto& f : res.faces_in(t)) faces.push_back(t.id_set(f));
  json certs = json::array();
  for (const auto& c : res.certificates)
    certs.push_back({{"face", t.id_set(c.face)}, {"carrier", t.id_set(c.carrier)}, {"alpha", weights_to_json(c.alpha)}});
  json j{{"classification", to_string(res.classification)}, {"faces", faces}, {"certificates", certs}};
  if (!res.regular) j["witness"] = res.witness;
  return j;
}

}  // namespace toric::io
