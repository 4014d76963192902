#pragma once

// Toric complexes: a poset of finite generator sets with lattice maps per
// face and inclusion matrices between nested faces.

#include "toric/exactlin.hpp"
#include "toric/polyhedra.hpp"
#include "toric/simplicial.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

struct Face {
  IndexSet gens;               // sorted generator indices
  std::size_t dim = 1;         // d_F
  std::vector<IntVec> coords;  // T_F(a) for a in gens, same order
};

class ToricComplex {
 public:
  ToricComplex() = default;

  /// All faces live in Z^d with identity inclusions.
  static ToricComplex embedded(std::vector<std::string> ids, std::vector<IntVec> coords, std::size_t ambient,
                               std::vector<IndexSet> faces) {
    if (ids.size() != coords.size()) throw std::invalid_argument("ToricComplex: ids and coordinates differ in length");
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i].size() != ambient)
        throw std::invalid_argument("ToricComplex: generator " + ids[i] + " has wrong dimension");
    ToricComplex t;
    t.ids_ = std::move(ids);
    t.embedded_ = true;
    t.ambient_ = ambient;
    t.global_ = std::move(coords);
    std::set<IndexSet> uniq;
    for (auto f : faces) {
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw std::invalid_argument("ToricComplex: repeated generator in a face");
      for (auto i : f)
        if (i >= t.ids_.size()) throw std::invalid_argument("ToricComplex: face refers to unknown generator");
      uniq.insert(std::move(f));
    }
    for (const auto& f : uniq) {
      Face face{f, ambient, {}};
      for (auto i : f) face.coords.push_back(t.global_[i]);
      t.faces_.push_back(std::move(face));
    }
    t.finish();
    return t;
  }

  /// General complex: per-face coordinates and explicit inclusion matrices
  /// T_FG (d_G × d_F) for nonempty nested pairs, keyed by (F, G).
  static ToricComplex general(std::vector<std::string> ids, std::vector<Face> faces,
                              std::map<std::pair<IndexSet, IndexSet>, IntMatrix> inclusions) {
    ToricComplex t;
    t.ids_ = std::move(ids);
    t.embedded_ = false;
    std::map<IndexSet, Face> uniq;
    for (auto& f : faces) {
      if (f.gens.size() != f.coords.size())
        throw std::invalid_argument("ToricComplex: face coordinate count differs from its generators");
      // sort generators together with their coordinates
      std::vector<std::size_t> perm(f.gens.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return f.gens[a] < f.gens[b]; });
      Face g{{}, f.dim, {}};
      for (auto p : perm) {
        if (f.gens[p] >= t.ids_.size()) throw std::invalid_argument("ToricComplex: face refers to unknown generator");
        if (f.coords[p].size() != f.dim)
          throw std::invalid_argument("ToricComplex: coordinate of " + t.ids_[f.gens[p]] + " has wrong dimension");
        g.gens.push_back(f.gens[p]);
        g.coords.push_back(f.coords[p]);
      }
      if (std::adjacent_find(g.gens.begin(), g.gens.end()) != g.gens.end())
        throw std::invalid_argument("ToricComplex: repeated generator in a face");
      if (g.dim == 0) throw std::invalid_argument("ToricComplex: face dimension must be positive");
      uniq[g.gens] = std::move(g);
    }
    for (auto& [k, f] : uniq) t.faces_.push_back(std::move(f));
    for (auto& [key, m] : inclusions) {
      IndexSet a = key.first, b = key.second;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      t.inclusions_[{a, b}] = std::move(m);
    }
    t.finish();
    return t;
  }

  std::size_t generator_count() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  std::optional<std::size_t> index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  std::optional<std::size_t> face_index(const IndexSet& gens) const {
    auto it = face_pos_.find(gens);
    if (it == face_pos_.end()) return std::nullopt;
    return it->second;
  }
  bool has_face(const IndexSet& gens) const { return face_pos_.count(gens) > 0; }
  std::set<IndexSet> face_sets() const {
    std::set<IndexSet> s;
    for (const auto& f : faces_) s.insert(f.gens);
    return s;
  }

  bool is_embedded() const { return embedded_; }
  std::size_t ambient_dim() const { return ambient_; }
  /// Global coordinates of a generator of an embedded complex.
  const IntVec& coords(std::size_t gen) const {
    if (!embedded_) throw std::logic_error("ToricComplex: global coordinates need an embedded complex");
    return global_.at(gen);
  }

  /// T_F(F) as a configuration, points in the order of F's generators.
  VectorConfig config(std::size_t face) const {
    const Face& f = faces_.at(face);
    return VectorConfig(f.coords, f.dim);
  }

  /// T_F(a) for generator a of face F.
  const IntVec& face_coords(std::size_t face, std::size_t gen) const {
    const Face& f = faces_.at(face);
    auto it = std::lower_bound(f.gens.begin(), f.gens.end(), gen);
    if (it == f.gens.end() || *it != gen) throw std::out_of_range("ToricComplex: generator not in face");
    return f.coords[static_cast<std::size_t>(it - f.gens.begin())];
  }

  /// T_FG; the identity for embedded complexes.
  IntMatrix inclusion(std::size_t f, std::size_t g) const {
    const Face& a = faces_.at(f);
    const Face& b = faces_.at(g);
    if (embedded_ || f == g) return IntMatrix::identity(b.dim);
    auto it = inclusions_.find({a.gens, b.gens});
    if (it == inclusions_.end())
      throw std::out_of_range("ToricComplex: no inclusion " + face_name(a.gens) + " -> " + face_name(b.gens));
    return it->second;
  }
  bool has_inclusion(std::size_t f, std::size_t g) const {
    return embedded_ || f == g || inclusions_.count({faces_.at(f).gens, faces_.at(g).gens}) > 0;
  }
  const std::map<std::pair<IndexSet, IndexSet>, IntMatrix>& inclusions() const { return inclusions_; }

  /// Faces not strictly contained in another face.
  std::vector<std::size_t> maximal_faces() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < faces_.size() && maximal; ++j)
        if (j != i && faces_[j].gens.size() > faces_[i].gens.size() &&
            std::includes(faces_[j].gens.begin(), faces_[j].gens.end(), faces_[i].gens.begin(),
                          faces_[i].gens.end()))
          maximal = false;
      if (maximal) out.push_back(i);
    }
    return out;
  }

  /// Indices of faces containing the given generator set.
  std::vector<std::size_t> faces_containing(const IndexSet& s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (std::includes(faces_[i].gens.begin(), faces_[i].gens.end(), s.begin(), s.end())) out.push_back(i);
    return out;
  }

  std::string face_name(const IndexSet& f) const {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + ids_.at(f[i]);
    return s + "}";
  }

  /// Faces as sorted lists of generator ids; the identity of a face.
  std::set<std::vector<std::string>> face_id_sets() const {
    std::set<std::vector<std::string>> out;
    for (const auto& f : faces_) out.insert(id_set(f.gens));
    return out;
  }
  std::vector<std::string> id_set(const IndexSet& f) const {
    std::vector<std::string> v;
    for (auto i : f) v.push_back(ids_.at(i));
    std::sort(v.begin(), v.end());
    return v;
  }
  IndexSet index_set(const std::vector<std::string>& ids) const {
    IndexSet s;
    for (const auto& id : ids) {
      auto i = index_of(id);
      if (!i) throw std::invalid_argument("ToricComplex: unknown generator '" + id + "'");
      s.push_back(*i);
    }
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  void finish() {
    index_.clear();
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (!index_.emplace(ids_[i], i).second) throw std::invalid_argument("ToricComplex: duplicate id " + ids_[i]);
    std::vector<bool> used(ids_.size());
    for (const auto& f : faces_)
      for (auto i : f.gens) used[i] = true;
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (!used[i]) throw std::invalid_argument("ToricComplex: generator " + ids_[i] + " lies in no face");
    face_pos_.clear();
    for (std::size_t i = 0; i < faces_.size(); ++i) face_pos_[faces_[i].gens] = i;
  }

  std::vector<std::string> ids_;
  std::map<std::string, std::size_t> index_;
  std::vector<Face> faces_;
  std::map<IndexSet, std::size_t> face_pos_;
  bool embedded_ = true;
  std::size_t ambient_ = 0;
  std::vector<IntVec> global_;
  std::map<std::pair<IndexSet, IndexSet>, IntMatrix> inclusions_;
};

// --- validation -----------------------------------------------------------------

struct Violation {
  std::string axiom;  // "b", "c", "i", "ii", "iii", "iv"
  std::string detail;
  std::vector<IndexSet> faces;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate(const ToricComplex& t) {
  ValidationReport rep;
  const auto& faces = t.faces();
  auto add = [&](std::string ax, std::string detail, std::vector<IndexSet> fs) {
    rep.violations.push_back({std::move(ax), std::move(detail), std::move(fs)});
  };

  // (b) T_F injective with nonzero values
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.coords.size(); ++i) {
      if (is_zero(f.coords[i]))
        add("b", "T_F(" + t.id(f.gens[i]) + ") is zero in face " + t.face_name(f.gens), {f.gens});
      for (std::size_t j = 0; j < i; ++j)
        if (f.coords[i] == f.coords[j])
          add("b", "T_F not injective on " + t.id(f.gens[j]) + ", " + t.id(f.gens[i]) + " in face " +
                       t.face_name(f.gens),
              {f.gens});
    }
  }

  // (i) intersections
  std::set<std::pair<IndexSet, IndexSet>> reported;
  for (std::size_t a = 0; a < faces.size(); ++a)
    for (std::size_t b = a + 1; b < faces.size(); ++b) {
      IndexSet c;
      std::set_intersection(faces[a].gens.begin(), faces[a].gens.end(), faces[b].gens.begin(), faces[b].gens.end(),
                            std::back_inserter(c));
      if (!t.has_face(c))
        add("i",
            "intersection " + t.face_name(c) + " of " + t.face_name(faces[a].gens) + " and " +
                t.face_name(faces[b].gens) + " is not a face",
            {faces[a].gens, faces[b].gens});
    }

  // (c), (ii), (iii) for nonempty nested pairs of a non-embedded complex
  if (!t.is_embedded()) {
    for (std::size_t a = 0; a < faces.size(); ++a)
      for (std::size_t b = 0; b < faces.size(); ++b) {
        if (a == b || faces[a].gens.empty()) continue;
        if (!std::includes(faces[b].gens.begin(), faces[b].gens.end(), faces[a].gens.begin(), faces[a].gens.end()))
          continue;
        if (!t.has_inclusion(a, b)) {
          add("c", "missing inclusion " + t.face_name(faces[a].gens) + " -> " + t.face_name(faces[b].gens),
              {faces[a].gens, faces[b].gens});
          continue;
        }
        IntMatrix m = t.inclusion(a, b);
        if (m.rows() != faces[b].dim || m.cols() != faces[a].dim) {
          add("c", "inclusion " + t.face_name(faces[a].gens) + " -> " + t.face_name(faces[b].gens) + " has wrong shape",
              {faces[a].gens, faces[b].gens});
          continue;
        }
        if (rank(m) != faces[a].dim)
          add("c", "inclusion " + t.face_name(faces[a].gens) + " -> " + t.face_name(faces[b].gens) + " not injective",
              {faces[a].gens, faces[b].gens});
        for (auto g : faces[a].gens)
          if (m.apply(t.face_coords(a, g)) != t.face_coords(b, g))
            add("ii", "T_FG(T_F(" + t.id(g) + ")) != T_G(" + t.id(g) + ") for F=" + t.face_name(faces[a].gens) +
                          ", G=" + t.face_name(faces[b].gens),
                {faces[a].gens, faces[b].gens});
      }
    for (std::size_t a = 0; a < faces.size(); ++a)
      for (std::size_t b = 0; b < faces.size(); ++b)
        for (std::size_t c = 0; c < faces.size(); ++c) {
          if (a == b || b == c || faces[a].gens.empty()) continue;
          const auto &fa = faces[a].gens, &fb = faces[b].gens, &fc = faces[c].gens;
          if (!std::includes(fb.begin(), fb.end(), fa.begin(), fa.end()) ||
              !std::includes(fc.begin(), fc.end(), fb.begin(), fb.end()))
            continue;
          if (!t.has_inclusion(a, b) || !t.has_inclusion(b, c) || !t.has_inclusion(a, c)) continue;
          auto mab = t.inclusion(a, b), mbc = t.inclusion(b, c), mac = t.inclusion(a, c);
          if (mbc.cols() != mab.rows() || mab.cols() != mac.cols() || mbc.rows() != mac.rows()) continue;
          if (!(mbc * mab == mac))
            add("iii", "T_GH∘T_FG != T_FH for F=" + t.face_name(fa) + ", G=" + t.face_name(fb) +
                           ", H=" + t.face_name(fc),
                {fa, fb, fc});
        }
  }

  // (iv) faces below G are exactly the faces of cone(T_G(G))
  for (std::size_t g = 0; g < faces.size(); ++g) {
    const auto& G = faces[g];
    bool bad_coords = std::any_of(G.coords.begin(), G.coords.end(), [](const IntVec& v) { return is_zero(v); });
    for (std::size_t i = 0; i < G.coords.size() && !bad_coords; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (G.coords[i] == G.coords[j]) bad_coords = true;
    if (bad_coords) continue;  // already reported under (b)
    std::set<IndexSet> geometric;
    for (const auto& local : face_poset(t.config(g))) {
      IndexSet global;
      for (auto i : local) global.push_back(G.gens[i]);
      geometric.insert(global);
    }
    for (const auto& f : geometric)
      if (!t.has_face(f))
        add("iv", t.face_name(f) + " spans a face of cone(" + t.face_name(G.gens) + ") but is not in the poset",
            {f, G.gens});
    for (const auto& F : faces) {
      if (!std::includes(G.gens.begin(), G.gens.end(), F.gens.begin(), F.gens.end())) continue;
      if (!geometric.count(F.gens))
        add("iv", t.face_name(F.gens) + " is in the poset but does not span a face of cone(" + t.face_name(G.gens) + ")",
            {F.gens, G.gens});
    }
  }
  return rep;
}

// --- constructors ---------------------------------------------------------------

/// T(G) for a configuration: generators x0.., faces from the face poset.
inline ToricComplex from_config(const VectorConfig& cfg, const std::string& prefix = "x") {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < cfg.size(); ++i) ids.push_back(prefix + std::to_string(i));
  auto poset = face_poset(cfg);
  return ToricComplex::embedded(ids, cfg.points(), cfg.ambient_dim(), {poset.begin(), poset.end()});
}

/// ι_V(i) = e_i + ... + e_{d+1}, with V = {1..n}.
inline IntVec iota_vertex(int i, int n) {
  IntVec v(static_cast<std::size_t>(n));
  for (int j = i; j <= n; ++j) v[static_cast<std::size_t>(j - 1)] = 1;
  return v;
}

/// T(Δ): vertex i becomes generator "x<i>" at ι_V(i).
inline ToricComplex from_simplicial(const SimplicialComplex& delta) {
  const int n = delta.vertex_count();
  auto verts = delta.used_vertices();
  std::vector<std::string> ids;
  std::vector<IntVec> coords;
  std::map<int, std::size_t> pos;
  for (int v : verts) {
    pos[v] = ids.size();
    ids.push_back("x" + std::to_string(v));
    coords.push_back(iota_vertex(v, n));
  }
  std::vector<IndexSet> faces;
  for (const auto& f : delta.faces()) {
    IndexSet s;
    for (int v : f) s.push_back(pos.at(v));
    faces.push_back(s);
  }
  return ToricComplex::embedded(ids, coords, static_cast<std::size_t>(std::max(n, 1)), faces);
}

// --- properties -----------------------------------------------------------------

struct PropertyFlags {
  bool z_graded = false;
  bool n_graded = false;
  bool standard_graded = false;
  bool pointed = false;
  bool simplicial = false;
  bool embedded = false;
};

inline PropertyFlags properties(const ToricComplex& t) {
  PropertyFlags p;
  p.embedded = t.is_embedded();
  p.z_graded = true;
  if (!t.is_embedded())
    for (const auto& [key, m] : t.inclusions()) {
      if (m.rows() == 0 || m.cols() == 0) continue;
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(m.rows() - 1, j) != (j + 1 == m.cols() ? 1 : 0)) p.z_graded = false;
    }
  bool positive = true, unit = true;
  for (const auto& f : t.faces())
    for (const auto& c : f.coords) {
      if (c.back() <= 0) positive = false;
      if (c.back() != 1) unit = false;
    }
  p.n_graded = p.z_graded && positive;
  p.standard_graded = p.z_graded && unit;
  p.pointed = t.has_face({});
  p.simplicial = std::all_of(t.faces().begin(), t.faces().end(),
                             [](const Face& f) { return linearly_independent(f.coords, f.dim); });
  return p;
}

// --- subcomplexes ---------------------------------------------------------------

/// Subcomplex on the given faces (as id lists); generators not in any chosen face are dropped.
inline ToricComplex subcomplex(const ToricComplex& t, const std::set<std::vector<std::string>>& chosen) {
  std::set<IndexSet> keep;
  for (const auto& ids : chosen) {
    IndexSet f = t.index_set(ids);
    if (!t.has_face(f)) throw std::invalid_argument("subcomplex: " + t.face_name(f) + " is not a face");
    keep.insert(f);
  }
  for (const auto& g : keep)
    for (const auto& F : t.faces())
      if (std::includes(g.begin(), g.end(), F.gens.begin(), F.gens.end()) && !keep.count(F.gens))
        throw std::invalid_argument("subcomplex: " + t.face_name(F.gens) + " is a face of " + t.face_name(g) +
                                    " in the complex but was dropped");
  std::set<std::size_t> used;
  for (const auto& f : keep) used.insert(f.begin(), f.end());
  std::map<std::size_t, std::size_t> re;
  std::vector<std::string> ids;
  for (auto i : used) {
    re[i] = ids.size();
    ids.push_back(t.id(i));
  }
  auto reindex = [&](const IndexSet& f) {
    IndexSet s;
    for (auto i : f) s.push_back(re.at(i));
    return s;
  };
  if (t.is_embedded()) {
    std::vector<IntVec> coords;
    for (auto i : used) coords.push_back(t.coords(i));
    std::vector<IndexSet> faces;
    for (const auto& f : keep) faces.push_back(reindex(f));
    return ToricComplex::embedded(ids, coords, t.ambient_dim(), faces);
  }
  std::vector<Face> faces;
  for (const auto& f : keep) {
    const Face& src = t.faces()[*t.face_index(f)];
    faces.push_back({reindex(f), src.dim, src.coords});
  }
  std::map<std::pair<IndexSet, IndexSet>, IntMatrix> inc;
  for (const auto& [key, m] : t.inclusions())
    if (keep.count(key.first) && keep.count(key.second)) inc[{reindex(key.first), reindex(key.second)}] = m;
  return ToricComplex::general(ids, faces, inc);
}

/// Faces of T with the given generator-index sets.
inline ToricComplex subcomplex_by_index(const ToricComplex& t, const std::set<IndexSet>& faces) {
  std::set<std::vector<std::string>> chosen;
  for (const auto& f : faces) chosen.insert(t.id_set(f));
  return subcomplex(t, chosen);
}

/// Smallest subcomplex containing the given faces.
inline ToricComplex closure(const ToricComplex& t, const std::vector<IndexSet>& tops) {
  std::set<IndexSet> keep;
  for (const auto& g : tops)
    for (const auto& F : t.faces())
      if (std::includes(g.begin(), g.end(), F.gens.begin(), F.gens.end())) keep.insert(F.gens);
  return subcomplex_by_index(t, keep);
}

/// Q ∩ S for subcomplexes of a common complex T.
inline ToricComplex intersect(const ToricComplex& t, const ToricComplex& q, const ToricComplex& s) {
  auto a = q.face_id_sets(), b = s.face_id_sets();
  std::set<std::vector<std::string>> c;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(c, c.begin()));
  return subcomplex(t, c);
}

inline bool is_union(const ToricComplex& t, const ToricComplex& q, const ToricComplex& s) {
  auto a = q.face_id_sets(), b = s.face_id_sets();
  a.insert(b.begin(), b.end());
  return a == t.face_id_sets();
}

// --- fans -----------------------------------------------------------------------

enum class GeneratorChoice { given, primitive_rays };

/// Embedded complex of a fan given by its maximal cones. Each cone is a
/// configuration of chosen generators; with primitive_rays the extreme rays'
/// primitive vectors are used instead. Every face of every cone is included.
inline ToricComplex from_fan(const std::vector<VectorConfig>& cones, GeneratorChoice choice) {
  if (cones.empty()) throw std::invalid_argument("from_fan: no cones");
  const std::size_t d = cones[0].ambient_dim();
  std::vector<VectorConfig> gens;
  for (const auto& c : cones) {
    if (c.ambient_dim() != d) throw std::invalid_argument("from_fan: cones in different dimensions");
    if (choice == GeneratorChoice::given) {
      gens.push_back(c);
      continue;
    }
    // extreme rays: primitive vectors on one-dimensional faces
    std::vector<IntVec> rays;
    for (const auto& f : face_poset(c)) {
      std::vector<IntVec> pts;
      for (auto i : f) pts.push_back(c[i]);
      if (!pts.empty() && rank(pts, d) == 1) {
        auto p = primitive(pts[0]);
        if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);
      }
    }
    std::sort(rays.begin(), rays.end());
    gens.push_back(VectorConfig(rays, d));
  }

  std::vector<IntVec> points;
  auto index_of = [&](const IntVec& p) {
    auto it = std::find(points.begin(), points.end(), p);
    if (it != points.end()) return static_cast<std::size_t>(it - points.begin());
    points.push_back(p);
    return points.size() - 1;
  };
  std::vector<IndexSet> cone_sets;
  std::set<IndexSet> faces;
  for (const auto& g : gens) {
    IndexSet all;
    for (const auto& p : g.points()) all.push_back(index_of(p));
    for (const auto& f : face_poset(g)) {
      IndexSet s;
      for (auto i : f) s.push_back(all[i]);
      std::sort(s.begin(), s.end());
      faces.insert(s);
    }
    std::sort(all.begin(), all.end());
    cone_sets.push_back(all);
  }

  // cones must meet in a common face, with matching generators
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      IndexSet common;
      std::set_intersection(cone_sets[a].begin(), cone_sets[a].end(), cone_sets[b].begin(), cone_sets[b].end(),
                            std::back_inserter(common));
      auto witness = "cones " + std::to_string(a) + " and " + std::to_string(b);
      if (!faces.count(common))
        throw std::invalid_argument("from_fan: " + witness + " share generators that do not form a face");
      // cone(a) ∩ cone(b) must equal cone(common)
      std::vector<IntVec> ineq = facets(gens[a]).normals;
      for (auto& n : facets(gens[b]).normals) ineq.push_back(n);
      auto inter = double_description(ineq, d);
      std::vector<IntVec> cp;
      for (auto i : common) cp.push_back(points[i]);
      auto inside = [&](const IntVec& x) {
        if (cp.empty()) return is_zero(x);
        return in_cone(VectorConfig(cp, d), x).member;
      };
      for (const auto& r : inter.rays)
        if (!inside(r)) throw std::invalid_argument("from_fan: " + witness + " do not meet in a common face");
      for (const auto& l : inter.lineality) {
        IntVec m = l;
        for (auto& x : m) x = -x;
        if (!inside(l) || !inside(m))
          throw std::invalid_argument("from_fan: " + witness + " do not meet in a common face");
      }
    }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < points.size(); ++i) ids.push_back("x" + std::to_string(i));
  auto t = ToricComplex::embedded(ids, points, d, {faces.begin(), faces.end()});
  auto rep = validate(t);
  if (!rep.ok()) throw std::invalid_argument("from_fan: " + rep.violations[0].detail);
  return t;
}

// --- multiples ------------------------------------------------------------------

namespace detail {

/// All u : {0..k-1} → N with Σ u = r.
inline std::vector<std::vector<int>> compositions(std::size_t k, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> u(k);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (k == 0) return;
    if (i + 1 == k) {
      u[i] = left;
      out.push_back(u);
      return;
    }
    for (int e = left; e >= 0; --e) {
      u[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, r);
  return out;
}

inline IntVec evaluate(const Face& f, const std::vector<int>& u) {
  IntVec s(f.dim);
  for (std::size_t i = 0; i < f.gens.size(); ++i)
    for (std::size_t j = 0; j < f.dim; ++j) s[j] += u[i] * f.coords[i][j];
  return s;
}

}  // namespace detail

/// Identifier of a generator of rT: exponents of its representative.
inline std::string multiple_id(const std::vector<int>& u) {
  std::string s = "m";
  for (int e : u) s += "_" + std::to_string(e);
  return s;
}

/// rT: degree-r exponent functions on faces modulo equal images.
inline ToricComplex multiple(const ToricComplex& t, int r) {
  if (r < 1) throw std::invalid_argument("multiple: r must be at least 1");
  const std::size_t n = t.generator_count();
  // global exponent vectors u : Gen(T) → N with support in a face, grouped by image in a maximal face
  std::map<std::vector<int>, std::vector<int>> rep;  // u -> representative
  auto find = [&](std::vector<int> u) {
    while (rep.at(u) != u) u = rep.at(u);
    return u;
  };
  auto unite = [&](const std::vector<int>& a, const std::vector<int>& b) {
    auto ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    // smaller exponent vector stays representative (lexicographically smallest)
    rep[rb] = ra;
  };
  auto lift = [&](const Face& f, const std::vector<int>& local) {
    std::vector<int> u(n);
    for (std::size_t i = 0; i < f.gens.size(); ++i) u[f.gens[i]] = local[i];
    return u;
  };
  for (const auto& f : t.faces())
    for (const auto& local : detail::compositions(f.gens.size(), r)) rep.emplace(lift(f, local), lift(f, local));
  for (auto mi : t.maximal_faces()) {
    const Face& f = t.faces()[mi];
    std::map<IntVec, std::vector<int>> by_image;
    for (const auto& local : detail::compositions(f.gens.size(), r)) {
      auto img = detail::evaluate(f, local);
      auto u = lift(f, local);
      // only happens when cone(T_F(F)) contains a line
      if (is_zero(img))
        throw std::invalid_argument("multiple: " + multiple_id(u) + " maps to zero in face " + t.face_name(f.gens));
      auto [it, fresh] = by_image.emplace(img, u);
      if (!fresh) unite(it->second, u);
    }
  }
  // generators are class representatives
  std::map<std::vector<int>, std::size_t> gen_index;
  std::vector<std::string> ids;
  std::vector<std::vector<int>> reps;
  for (const auto& [u, parent] : rep) {
    auto root = find(u);
    if (gen_index.count(root)) continue;
    gen_index[root] = ids.size();
    ids.push_back(multiple_id(root));
    reps.push_back(root);
  }
  // faces rF: classes with a member supported in F
  std::vector<Face> faces;
  std::vector<IndexSet> face_sets;
  for (const auto& f : t.faces()) {
    std::map<std::size_t, IntVec> members;
    for (const auto& local : detail::compositions(f.gens.size(), r))
      members.emplace(gen_index.at(find(lift(f, local))), detail::evaluate(f, local));
    Face rf{{}, f.dim, {}};
    for (auto& [g, img] : members) {
      rf.gens.push_back(g);
      rf.coords.push_back(img);
    }
    face_sets.push_back(rf.gens);
    faces.push_back(std::move(rf));
  }
  if (t.is_embedded()) {
    std::vector<IntVec> coords(ids.size());
    for (const auto& f : faces)
      for (std::size_t i = 0; i < f.gens.size(); ++i) coords[f.gens[i]] = f.coords[i];
    return ToricComplex::embedded(ids, coords, t.ambient_dim(), face_sets);
  }
  std::map<std::pair<IndexSet, IndexSet>, IntMatrix> inc;
  const auto& tf = t.faces();
  for (std::size_t a = 0; a < tf.size(); ++a)
    for (std::size_t b = 0; b < tf.size(); ++b)
      if (a != b && !tf[a].gens.empty() && t.has_inclusion(a, b) &&
          std::includes(tf[b].gens.begin(), tf[b].gens.end(), tf[a].gens.begin(), tf[a].gens.end()))
        inc[{face_sets[a], face_sets[b]}] = t.inclusion(a, b);
  return ToricComplex::general(ids, faces, inc);
}

}  // namespace toric
