#pragma once

// ω-subdivisions of toric complexes, their classification, stellar
// subdivisions and the face-ring identities for regular subdivisions.

#include "toric/complex.hpp"
#include "toric/facering.hpp"
#include "toric/polyhedra.hpp"
#include "toric/polyring.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

/// ω on Gen(T), in generator order.
using Weights = std::vector<Rational>;

enum class Classification { partial, subdivision, triangulation };

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::partial: return "partial";
    case Classification::subdivision: return "subdivision";
    case Classification::triangulation: return "triangulation";
  }
  return "?";
}

struct SubdivisionCertificate {
  IndexSet face;     // generators of T
  IndexSet carrier;  // F' = ∩ of the faces of T containing F
  RatVec alpha;      // on Z^{d_{F'}}: α(T_F'(a)) <= ω(a), equality exactly on F
};

struct SubdivisionResult {
  ToricComplex complex;  // sd_ω T; generator ids are those of T
  std::vector<SubdivisionCertificate> certificates;
  Classification classification = Classification::partial;
  bool regular = false;  // a subdivision (hence a regular one)
  std::string witness;   // why the cover condition fails, if it does

  /// Faces of sd_ω T as sets of generators of T.
  std::set<IndexSet> faces_in(const ToricComplex& t) const {
    std::set<IndexSet> out;
    for (const auto& f : complex.faces()) out.insert(t.index_set(complex.id_set(f.gens)));
    return out;
  }
};

namespace detail {

inline std::vector<Rational> restrict_weights(const Weights& w, const IndexSet& f) {
  std::vector<Rational> out;
  for (auto i : f) out.push_back(w.at(i));
  return out;
}

inline IndexSet to_global(const IndexSet& local, const IndexSet& gens) {
  IndexSet out;
  for (auto i : local) out.push_back(gens[i]);
  return out;
}

/// Smallest face of T containing s, if any.
inline std::optional<std::size_t> carrier(const ToricComplex& t, const IndexSet& s) {
  auto containing = t.faces_containing(s);
  if (containing.empty()) return std::nullopt;
  IndexSet meet = t.faces()[containing[0]].gens;
  for (auto c : containing) {
    IndexSet next;
    const auto& g = t.faces()[c].gens;
    std::set_intersection(meet.begin(), meet.end(), g.begin(), g.end(), std::back_inserter(next));
    meet = std::move(next);
  }
  return t.face_index(meet);
}

}  // namespace detail

/// Cover condition of a partial subdivision, tested by facet pairing of the
/// full-dimensional cells inside each face of T.
inline Classification classify(const ToricComplex& t, SubdivisionResult& res) {
  auto cells_all = res.faces_in(t);
  res.witness.clear();
  for (std::size_t gi = 0; gi < t.face_count(); ++gi) {
    const Face& g = t.faces()[gi];
    if (g.gens.empty()) {
      if (!cells_all.count({})) {
        res.witness = "the empty face is not covered";
        return Classification::partial;
      }
      continue;
    }
    auto coords_of = [&](const IndexSet& s) {
      std::vector<IntVec> out;
      for (auto a : s) out.push_back(t.face_coords(gi, a));
      return out;
    };
    const std::size_t dim = rank(g.coords, g.dim);
    std::vector<IndexSet> cells;
    for (const auto& f : cells_all)
      if (std::includes(g.gens.begin(), g.gens.end(), f.begin(), f.end()) && !f.empty() &&
          rank(coords_of(f), g.dim) == dim)
        cells.push_back(f);
    if (cells.empty()) {
      res.witness = "no full-dimensional cell in " + t.face_name(g.gens);
      return Classification::partial;
    }
    std::vector<IntVec> outer;
    for (const auto& n : facets(t.config(gi)).normals)
      if (std::any_of(g.coords.begin(), g.coords.end(), [&](const IntVec& p) { return dot(n, p) != 0; }))
        outer.push_back(n);
    for (const auto& c : cells) {
      auto pts = coords_of(c);
      for (const auto& n : facets(VectorConfig(pts, g.dim)).normals) {
        IndexSet wall;
        bool genuine = false;
        for (std::size_t i = 0; i < c.size(); ++i)
          (dot(n, pts[i]) == 0 ? wall.push_back(c[i]) : void(genuine = true));
        if (!genuine) continue;
        auto wall_pts = coords_of(wall);
        bool boundary = std::any_of(outer.begin(), outer.end(), [&](const IntVec& m) {
          return std::all_of(wall_pts.begin(), wall_pts.end(), [&](const IntVec& p) { return dot(m, p) == 0; });
        });
        if (boundary) continue;
        bool paired = std::any_of(cells.begin(), cells.end(), [&](const IndexSet& other) {
          return other != c && std::includes(other.begin(), other.end(), wall.begin(), wall.end());
        });
        if (!paired) {
          res.witness = "wall " + t.face_name(wall) + " of cell " + t.face_name(c) + " inside " +
                        t.face_name(g.gens) + " has no neighbour";
          return Classification::partial;
        }
      }
    }
  }
  return properties(res.complex).simplicial ? Classification::triangulation : Classification::subdivision;
}

/// sd_ω T: faces are lower faces of the lifted carriers.
inline SubdivisionResult sd_omega(const ToricComplex& t, const Weights& w) {
  if (w.size() != t.generator_count()) throw std::invalid_argument("sd_omega: one weight per generator required");
  std::map<std::size_t, std::vector<LowerFaceCertificate>> lower;  // per face of T, local indices
  auto lower_of = [&](std::size_t fi) -> const std::vector<LowerFaceCertificate>& {
    auto it = lower.find(fi);
    if (it != lower.end()) return it->second;
    const Face& f = t.faces()[fi];
    std::vector<LowerFaceCertificate> certs;
    if (f.gens.empty()) {
      // only ∅, with α = 0 on Z^{d_∅}
      certs.push_back({RatVec(f.dim), {}});
    } else {
      certs = lower_face_certificates(t.config(fi), detail::restrict_weights(w, f.gens));
    }
    return lower.emplace(fi, std::move(certs)).first->second;
  };

  std::set<IndexSet> candidates;
  for (std::size_t fi = 0; fi < t.face_count(); ++fi)
    for (const auto& c : lower_of(fi)) candidates.insert(detail::to_global(c.face, t.faces()[fi].gens));

  SubdivisionResult res;
  std::map<IndexSet, std::size_t> carrier_of;
  for (const auto& f : candidates) {
    auto ci = detail::carrier(t, f);
    if (!ci) continue;
    for (const auto& c : lower_of(*ci))
      if (detail::to_global(c.face, t.faces()[*ci].gens) == f) {
        res.certificates.push_back({f, t.faces()[*ci].gens, c.alpha});
        carrier_of[f] = *ci;
        break;
      }
  }

  std::set<std::size_t> used;
  for (const auto& c : res.certificates) used.insert(c.face.begin(), c.face.end());
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
    for (const auto& c : res.certificates) faces.push_back(reindex(c.face));
    res.complex = ToricComplex::embedded(ids, coords, t.ambient_dim(), faces);
  } else {
    std::vector<Face> faces;
    for (const auto& c : res.certificates) {
      auto ci = carrier_of.at(c.face);
      Face f{reindex(c.face), t.faces()[ci].dim, {}};
      for (auto a : c.face) f.coords.push_back(t.face_coords(ci, a));
      faces.push_back(std::move(f));
    }
    std::map<std::pair<IndexSet, IndexSet>, IntMatrix> inc;
    for (const auto& a : res.certificates)
      for (const auto& b : res.certificates) {
        if (a.face.empty() || a.face == b.face) continue;
        if (!std::includes(b.face.begin(), b.face.end(), a.face.begin(), a.face.end())) continue;
        inc[{reindex(a.face), reindex(b.face)}] = t.inclusion(carrier_of.at(a.face), carrier_of.at(b.face));
      }
    res.complex = ToricComplex::general(ids, faces, inc);
  }
  res.classification = classify(t, res);
  res.regular = res.classification != Classification::partial;
  return res;
}

/// Re-checks every supporting form exactly.
inline bool verify_certificates(const ToricComplex& t, const Weights& w, const SubdivisionResult& res) {
  for (const auto& c : res.certificates) {
    auto ci = t.face_index(c.carrier);
    if (!ci) return false;
    for (auto a : c.carrier) {
      Rational v = dot(std::span<const Rational>(c.alpha), std::span<const Integer>(t.face_coords(*ci, a)));
      bool on = std::binary_search(c.face.begin(), c.face.end(), a);
      if (v > w[a] || (v == w[a]) != on) return false;
    }
  }
  return true;
}

// --- stellar subdivisions ---------------------------------------------------------

/// Faces of T(F, a): faces H of cone(F) missing a, and cone(H ∪ {a}) ∩ F.
inline std::set<IndexSet> stellar_faces(const VectorConfig& cfg, std::size_t a) {
  if (a >= cfg.size()) throw std::invalid_argument("stellar: point is not in the configuration");
  std::set<IndexSet> out;
  for (const auto& h : face_poset(cfg)) {
    if (std::binary_search(h.begin(), h.end(), a)) continue;
    out.insert(h);
    std::vector<IntVec> gens;
    for (auto i : h) gens.push_back(cfg[i]);
    gens.push_back(cfg[a]);
    VectorConfig cone(gens, cfg.ambient_dim());
    IndexSet g;
    for (std::size_t i = 0; i < cfg.size(); ++i)
      if (in_cone(cone, cfg[i]).member) g.push_back(i);
    out.insert(g);
  }
  return out;
}

inline ToricComplex stellar_config(const VectorConfig& cfg, std::size_t a) {
  auto faces = stellar_faces(cfg, a);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < cfg.size(); ++i) ids.push_back("x" + std::to_string(i));
  return ToricComplex::embedded(ids, cfg.points(), cfg.ambient_dim(), {faces.begin(), faces.end()});
}

/// Stellar subdivision of an embedded complex at generator a.
inline ToricComplex stellar_complex(const ToricComplex& t, std::size_t a) {
  if (!t.is_embedded()) throw std::invalid_argument("stellar: complex must be embedded");
  std::set<IndexSet> faces;
  for (std::size_t fi = 0; fi < t.face_count(); ++fi) {
    const auto& f = t.faces()[fi].gens;
    auto pos = std::lower_bound(f.begin(), f.end(), a);
    if (pos == f.end() || *pos != a) {
      faces.insert(f);
      continue;
    }
    for (const auto& local : stellar_faces(t.config(fi), static_cast<std::size_t>(pos - f.begin())))
      faces.insert(detail::to_global(local, f));
  }
  std::vector<IntVec> coords;
  for (std::size_t i = 0; i < t.generator_count(); ++i) coords.push_back(t.coords(i));
  return ToricComplex::embedded(t.ids(), coords, t.ambient_dim(), {faces.begin(), faces.end()});
}

// --- face-ring identities -----------------------------------------------------------

namespace detail {

/// Positive grading making I_T homogeneous, when T is N-graded.
inline std::optional<std::vector<long>> natural_grading(const ToricComplex& t) {
  if (!properties(t).n_graded) return std::nullopt;
  std::vector<long> g(t.generator_count());
  for (std::size_t fi = 0; fi < t.face_count(); ++fi)
    for (std::size_t i = 0; i < t.faces()[fi].gens.size(); ++i)
      g[t.faces()[fi].gens[i]] = t.faces()[fi].coords[i].back().get_si();
  return g;
}

}  // namespace detail

inline std::vector<Polynomial> initial_ideal_of(const ToricComplex& t, const Weights& w) {
  auto gens = face_ring_ideal(t).generators();
  return initial_ideal(w, gens, detail::natural_grading(t));
}

/// I_{sd_ω T} + (x_a : a ∈ Gen(T) ∖ Gen(sd_ω T)) inside K[Gen(T)].
inline std::vector<Polynomial> subdivision_ideal(const ToricComplex& t, const SubdivisionResult& res) {
  const std::size_t n = t.generator_count();
  auto out = remap_all(face_ring_ideal(res.complex).generators(), n, id_map(res.complex, t));
  for (std::size_t a = 0; a < n; ++a)
    if (!res.complex.index_of(t.id(a))) out.push_back(Polynomial::variable(n, a));
  return normalized(std::move(out));
}

struct MainTheoremReport {
  bool ok = false;
  Classification classification = Classification::partial;
  std::vector<Polynomial> initial;      // ini_ω(I_T)
  std::vector<Polynomial> subdivision;  // I_sd + killed variables
  std::vector<std::size_t> dropped;     // Gen(T) ∖ Gen(sd)
  std::string witness;
};

/// rad(ini_ω(I_T)) = I_{sd_ω T} + (x_a : a dropped), for regular subdivisions.
inline MainTheoremReport verify_main_theorem(const ToricComplex& t, const Weights& w) {
  auto res = sd_omega(t, w);
  if (!res.regular)
    throw std::invalid_argument("verify_main_theorem: sd_omega is not a subdivision (" + res.witness + ")");
  const std::size_t n = t.generator_count();
  MainTheoremReport rep;
  rep.classification = res.classification;
  rep.initial = initial_ideal_of(t, w);
  rep.subdivision = subdivision_ideal(t, res);
  for (std::size_t a = 0; a < n; ++a)
    if (!res.complex.index_of(t.id(a))) rep.dropped.push_back(a);
  rep.ok = true;
  // plain membership settles most generators without the Rabinowitsch trick
  auto gb_ini = buchberger(rep.initial, MonomialOrder::grevlex(n));
  for (const auto& f : rep.subdivision)
    if (!gb_ini.contains(f) && !radical_membership(f, rep.initial)) {
      rep.ok = false;
      rep.witness = to_string(f, t.ids()) + " is not in rad(ini)";
      return rep;
    }
  auto gb = buchberger(rep.subdivision, MonomialOrder::grevlex(n));
  for (const auto& f : rep.initial)
    if (!gb.contains(f)) {
      rep.ok = false;
      rep.witness = to_string(f, t.ids()) + " is in ini but not in I_sd";
      return rep;
    }
  return rep;
}

struct TriangulationReport {
  bool ok = false;
  bool square_free_monomial = false;  // rad(ini) is generated by square-free monomials
  bool triangulation = false;
  bool complexes_agree = true;  // induced simplicial complex = Π_sd, when monomial
  std::string witness;
};

/// rad(ini) square-free monomial ⇔ sd_ω T a regular triangulation.
inline TriangulationReport verify_triangulation_cor(const ToricComplex& t, const Weights& w) {
  auto main = verify_main_theorem(t, w);
  TriangulationReport rep;
  if (!main.ok) {
    rep.witness = main.witness;
    return rep;
  }
  const std::size_t n = t.generator_count();
  rep.triangulation = main.classification == Classification::triangulation;
  // rad(ini) = I_sd + killed variables; monomial iff its reduced basis is
  auto gb = buchberger(main.subdivision, MonomialOrder::grevlex(n)).generators();
  rep.square_free_monomial = std::all_of(gb.begin(), gb.end(), [](const Polynomial& f) {
    return f.size() == 1 && square_free(f.terms().begin()->first);
  });
  if (rep.square_free_monomial) {
    std::set<IndexSet> gens;
    for (const auto& f : gb) gens.insert(support(f.terms().begin()->first));
    // minimal nonfaces of sd_ω T inside Gen(T)
    auto res = sd_omega(t, w);
    std::vector<Mask> covers;
    for (const auto& f : res.faces_in(t)) covers.push_back(detail::mask_of(f));
    auto nonfaces = detail::minimal_uncovered(n, covers);
    rep.complexes_agree = gens == std::set<IndexSet>(nonfaces.begin(), nonfaces.end());
    if (!rep.complexes_agree) rep.witness = "simplicial complex of rad(ini) differs from sd";
  }
  rep.ok = rep.square_free_monomial == rep.triangulation && rep.complexes_agree;
  if (!rep.ok && rep.witness.empty())
    rep.witness = std::string("square-free monomial: ") + (rep.square_free_monomial ? "yes" : "no") +
                  ", triangulation: " + (rep.triangulation ? "yes" : "no");
  return rep;
}

struct UniquenessReport {
  bool ok = false;
  bool same_subdivision = false;
  bool same_radical = false;
};

/// sd_ω T = sd_ω' T ⇔ rad(ini_ω I_T) = rad(ini_ω' I_T).
inline UniquenessReport verify_uniqueness_cor(const ToricComplex& t, const Weights& w1, const Weights& w2) {
  auto a = sd_omega(t, w1), b = sd_omega(t, w2);
  if (!a.regular || !b.regular) throw std::invalid_argument("verify_uniqueness_cor: both must be subdivisions");
  UniquenessReport rep;
  rep.same_subdivision = a.faces_in(t) == b.faces_in(t);
  auto i1 = initial_ideal_of(t, w1), i2 = initial_ideal_of(t, w2);
  rep.same_radical =
      std::all_of(i1.begin(), i1.end(), [&](const Polynomial& f) { return radical_membership(f, i2); }) &&
      std::all_of(i2.begin(), i2.end(), [&](const Polynomial& f) { return radical_membership(f, i1); });
  rep.ok = rep.same_subdivision == rep.same_radical;
  return rep;
}

struct RadicalReport {
  bool generators_equal = false;  // Gen(sd_ω T) = Gen(T)
  Verdict integrally_closed = Verdict::yes;
  std::string closure_witness;
  bool radical = false;  // ini_ω(I_T) is radical
  bool ok = false;       // hypotheses ⇒ radical
};

/// Hypotheses of the radicality criterion and its conclusion.
inline RadicalReport check_radical_hypotheses(const ToricComplex& t, const Weights& w,
                                              std::optional<Integer> bound = std::nullopt) {
  auto res = sd_omega(t, w);
  RadicalReport rep;
  rep.generators_equal = res.complex.generator_count() == t.generator_count();
  std::set<std::pair<std::vector<IntVec>, std::vector<IntVec>>> seen;
  for (const auto& f : res.faces_in(t)) {
    if (f.empty() || rep.integrally_closed == Verdict::no) continue;
    for (auto gi : t.faces_containing(f)) {
      std::vector<IntVec> sub;
      for (auto a : f) sub.push_back(t.face_coords(gi, a));
      const auto& sup = t.faces()[gi].coords;
      if (!seen.insert({sub, sup}).second) continue;
      auto r = integrally_closed(VectorConfig(sub, t.faces()[gi].dim), VectorConfig(sup, t.faces()[gi].dim), bound);
      if (r.verdict == Verdict::no || (r.verdict == Verdict::inconclusive && rep.integrally_closed == Verdict::yes)) {
        rep.integrally_closed = r.verdict;
        rep.closure_witness = t.face_name(f) + " in " + t.face_name(t.faces()[gi].gens) + ": " + r.reason;
      }
      if (r.verdict == Verdict::no) break;
    }
  }
  // with rad(ini) = I_sd + killed variables established, ini is radical iff it contains them
  auto main = verify_main_theorem(t, w);
  if (!main.ok) throw std::logic_error("check_radical_hypotheses: " + main.witness);
  rep.radical = ideal_contains(main.initial, main.subdivision, t.generator_count());
  bool hypotheses = rep.generators_equal && rep.integrally_closed == Verdict::yes;
  rep.ok = !hypotheses || rep.radical;
  return rep;
}

}  // namespace toric
