#pragma once

// Edgewise subdivision esd_r of simplicial complexes on V = {1..d+1}, the
// Knudsen–Mumford weight, and sorting Gröbner bases over the tuple ring K[W].

#include <map>
#include <optional>

#include "toric/subdivision.hpp"

namespace toric {

using Tuple = std::vector<int>;  // weakly increasing r-tuple over V

/// ι_V extended linearly: coordinate j is u(1) + ... + u(j).
inline IntVec iota(const std::vector<int>& u) {
  IntVec y(u.size());
  long s = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    s += u[j];
    y[j] = s;
  }
  return y;
}

/// Multiplicities: ψ(v)(i) = #{l : v_l = i}.
inline std::vector<int> psi(const Tuple& v, int nverts) {
  std::vector<int> u(static_cast<std::size_t>(nverts));
  for (int x : v) {
    if (x < 1 || x > nverts) throw std::invalid_argument("psi: entry out of range");
    ++u[static_cast<std::size_t>(x - 1)];
  }
  return u;
}

inline Tuple psi_inverse(const std::vector<int>& u) {
  Tuple v;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (int k = 0; k < u[i]; ++k) v.push_back(static_cast<int>(i) + 1);
  return v;
}

/// W in lexicographic order; the k-th element also numbers vertex k+1 of esd.
inline std::vector<Tuple> w_tuples(int nverts, int r) {
  std::vector<Tuple> out;
  Tuple v(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, std::size_t l, int lo) -> void {
    if (l == v.size()) {
      out.push_back(v);
      return;
    }
    for (int x = lo; x <= nverts; ++x) {
      v[l] = x;
      self(self, l + 1, x);
    }
  };
  rec(rec, 0, 1);
  return out;
}

inline std::string tuple_name(const Tuple& v) {
  std::string s = "x(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::vector<std::string> w_names(int nverts, int r) {
  std::vector<std::string> out;
  for (const auto& v : w_tuples(nverts, r)) out.push_back(tuple_name(v));
  return out;
}

// --- esd_r ---------------------------------------------------------------------

struct Edgewise {
  int r = 1;
  std::vector<std::vector<int>> vertices;  // rV; vertex k+1 of `complex` is vertices[k]
  SimplicialComplex complex;

  std::optional<int> vertex_of(const std::vector<int>& u) const {
    auto it = std::find(vertices.begin(), vertices.end(), u);
    if (it == vertices.end()) return std::nullopt;
    return static_cast<int>(it - vertices.begin()) + 1;
  }
};

namespace detail {

inline bool unit_step(const IntVec& a, const IntVec& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    Integer d = a[j] - b[j];
    if (d < 0 || d > 1) return false;
  }
  return true;
}

inline bool esd_adjacent(const IntVec& a, const IntVec& b) { return unit_step(a, b) || unit_step(b, a); }

inline Simplex support_of(const std::vector<int>& u) {
  Simplex s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

inline Simplex merge(const Simplex& a, const Simplex& b) {
  Simplex s;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s));
  return s;
}

}  // namespace detail

/// Faces: sets of pairwise ι-comparable (0/1 steps) elements of rV whose
/// supports together form a face of Δ.
inline Edgewise esd(const SimplicialComplex& delta, int r) {
  if (r < 1) throw std::invalid_argument("esd: r must be at least 1");
  const int n = delta.vertex_count();
  Edgewise e;
  e.r = r;
  std::vector<IntVec> img;
  for (const auto& v : w_tuples(n, r)) {
    e.vertices.push_back(psi(v, n));
    img.push_back(iota(e.vertices.back()));
  }
  const std::size_t m = e.vertices.size();
  std::vector<Simplex> faces{Simplex{}};
  Simplex cur;
  auto grow = [&](auto&& self, std::size_t from, const Simplex& supp) -> void {
    for (std::size_t k = from; k < m; ++k) {
      auto s = detail::merge(supp, detail::support_of(e.vertices[k]));
      if (!delta.contains(s)) continue;
      bool ok = true;
      for (int c : cur)
        if (!detail::esd_adjacent(img[static_cast<std::size_t>(c - 1)], img[k])) ok = false;
      if (!ok) continue;
      cur.push_back(static_cast<int>(k) + 1);
      faces.push_back(cur);
      self(self, k + 1, s);
      cur.pop_back();
    }
  };
  grow(grow, 0, Simplex{});
  e.complex = SimplicialComplex::from_faces(static_cast<int>(m), faces);
  return e;
}

/// Embedded toric complex of esd_r(Δ) with generators ι(u) ∈ Z^{d+1}.
inline ToricComplex esd_toric(const SimplicialComplex& delta, int r) {
  auto e = esd(delta, r);
  auto used = e.complex.used_vertices();
  std::map<int, std::size_t> index;
  std::vector<std::string> ids;
  std::vector<IntVec> coords;
  for (int v : used) {
    index[v] = ids.size();
    const auto& u = e.vertices[static_cast<std::size_t>(v - 1)];
    ids.push_back(multiple_id(u));
    coords.push_back(iota(u));
  }
  std::vector<IndexSet> faces;
  for (const auto& f : e.complex.faces()) {
    IndexSet s;
    for (int v : f) s.push_back(index.at(v));
    faces.push_back(s);
  }
  return ToricComplex::embedded(ids, coords, static_cast<std::size_t>(delta.vertex_count()), faces);
}

/// A maximal face of esd_r(Δ^d) as m + Δ_σ: sorted images step by e_σ(1), e_σ(2), ...
struct FacetShape {
  IntVec m;
  std::vector<int> sigma;  // permutation of 1..d
};

inline std::optional<FacetShape> recover_shape(std::vector<IntVec> pts) {
  if (pts.empty()) return std::nullopt;
  const std::size_t n = pts[0].size();
  auto sum = [](const IntVec& x) {
    Integer s = 0;
    for (const auto& c : x) s += c;
    return s;
  };
  std::sort(pts.begin(), pts.end(), [&](const IntVec& a, const IntVec& b) { return sum(a) < sum(b); });
  FacetShape shape{pts[0], {}};
  std::vector<bool> seen(n);
  for (std::size_t l = 1; l < pts.size(); ++l) {
    std::optional<std::size_t> step;
    for (std::size_t j = 0; j < n; ++j) {
      Integer d = pts[l][j] - pts[l - 1][j];
      if (d == 0) continue;
      if (d != 1 || step) return std::nullopt;
      step = j;
    }
    if (!step || *step + 1 == n || seen[*step]) return std::nullopt;
    seen[*step] = true;
    shape.sigma.push_back(static_cast<int>(*step) + 1);
  }
  if (shape.sigma.size() + 1 != n) return std::nullopt;
  return shape;
}

// --- Knudsen–Mumford weight -------------------------------------------------------

/// α^{ij}_k(y) for 1 ≤ i < j ≤ d+1 = y.size(), 0 < k < r.
inline Rational alpha(std::size_t i, std::size_t j, int k, int r, std::span<const Rational> y) {
  const std::size_t n = y.size();
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("alpha: need 1 <= i < j <= d+1");
  if (!(0 < k && k < r)) throw std::invalid_argument("alpha: need 0 < k < r");
  if (j < n) return r * (y[i - 1] - y[j - 1]) + k * y[n - 1];
  return r * y[i - 1] - k * y[n - 1];
}

/// f(y) = Σ |α^{ij}_k(y)|, evaluated on y = ι(u).
inline Rational km_value(std::span<const Integer> y, int r) {
  auto q = to_rational(y);
  Rational s = 0;
  for (std::size_t j = 2; j <= q.size(); ++j)
    for (std::size_t i = 1; i < j; ++i)
      for (int k = 1; k < r; ++k) s += abs(alpha(i, j, k, r, q));
  return s;
}

/// ω on the generators of an embedded complex living in ι(rV).
inline Weights km_weight(const ToricComplex& t, int r) {
  if (!t.is_embedded()) throw std::invalid_argument("km_weight: complex must be embedded");
  Weights w;
  for (std::size_t a = 0; a < t.generator_count(); ++a) w.push_back(km_value(t.coords(a), r));
  return w;
}

struct EsdRegularReport {
  bool ok = false;
  bool equal = false;          // Π_{sd_ω rT(Δ)} = esd_r(Δ)
  bool triangulation = false;  // classified as a (regular) triangulation
  std::size_t faces = 0;
  std::string witness;
};

namespace detail {

inline std::set<std::set<IntVec>> coordinate_faces(const ToricComplex& t, const std::set<IndexSet>& faces) {
  std::set<std::set<IntVec>> out;
  for (const auto& f : faces) {
    std::set<IntVec> s;
    for (auto a : f) s.insert(t.coords(a));
    out.insert(s);
  }
  return out;
}

inline std::string show_points(const std::set<IntVec>& s) {
  std::string out = "{";
  for (const auto& p : s) {
    out += out.size() > 1 ? " (" : "(";
    for (std::size_t j = 0; j < p.size(); ++j) out += (j ? "," : "") + p[j].get_str();
    out += ")";
  }
  return out + "}";
}

}  // namespace detail

/// sd_ω rT(Δ) against esd_r(T(Δ)), faces compared through their ι-images.
inline EsdRegularReport check_esd_regular(const SimplicialComplex& delta, int r) {
  auto rt = multiple(from_simplicial(delta), r);
  auto res = sd_omega(rt, km_weight(rt, r));
  auto e = esd_toric(delta, r);
  auto lhs = detail::coordinate_faces(rt, res.faces_in(rt));
  auto rhs = detail::coordinate_faces(e, e.face_sets());
  EsdRegularReport rep;
  rep.equal = lhs == rhs;
  rep.triangulation = res.classification == Classification::triangulation;
  rep.faces = lhs.size();
  if (!rep.equal) {
    for (const auto& f : lhs)
      if (!rhs.count(f)) {
        rep.witness = "sd face " + detail::show_points(f) + " is not in esd";
        break;
      }
    for (const auto& f : rhs)
      if (rep.witness.empty() && !lhs.count(f)) rep.witness = "esd face " + detail::show_points(f) + " is not in sd";
  } else if (!rep.triangulation) {
    rep.witness = "sd_omega is " + to_string(res.classification) + ": " + res.witness;
  }
  rep.ok = rep.equal && rep.triangulation;
  return rep;
}

// --- sorting ------------------------------------------------------------------

/// Merge all entries and refill rows column by column.
inline std::vector<Tuple> sort_monomial(const std::vector<Tuple>& rows) {
  if (rows.empty()) return rows;
  const std::size_t s = rows.size(), r = rows[0].size();
  std::vector<int> all;
  for (const auto& v : rows) {
    if (v.size() != r) throw std::invalid_argument("sort_monomial: rows of different length");
    all.insert(all.end(), v.begin(), v.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<Tuple> out(s, Tuple(r));
  for (std::size_t p = 0; p < all.size(); ++p) out[p % s][p / s] = all[p];
  return out;
}

inline bool is_sorted_monomial(std::vector<Tuple> rows) {
  std::sort(rows.begin(), rows.end());
  auto sorted = sort_monomial(rows);
  std::sort(sorted.begin(), sorted.end());
  return rows == sorted;
}

namespace detail {

inline Monomial w_monomial(const std::vector<Tuple>& rows, const std::vector<Tuple>& w) {
  Monomial m(w.size());
  for (const auto& v : rows) {
    auto it = std::lower_bound(w.begin(), w.end(), v);
    if (it == w.end() || *it != v) throw std::invalid_argument("w_monomial: not an element of W");
    ++m[static_cast<std::size_t>(it - w.begin())];
  }
  return m;
}

/// ω' = ω∘ψ on W.
inline Weights w_weights(const std::vector<Tuple>& w, int nverts, int r) {
  Weights out;
  for (const auto& v : w) out.push_back(km_value(iota(psi(v, nverts)), r));
  return out;
}

/// I'_{rT(Δ)} = ker(K[W] → K[Δ]^{(r)}), from the face ring of rT(Δ) moved along ψ.
inline std::vector<Polynomial> tuple_ring_ideal(const SimplicialComplex& delta, int r, const std::vector<Tuple>& w) {
  const int nv = delta.vertex_count();
  auto rt = multiple(from_simplicial(delta), r);
  std::vector<long> map(rt.generator_count(), -1);
  std::vector<bool> hit(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto y = iota(psi(w[k], nv));
    for (std::size_t a = 0; a < rt.generator_count(); ++a)
      if (rt.coords(a) == y) {
        map[a] = static_cast<long>(k);
        hit[k] = true;
      }
  }
  auto out = remap_all(face_ring_ideal(rt).generators(), w.size(), map);
  // tuples whose support is not a face of Δ vanish in K[Δ]
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!hit[k]) out.push_back(Polynomial::variable(w.size(), k));
  return normalized(std::move(out));
}

/// Stanley–Reisner ideal of a complex on {1..n}, unused vertices included as variables.
inline std::vector<Polynomial> stanley_reisner(const SimplicialComplex& c) {
  const auto n = static_cast<std::size_t>(c.vertex_count());
  std::vector<Polynomial> out;
  for (const auto& f : c.minimal_nonfaces()) {
    Monomial m(n);
    for (int v : f) m[static_cast<std::size_t>(v - 1)] = 1;
    out.push_back(Polynomial::term(m, 1));
  }
  for (int v = 1; v <= c.vertex_count(); ++v)
    if (!c.contains({v})) out.push_back(Polynomial::variable(n, static_cast<std::size_t>(v - 1)));
  return normalized(std::move(out));
}

}  // namespace detail

struct SortingReport {
  bool ok = false;
  std::vector<std::string> names;          // variables of K[W]
  std::vector<Polynomial> binomials;       // unsorted quadratic minus its sort
  std::vector<Polynomial> monomials;       // sorted square-free nonface monomials (minimal ones)
  std::vector<Polynomial> initial;         // ini_ω'(I') by Buchberger
  bool binomials_in_ideal = false;
  bool initial_terms_unsorted = false;     // in_ω'(x^u − sort x^u) = x^u
  bool initials_generate = false;          // ideal equality with ini_ω'(I')
  bool matches_esd = true;                 // ini_ω'(I') = Stanley–Reisner ideal of esd_r(Δ)
  std::string witness;
};

namespace detail {

inline SortingReport sorting_check(const SimplicialComplex& delta, int r) {
  if (r < 1) throw std::invalid_argument("sorting: r must be at least 1");
  const int nv = delta.vertex_count();
  auto w = w_tuples(nv, r);
  const std::size_t n = w.size();
  SortingReport rep;
  rep.names = w_names(nv, r);
  auto ideal = tuple_ring_ideal(delta, r, w);
  auto omega = w_weights(w, nv, r);
  rep.initial = initial_ideal(omega, ideal);

  std::vector<Polynomial> expected;
  rep.initial_terms_unsorted = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<Tuple> rows{w[a], w[b]};
      if (is_sorted_monomial(rows)) continue;
      auto u = w_monomial(rows, w), v = w_monomial(sort_monomial(rows), w);
      auto g = Polynomial::binomial(u, v);
      rep.binomials.push_back(g);
      expected.push_back(Polynomial::term(u, 1));
      if (initial_poly(omega, g) != Polynomial::term(u, 1)) {
        rep.initial_terms_unsorted = false;
        if (rep.witness.empty()) rep.witness = "initial form of " + to_string(g, rep.names) + " is not its first term";
      }
    }
  // sorted square-free monomials: faces of esd_r(Δ^d); keep the minimal ones outside esd_r(Δ)
  auto full = esd(SimplicialComplex::simplex(nv), r);
  auto part = esd(delta, r);
  for (const auto& f : full.complex.faces()) {
    if (part.complex.contains(f)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < f.size() && minimal; ++i) {
      Simplex g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      if (!part.complex.contains(g)) minimal = false;
    }
    if (!minimal) continue;
    Monomial m(n);
    for (int v : f) m[static_cast<std::size_t>(v - 1)] = 1;
    rep.monomials.push_back(Polynomial::term(m, 1));
    expected.push_back(rep.monomials.back());
  }

  auto gb = buchberger(ideal, MonomialOrder::grevlex(n));
  rep.binomials_in_ideal = std::all_of(rep.binomials.begin(), rep.binomials.end(),
                                       [&](const Polynomial& g) { return gb.contains(g); }) &&
                           std::all_of(rep.monomials.begin(), rep.monomials.end(),
                                       [&](const Polynomial& g) { return gb.contains(g); });
  if (!rep.binomials_in_ideal && rep.witness.empty()) rep.witness = "a generator is not in I'";
  rep.initials_generate = ideals_equal(rep.initial, expected, n);
  if (!rep.initials_generate && rep.witness.empty()) rep.witness = "initials do not generate ini_omega'(I')";
  rep.matches_esd = ideals_equal(rep.initial, stanley_reisner(part.complex), n);
  if (!rep.matches_esd && rep.witness.empty()) rep.witness = "ini_omega'(I') differs from the Stanley-Reisner ideal of esd";
  rep.ok = rep.binomials_in_ideal && rep.initial_terms_unsorted && rep.initials_generate && rep.matches_esd;
  return rep;
}

}  // namespace detail

/// 𝒢 for the full simplex Δ^d: initials are exactly the unsorted quadratics.
inline SortingReport sorting_gb_simplex(int d, int r) { return detail::sorting_check(SimplicialComplex::simplex(d + 1), r); }

/// 𝒢' for arbitrary Δ: 𝒢 plus sorted square-free monomials on nonfaces of esd_r(Δ).
inline SortingReport sorting_gb_general(const SimplicialComplex& delta, int r) { return detail::sorting_check(delta, r); }

// --- Hilbert functions and the Koszul witness ---------------------------------------

struct HilbertComparison {
  bool ok = false;
  std::vector<long> esd;        // H(K[esd_r(Δ)], n)
  std::vector<long> veronese;   // H(K[Δ], rn)
};

inline HilbertComparison hilbert_compare(const SimplicialComplex& delta, int r, long nmax) {
  auto e = esd(delta, r);
  HilbertComparison cmp;
  auto lhs = detail::stanley_reisner(e.complex);
  cmp.esd = hilbert_series_prefix(lhs, std::vector<long>(e.vertices.size(), 1), nmax);
  auto rhs = detail::stanley_reisner(delta);
  auto all = hilbert_series_prefix(rhs, std::vector<long>(static_cast<std::size_t>(delta.vertex_count()), 1), r * nmax);
  for (long k = 0; k <= nmax; ++k) cmp.veronese.push_back(all[static_cast<std::size_t>(r * k)]);
  cmp.ok = cmp.esd == cmp.veronese;
  return cmp;
}

struct KoszulReport {
  bool ok = false;
  bool nonface = false;     // the witness set is not a face
  bool proper_faces = false;  // every proper subset is a face
  std::size_t degree = 0;   // degree of the minimal monomial generator
  std::vector<std::vector<int>> witness;  // elements of rV
};

/// For Δ on {1..4}: the triple ψ(1,4,..,4), ψ(2,4,..,4), ψ(3,4,..,4) when r ≥ 2,
/// or {1,2,3,4} itself when r = 1, as a minimal nonface of esd_r(Δ).
inline KoszulReport koszul_counterexample(const SimplicialComplex& delta, int r) {
  if (delta.vertex_count() != 4) throw std::invalid_argument("koszul_counterexample: needs four vertices");
  auto e = esd(delta, r);
  KoszulReport rep;
  if (r == 1) {
    for (int i = 1; i <= 4; ++i) rep.witness.push_back(psi({i}, 4));
  } else {
    for (int i = 1; i <= 3; ++i) {
      Tuple v(static_cast<std::size_t>(r), 4);
      v[0] = i;
      rep.witness.push_back(psi(v, 4));
    }
  }
  Simplex s;
  for (const auto& u : rep.witness) s.push_back(*e.vertex_of(u));
  rep.degree = s.size();
  rep.nonface = !e.complex.contains(s);
  rep.proper_faces = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex g = s;
    g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
    if (!e.complex.contains(g)) rep.proper_faces = false;
  }
  rep.ok = rep.nonface && rep.proper_faces;
  return rep;
}

}  // namespace toric
