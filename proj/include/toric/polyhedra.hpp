#pragma once

// Exact polyhedral cone computations for finite integer vector
// configurations: dual cones by double description, facets, faces, lower
// faces of a lifted configuration, cone membership and integral closure.

#include "toric/exactlin.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Sorted list of point indices.
using IndexSet = std::vector<std::size_t>;

/// Ordered list of distinct nonzero integer points in Z^d.
class VectorConfig {
 public:
  VectorConfig() = default;
  VectorConfig(std::vector<IntVec> points, std::size_t ambient_dim)
      : points_(std::move(points)), dim_(ambient_dim) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].size() != dim_)
        throw std::invalid_argument("VectorConfig: point " + std::to_string(i) + " has wrong dimension");
      if (is_zero(points_[i]))
        throw std::invalid_argument("VectorConfig: point " + std::to_string(i) + " is zero");
      for (std::size_t j = 0; j < i; ++j)
        if (points_[j] == points_[i])
          throw std::invalid_argument("VectorConfig: points " + std::to_string(j) + " and " +
                                      std::to_string(i) + " coincide");
    }
  }

  static VectorConfig from_ints(const std::vector<std::vector<long>>& pts, std::size_t dim) {
    std::vector<IntVec> v;
    for (const auto& p : pts) {
      IntVec q;
      for (long x : p) q.emplace_back(x);
      v.push_back(std::move(q));
    }
    return VectorConfig(std::move(v), dim);
  }

  std::size_t size() const { return points_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVec>& points() const { return points_; }
  const IntVec& operator[](std::size_t i) const { return points_[i]; }

  VectorConfig subset(const IndexSet& idx) const {
    std::vector<IntVec> pts;
    for (auto i : idx) pts.push_back(points_.at(i));
    return VectorConfig(std::move(pts), dim_);
  }

 private:
  std::vector<IntVec> points_;
  std::size_t dim_ = 0;
};

/// Facet inequalities α·x <= 0 of cone(points); equations appear as ±pairs.
struct FacetDescription {
  std::vector<IntVec> normals;
};

/// α·p <= 0 for every point, with equality exactly on `zero_set`.
struct FaceCertificate {
  IntVec alpha;
  IndexSet zero_set;
};

/// α(p) <= w(p) for every point, with equality exactly on `face`.
struct LowerFaceCertificate {
  RatVec alpha;
  IndexSet face;
};

/// Generators of a polyhedral cone: lineality basis plus extreme rays
/// (rays are determined modulo the lineality space).
struct ConeGenerators {
  std::vector<IntVec> lineality;
  std::vector<IntVec> rays;
};

namespace detail {

inline IndexSet zero_set(std::span<const IntVec> pts, std::span<const Integer> alpha) {
  IndexSet z;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (dot(pts[i], alpha) == 0) z.push_back(i);
  return z;
}

inline std::size_t active_rank(std::span<const IntVec> constraints, const std::vector<std::size_t>& active,
                               std::size_t dim) {
  if (active.empty()) return 0;
  std::vector<IntVec> rows;
  for (auto i : active) rows.push_back(constraints[i]);
  return rank(rows, dim);
}

inline std::vector<std::size_t> active_set(std::span<const IntVec> constraints, std::size_t upto,
                                           const IntVec& r) {
  std::vector<std::size_t> a;
  for (std::size_t i = 0; i < upto; ++i)
    if (dot(constraints[i], r) == 0) a.push_back(i);
  return a;
}

}  // namespace detail

/// Double description of {x ∈ R^dim : a·x <= 0 for all constraint rows a}.
inline ConeGenerators double_description(std::span<const IntVec> constraints, std::size_t dim) {
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVec e(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<IntVec> rays;

  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const IntVec& a = constraints[k];
    if (a.size() != dim) throw std::invalid_argument("double_description: constraint dimension mismatch");
    if (is_zero(a)) continue;

    std::optional<std::size_t> piv;
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        piv = i;
        break;
      }

    if (piv) {
      // a cuts the lineality space: split off one direction as a new ray
      IntVec l0 = lin[*piv];
      Integer al0 = dot(a, l0);
      if (al0 > 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      auto project = [&](const IntVec& v) {
        Integer av = dot(a, v);
        IntVec out(dim);
        // v - (av/al0) l0, scaled by |al0| to stay integral
        for (std::size_t j = 0; j < dim; ++j) out[j] = (-al0) * v[j] + av * l0[j];
        return primitive(std::move(out));
      };
      std::vector<IntVec> new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i)
        if (i != *piv) {
          auto v = project(lin[i]);
          if (!is_zero(v)) new_lin.push_back(std::move(v));
        }
      std::vector<IntVec> new_rays;
      for (const auto& r : rays) {
        auto v = project(r);
        if (!is_zero(v)) new_rays.push_back(std::move(v));
      }
      new_rays.push_back(primitive(l0));
      lin = std::move(new_lin);
      rays = std::move(new_rays);
      continue;
    }

    std::vector<IntVec> pos, neg, zero;
    for (auto& r : rays) {
      Integer s = dot(a, r);
      if (s > 0)
        pos.push_back(r);
      else if (s < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }
    std::vector<IntVec> next = neg;
    next.insert(next.end(), zero.begin(), zero.end());
    const std::size_t pointed_dim = dim - lin.size();
    for (const auto& p : pos) {
      auto ap = detail::active_set(constraints, k, p);
      for (const auto& n : neg) {
        auto an = detail::active_set(constraints, k, n);
        std::vector<std::size_t> common;
        std::set_intersection(ap.begin(), ap.end(), an.begin(), an.end(), std::back_inserter(common));
        if (pointed_dim < 2 || detail::active_rank(constraints, common, dim) != pointed_dim - 2) continue;
        Integer sp = dot(a, p), sn = dot(a, n);
        IntVec c(dim);
        for (std::size_t j = 0; j < dim; ++j) c[j] = sp * n[j] - sn * p[j];
        c = primitive(std::move(c));
        if (!is_zero(c)) next.push_back(std::move(c));
      }
    }
    std::sort(next.begin(), next.end(), [](const IntVec& x, const IntVec& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
  }
  return {std::move(lin), std::move(rays)};
}

/// Dual cone {α : α·p <= 0 for all points}.
inline ConeGenerators dual_cone(std::span<const IntVec> points, std::size_t dim) {
  return double_description(points, dim);
}

namespace detail {

/// Orthogonal projection onto span(points), scaled to a primitive integer vector.
inline IntVec project_to_span(const IntVec& v, std::span<const IntVec> points, std::size_t dim) {
  if (points.empty()) return IntVec(dim);
  auto perp = nullspace(to_rational(IntMatrix::from_rows(points, dim)));
  if (perp.empty()) return primitive(IntVec(v));
  // v - N^T (N N^T)^{-1} N v
  const std::size_t m = perp.size();
  RatMatrix gram(m, m);
  RatVec nv(m);
  RatVec vr = to_rational(v);
  for (std::size_t i = 0; i < m; ++i) {
    nv[i] = dot(perp[i], vr);
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = dot(perp[i], perp[j]);
  }
  auto coef = solve_rational(gram, nv);
  RatVec out = vr;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < dim; ++j) out[j] -= (*coef)[i] * perp[i][j];
  return primitive(out);
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

inline FacetDescription facets(const VectorConfig& cfg) {
  const auto& pts = cfg.points();
  const std::size_t d = cfg.ambient_dim();
  auto dual = dual_cone(pts, d);
  std::vector<IntVec> normals;
  for (const auto& r : dual.rays) {
    auto p = detail::project_to_span(r, pts, d);
    if (!is_zero(p)) normals.push_back(std::move(p));
  }
  if (!dual.lineality.empty()) {
    auto lat = Lattice::span(dual.lineality, d);
    for (auto& l : lat.basis_vectors()) {
      auto p = primitive(l);
      IntVec m = p;
      for (auto& x : m) x = -x;
      normals.push_back(std::move(p));
      normals.push_back(std::move(m));
    }
  }
  std::sort(normals.begin(), normals.end(), detail::lex_less);
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
  return {std::move(normals)};
}

namespace detail {

/// Face structure of a cone read off its dual: zero sets of the extreme
/// rays of the dual are the facets; every face is an intersection of facets.
struct FaceStructure {
  ConeGenerators dual;
  std::vector<IndexSet> ray_zero_sets;
};

inline FaceStructure face_structure(std::span<const IntVec> pts, std::size_t dim) {
  FaceStructure fs{dual_cone(pts, dim), {}};
  for (const auto& r : fs.dual.rays) fs.ray_zero_sets.push_back(zero_set(pts, r));
  return fs;
}

inline std::set<IndexSet> all_faces(const FaceStructure& fs, std::size_t npoints) {
  IndexSet all(npoints);
  for (std::size_t i = 0; i < npoints; ++i) all[i] = i;
  std::set<IndexSet> faces{all};
  std::vector<IndexSet> frontier{all};
  while (!frontier.empty()) {
    std::vector<IndexSet> next;
    for (const auto& f : frontier)
      for (const auto& z : fs.ray_zero_sets) {
        IndexSet g;
        std::set_intersection(f.begin(), f.end(), z.begin(), z.end(), std::back_inserter(g));
        if (faces.insert(g).second) next.push_back(std::move(g));
      }
    frontier = std::move(next);
  }
  return faces;
}

/// Sum of the dual rays vanishing on `sub`; its zero set is the smallest
/// face containing `sub`.
inline IntVec face_functional(const FaceStructure& fs, std::span<const IntVec> pts, const IndexSet& sub,
                              std::size_t dim) {
  IntVec alpha(dim);
  for (const auto& r : fs.dual.rays) {
    bool vanishes = std::all_of(sub.begin(), sub.end(), [&](std::size_t i) { return dot(pts[i], r) == 0; });
    if (!vanishes) continue;
    for (std::size_t j = 0; j < dim; ++j) alpha[j] += r[j];
  }
  return alpha;
}

}  // namespace detail

/// Certificate iff cone(sub) is a face of cone(cfg) and every point of cfg
/// lying in cone(sub) belongs to sub.
inline std::optional<FaceCertificate> is_face(const VectorConfig& cfg, const IndexSet& sub) {
  for (auto i : sub)
    if (i >= cfg.size()) throw std::out_of_range("is_face: index out of range");
  IndexSet s = sub;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const auto& pts = cfg.points();
  auto fs = detail::face_structure(pts, cfg.ambient_dim());
  IntVec alpha = detail::face_functional(fs, pts, s, cfg.ambient_dim());
  auto z = detail::zero_set(pts, alpha);
  if (z != s) return std::nullopt;
  return FaceCertificate{detail::project_to_span(alpha, pts, cfg.ambient_dim()), std::move(z)};
}

/// All index subsets that are faces; contains ∅ exactly when the cone is pointed.
inline std::set<IndexSet> face_poset(const VectorConfig& cfg) {
  auto fs = detail::face_structure(cfg.points(), cfg.ambient_dim());
  return detail::all_faces(fs, cfg.size());
}

namespace detail {

/// Points (p, w(p)) scaled by the denominator of w(p) so they stay integral.
inline std::vector<IntVec> lift(const VectorConfig& cfg, std::span<const Rational> w) {
  if (w.size() != cfg.size()) throw std::invalid_argument("lower_faces: weight count mismatch");
  std::vector<IntVec> lifted;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    Rational wi = w[i];
    wi.canonicalize();
    IntVec q;
    for (const auto& x : cfg[i]) q.push_back(x * wi.get_den());
    q.push_back(wi.get_num());
    lifted.push_back(std::move(q));
  }
  return lifted;
}

}  // namespace detail

/// Lower faces of the configuration lifted by w, each with a supporting
/// form α satisfying α(p) <= w(p), equality exactly on the face.
inline std::vector<LowerFaceCertificate> lower_face_certificates(const VectorConfig& cfg,
                                                                 std::span<const Rational> w) {
  const std::size_t d = cfg.ambient_dim();
  auto lifted = detail::lift(cfg, w);
  auto fs = detail::face_structure(lifted, d + 1);
  auto faces = detail::all_faces(fs, cfg.size());

  std::vector<LowerFaceCertificate> out;
  for (const auto& f : faces) {
    // generators of the dual face: all lineality plus rays vanishing on f
    IntVec beta = detail::face_functional(fs, lifted, f, d + 1);
    std::optional<IntVec> down;
    for (const auto& l : fs.dual.lineality)
      if (l[d] != 0) {
        down = l;
        if (l[d] > 0)
          for (auto& x : *down) x = -x;
        break;
      }
    if (!down)
      for (const auto& r : fs.dual.rays) {
        if (r[d] >= 0) continue;
        bool vanishes = std::all_of(f.begin(), f.end(), [&](std::size_t i) { return dot(lifted[i], r) == 0; });
        if (vanishes) {
          down = r;
          break;
        }
      }
    if (!down) continue;
    if (beta[d] >= 0) {
      // β + t·down with last coordinate pushed below zero
      Integer t = beta[d] / (-(*down)[d]) + 1;
      for (std::size_t j = 0; j <= d; ++j) beta[j] += t * (*down)[j];
    }
    RatVec alpha(d);
    Rational scale(1);
    scale /= -beta[d];
    for (std::size_t j = 0; j < d; ++j) alpha[j] = Rational(beta[j]) * scale;
    out.push_back({std::move(alpha), f});
  }
  return out;
}

inline std::set<IndexSet> lower_faces(const VectorConfig& cfg, std::span<const Rational> w) {
  std::set<IndexSet> out;
  for (auto& c : lower_face_certificates(cfg, w)) out.insert(c.face);
  return out;
}

/// Checks a lower-face certificate exactly.
inline bool verify_lower_certificate(const VectorConfig& cfg, std::span<const Rational> w,
                                     const LowerFaceCertificate& c) {
  IndexSet eq;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    Rational v = dot(std::span<const Rational>(c.alpha), std::span<const Integer>(cfg[i]));
    if (v > w[i]) return false;
    if (v == w[i]) eq.push_back(i);
  }
  return eq == c.face;
}

// --- exact LP feasibility -----------------------------------------------------

namespace detail {

/// Phase-one simplex with Bland's rule: some λ >= 0 with A·λ = b, if any.
inline std::optional<RatVec> nonnegative_solution(const RatMatrix& a, RatVec b) {
  const std::size_t m = a.rows(), n = a.cols();
  // tableau columns: n structural, m artificial, rhs
  RatMatrix t(m + 1, n + m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, n + i) = 1;
    t(i, n + m) = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // objective row: minimise the sum of artificials, expressed in non-basic terms
  for (std::size_t j = 0; j < n + m + 1; ++j) {
    Rational s = 0;
    if (j < n || j == n + m)
      for (std::size_t i = 0; i < m; ++i) s -= t(i, j);
    t(m, j) = s;
  }
  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < n + m; ++j)
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    if (!enter) break;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, *enter) <= 0) continue;
      Rational ratio = t(i, n + m) / t(i, *enter);
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) break;  // unbounded cannot happen for phase one
    Rational piv = t(*leave, *enter);
    for (std::size_t j = 0; j < n + m + 1; ++j) t(*leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i)
      if (i != *leave && t(i, *enter) != 0) t.add_row(i, *leave, -t(i, *enter));
    basis[*leave] = *enter;
  }
  if (t(m, n + m) != 0) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t(i, n + m);
  return x;
}

}  // namespace detail

struct ConeMembership {
  bool member = false;
  RatVec lambda;     // Σ λ_i p_i = x, λ >= 0 (when member)
  IntVec separator;  // α with α·p <= 0 for all p and α·x > 0 (otherwise)
};

inline ConeMembership in_cone(const VectorConfig& cfg, std::span<const Integer> x) {
  const std::size_t d = cfg.ambient_dim();
  if (x.size() != d) throw std::invalid_argument("in_cone: dimension mismatch");
  ConeMembership res;
  if (is_zero(x)) {
    res.member = true;
    res.lambda.assign(cfg.size(), Rational(0));
    return res;
  }
  RatMatrix a(d, cfg.size());
  for (std::size_t j = 0; j < cfg.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) a(i, j) = cfg[j][i];
  if (auto sol = detail::nonnegative_solution(a, to_rational(x))) {
    res.member = true;
    res.lambda = std::move(*sol);
    return res;
  }
  for (const auto& n : facets(cfg).normals)
    if (dot(n, x) > 0) {
      res.separator = n;
      break;
    }
  return res;
}

// --- integral closure -----------------------------------------------------------

enum class Verdict { yes, no, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "inconclusive";
  }
}

struct ClosureResult {
  Verdict verdict = Verdict::inconclusive;
  IntVec witness;      // in cone(sub) ∩ M_sup but not in M_sub
  std::string reason;  // which test decided
};

namespace detail {

/// Nonnegative integer combination of `gens` equal to x, searched depth
/// first with coefficient bounds from a strictly positive functional.
inline bool in_monoid(std::span<const IntVec> gens, const IntVec& x, const IntVec& positive) {
  if (is_zero(x)) return true;
  Integer fx = dot(positive, x);
  if (fx <= 0) return false;
  std::vector<Integer> fg;
  for (const auto& g : gens) fg.push_back(dot(positive, g));
  std::set<IntVec> dead;
  auto rec = [&](auto&& self, const IntVec& rest) -> bool {
    if (is_zero(rest)) return true;
    if (dead.count(rest)) return false;
    Integer fr = dot(positive, rest);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (fg[i] > fr) continue;
      IntVec next = rest;
      for (std::size_t j = 0; j < next.size(); ++j) next[j] -= gens[i][j];
      if (self(self, next)) return true;
    }
    dead.insert(rest);
    return false;
  };
  return rec(rec, x);
}

/// Integer vector strictly positive on every point (cone pointed), if any.
inline std::optional<IntVec> positive_functional(std::span<const IntVec> pts, std::size_t dim) {
  auto dual = dual_cone(pts, dim);
  IntVec phi(dim);
  for (const auto& r : dual.rays)
    for (std::size_t j = 0; j < dim; ++j) phi[j] -= r[j];
  for (const auto& p : pts)
    if (dot(phi, p) <= 0) return std::nullopt;
  return phi;
}

inline Integer l1(std::span<const Integer> v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

}  // namespace detail

/// Default degree bound: 3 × the largest coordinate sum of a generator.
inline Integer default_degree_bound(const VectorConfig& sup) {
  Integer m = 0;
  for (const auto& p : sup.points()) m = std::max(m, detail::l1(p));
  return 3 * m;
}

/// Is M_sub integrally closed in M_sup, i.e. cone(sub) ∩ M_sup = M_sub?
/// Decided exactly when sub ⊇ sup or when sub is linearly independent and
/// spans a saturated sublattice of the group of sup; otherwise elements of
/// M_sup with coordinate sum <= bound are searched for a witness.
inline ClosureResult integrally_closed(const VectorConfig& sub, const VectorConfig& sup,
                                       std::optional<Integer> bound = std::nullopt) {
  const std::size_t d = sup.ambient_dim();
  if (sub.ambient_dim() != d) throw std::invalid_argument("integrally_closed: dimension mismatch");
  std::set<IntVec> sup_set(sup.points().begin(), sup.points().end());
  std::set<IntVec> sub_set(sub.points().begin(), sub.points().end());
  if (std::includes(sub_set.begin(), sub_set.end(), sup_set.begin(), sup_set.end()))
    return {Verdict::yes, {}, "sub contains all generators of sup"};

  // generators of M_sub that are sums of the others do not change the monoid
  std::vector<IntVec> minimal = sub.points();
  if (auto phi = detail::positive_functional(minimal, d)) {
    for (std::size_t i = minimal.size(); i-- > 0;) {
      std::vector<IntVec> others = minimal;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
      if (detail::in_monoid(others, minimal[i], *phi)) minimal = std::move(others);
    }
  }

  if (linearly_independent(minimal, d) && sup.size() > 0) {
    // coordinates of sub in a basis of the group generated by sup
    Lattice group = Lattice::span(sup.points(), d);
    RatMatrix bt = to_rational(group.basis().transpose());
    std::vector<IntVec> coords;
    bool ok = true;
    for (const auto& s : minimal) {
      auto c = solve_rational(bt, to_rational(s));
      if (!c) {
        ok = false;
        break;
      }
      IntVec ci;
      for (auto& q : *c) {
        if (q.get_den() != 1) ok = false;
        ci.push_back(q.get_num());
      }
      coords.push_back(std::move(ci));
    }
    if (ok && (coords.empty() || Lattice::span(coords, group.rank()).is_saturated()))
      return {Verdict::yes, {}, "sub is a basis of a saturated sublattice"};
  }

  const Integer limit = bound ? *bound : default_degree_bound(sup);
  auto sub_facets = facets(sub).normals;
  auto in_sub_cone = [&](const IntVec& x) {
    return std::all_of(sub_facets.begin(), sub_facets.end(), [&](const IntVec& n) { return dot(n, x) <= 0; });
  };
  auto phi = detail::positive_functional(sub.points(), d);

  std::set<IntVec> seen;
  std::vector<IntVec> frontier{IntVec(d)};
  seen.insert(IntVec(d));
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& x : frontier)
      for (const auto& g : sup.points()) {
        IntVec y = x;
        for (std::size_t j = 0; j < d; ++j) y[j] += g[j];
        if (detail::l1(y) > limit || !seen.insert(y).second) continue;
        next.push_back(y);
        if (!in_sub_cone(y)) continue;
        if (!phi) continue;
        if (!detail::in_monoid(sub.points(), y, *phi)) return {Verdict::no, y, "witness found"};
      }
    frontier = std::move(next);
  }
  return {Verdict::inconclusive, {}, "no witness up to degree bound " + limit.get_str()};
}

}  // namespace toric
