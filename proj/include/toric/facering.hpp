#pragma once

// Face rings K[T] = K[Gen(T)]/I_T, restriction maps, gluing checks and the
// reconstruction of a toric complex from a binomial ideal.

#include "toric/complex.hpp"
#include "toric/exactlin.hpp"
#include "toric/polyring.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using Mask = std::uint64_t;

namespace detail {

inline Mask mask_of(const IndexSet& s) {
  Mask m = 0;
  for (auto i : s) m |= Mask{1} << i;
  return m;
}

inline IndexSet set_of(Mask m) {
  IndexSet s;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) s.push_back(i);
  return s;
}

inline Polynomial square_free_monomial(std::size_t nvars, const IndexSet& s) {
  Monomial m(nvars);
  for (auto i : s) m[i] = 1;
  return Polynomial::term(m, 1);
}

/// Minimal subsets of {0..n-1} not contained in any of the given sets.
inline std::vector<IndexSet> minimal_uncovered(std::size_t n, const std::vector<Mask>& covers) {
  if (n > 63) throw std::invalid_argument("too many generators for subset enumeration");
  auto covered = [&](Mask m) {
    return std::any_of(covers.begin(), covers.end(), [&](Mask c) { return (m & ~c) == 0; });
  };
  std::vector<IndexSet> out;
  std::vector<Mask> level{0};
  if (!covered(0)) return {IndexSet{}};
  for (std::size_t size = 1; size <= n && !level.empty(); ++size) {
    std::set<Mask> next;
    for (Mask f : level) {
      std::size_t top = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (f >> i & 1) top = i + 1;
      for (std::size_t v = top; v < n; ++v) {
        Mask g = f | Mask{1} << v;
        if (covered(g)) {
          next.insert(g);
          continue;
        }
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i)
          if ((g >> i & 1) && !covered(g & ~(Mask{1} << i))) minimal = false;
        if (minimal) out.push_back(set_of(g));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Mask> face_masks(const ToricComplex& t) {
  std::vector<Mask> out;
  for (auto i : t.maximal_faces()) out.push_back(mask_of(t.faces()[i].gens));
  return out;
}

}  // namespace detail

/// x_G for the minimal G ⊆ Gen(T) contained in no face of T.
inline std::vector<Polynomial> nonface_ideal(const ToricComplex& t) {
  const std::size_t n = t.generator_count();
  std::vector<Polynomial> out;
  for (const auto& g : detail::minimal_uncovered(n, detail::face_masks(t)))
    out.push_back(detail::square_free_monomial(n, g));
  return out;
}

struct IdealPresentation {
  std::vector<std::string> variables;  // generator ids, in generator order
  std::vector<Polynomial> monomials;   // J_T
  std::vector<Polynomial> binomials;   // toric ideals of the maximal faces

  std::size_t nvars() const { return variables.size(); }
  std::vector<Polynomial> generators() const {
    std::vector<Polynomial> all = monomials;
    all.insert(all.end(), binomials.begin(), binomials.end());
    return all;
  }
};

/// Toric ideal of one face, in the variables of the whole complex.
inline std::vector<Polynomial> face_toric_ideal(const ToricComplex& t, std::size_t face) {
  const Face& f = t.faces()[face];
  if (f.gens.empty()) return {};
  std::vector<long> map;
  for (auto g : f.gens) map.push_back(static_cast<long>(g));
  std::vector<Polynomial> out;
  for (const auto& p : toric_ideal(t.config(face))) out.push_back(remap(p, t.generator_count(), map));
  return out;
}

inline IdealPresentation face_ring_ideal(const ToricComplex& t) {
  IdealPresentation p;
  p.variables = t.ids();
  p.monomials = nonface_ideal(t);
  std::set<Polynomial> seen;
  for (auto i : t.maximal_faces())
    for (auto& b : face_toric_ideal(t, i))
      if (seen.insert(b).second) p.binomials.push_back(std::move(b));
  return p;
}

// --- maps between complexes sharing generator ids ---------------------------------

/// Variable map from `from` to `to` by generator id; -1 where the id is absent.
inline std::vector<long> id_map(const ToricComplex& from, const ToricComplex& to) {
  std::vector<long> map;
  for (const auto& id : from.ids()) {
    auto j = to.index_of(id);
    map.push_back(j ? static_cast<long>(*j) : -1);
  }
  return map;
}

inline std::vector<Polynomial> remap_all(std::span<const Polynomial> fs, std::size_t nvars,
                                         std::span<const long> map) {
  std::vector<Polynomial> out;
  for (const auto& f : fs) {
    auto g = remap(f, nvars, map);
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

/// Kernel of K[Gen T] → K[S]: I_S pulled back, plus variables outside Gen(S).
inline std::vector<Polynomial> pullback_ideal(const ToricComplex& t, const ToricComplex& s) {
  const std::size_t n = t.generator_count();
  auto is = face_ring_ideal(s).generators();
  auto out = remap_all(is, n, id_map(s, t));
  for (std::size_t a = 0; a < n; ++a)
    if (!s.index_of(t.id(a))) out.push_back(Polynomial::variable(n, a));
  return out;
}

struct RestrictionResult {
  std::vector<Polynomial> kernel;  // x_F, F in no face of S, minimal
  bool kernel_ok = false;          // I_T + kernel = pullback of I_S
  bool section_ok = false;         // i* ∘ i_* = id on the variables of S
  std::string witness;
};

/// Restriction K[T] → K[S] for a subcomplex S (x_b ↦ x_b on Gen(S), else 0).
inline RestrictionResult restriction_map(const ToricComplex& t, const ToricComplex& s) {
  const std::size_t n = t.generator_count();
  RestrictionResult r;
  auto map = id_map(s, t);
  if (std::any_of(map.begin(), map.end(), [](long x) { return x < 0; }))
    throw std::invalid_argument("restriction_map: S has generators outside T");
  std::vector<Mask> covers;
  for (auto i : s.maximal_faces()) {
    IndexSet g;
    for (auto a : s.faces()[i].gens) g.push_back(static_cast<std::size_t>(map[a]));
    std::sort(g.begin(), g.end());
    covers.push_back(detail::mask_of(g));
  }
  for (const auto& g : detail::minimal_uncovered(n, covers)) r.kernel.push_back(detail::square_free_monomial(n, g));

  auto lhs = face_ring_ideal(t).generators();
  lhs.insert(lhs.end(), r.kernel.begin(), r.kernel.end());
  r.kernel_ok = ideals_equal(lhs, pullback_ideal(t, s), n);
  if (!r.kernel_ok) r.witness = "I_T + kernel differs from the pullback of I_S";

  // section x_b ↦ x_b then restriction x_b ↦ x_b
  auto back = id_map(t, s);
  r.section_ok = true;
  for (std::size_t b = 0; b < s.generator_count(); ++b) {
    auto up = remap(Polynomial::variable(s.generator_count(), b), n, map);
    auto down = remap(up, s.generator_count(), back);
    if (!(down == Polynomial::variable(s.generator_count(), b))) {
      r.section_ok = false;
      r.witness = "section fails on " + s.id(b);
    }
  }
  return r;
}

// --- gluing -----------------------------------------------------------------------

struct GluingResult {
  bool ok = false;
  bool injective = false;
  bool inverse = false;
  bool multiplicative = false;
  std::string witness;
};

/// K[T] → K[Q] ×_{K[Q∩S]} K[S] is an isomorphism, for T = Q ∪ S.
inline GluingResult check_fiber_product(const ToricComplex& t, const ToricComplex& q, const ToricComplex& s) {
  if (!is_union(t, q, s)) throw std::invalid_argument("check_fiber_product: T is not the union of Q and S");
  const std::size_t n = t.generator_count();
  GluingResult res;
  auto it = face_ring_ideal(t).generators();
  auto pq = pullback_ideal(t, q);
  auto ps = pullback_ideal(t, s);

  // injective: I_T = (i_Q^*)^{-1}(I_Q) ∩ (i_S^*)^{-1}(I_S)
  res.injective = ideals_equal(it, intersect_ideals(pq, ps, n), n);
  if (!res.injective) res.witness = "I_T differs from the intersection of the pulled-back ideals";

  auto gb_t = buchberger(it, MonomialOrder::grevlex(n));
  auto gb_q = buchberger(pq, MonomialOrder::grevlex(n));
  auto gb_s = buchberger(ps, MonomialOrder::grevlex(n));
  // elements of K[T] stand in for both i_*(a) and i_*(b); restricting to Q kills Gen(T)∖Gen(Q)
  auto in_q = [&](std::size_t a) { return q.index_of(t.id(a)).has_value(); };
  auto in_s = [&](std::size_t a) { return s.index_of(t.id(a)).has_value(); };
  auto restrict_to = [&](const Polynomial& f, auto&& keep) {
    std::vector<long> map(n);
    for (std::size_t a = 0; a < n; ++a) map[a] = keep(a) ? static_cast<long>(a) : -1;
    return remap(f, n, map);
  };
  // β(a, b) = i_*(a) + i_*(b) − i_*(i^*(a)) on pairs (a, b) agreeing on Q∩S
  auto beta = [&](const Polynomial& a, const Polynomial& b) { return a + b - restrict_to(a, in_s); };

  // algebra generators of the fiber product: (x_c, x_c) on Gen(Q∩S), (x_c, 0), (0, x_c) elsewhere
  struct Pair {
    Polynomial a, b;
    std::string name;
  };
  std::vector<Pair> gens;
  Polynomial zero(n);
  for (std::size_t c = 0; c < n; ++c) {
    auto x = Polynomial::variable(n, c);
    bool iq = in_q(c), is = in_s(c);
    if (iq && is)
      gens.push_back({x, x, "(" + t.id(c) + "," + t.id(c) + ")"});
    else if (iq)
      gens.push_back({x, zero, "(" + t.id(c) + ",0)"});
    else if (is)
      gens.push_back({zero, x, "(0," + t.id(c) + ")"});
  }
  // pairs that are nonzero only on Q∖S or S∖Q must still agree over Q∩S
  res.inverse = true;
  for (const auto& g : gens) {
    auto f = beta(g.a, g.b);
    if (!gb_q.contains(restrict_to(f, in_q) - restrict_to(g.a, in_q)) ||
        !gb_s.contains(restrict_to(f, in_s) - restrict_to(g.b, in_s))) {
      res.inverse = false;
      res.witness = "beta is not a right inverse on " + g.name;
      break;
    }
    // β ∘ (i_Q^*, i_S^*) = id on the variable itself
    auto x = g.a.is_zero() ? g.b : g.a;
    auto round = beta(restrict_to(x, in_q), restrict_to(x, in_s));
    if (!gb_t.contains(round - x)) {
      res.inverse = false;
      res.witness = "beta is not a left inverse on " + g.name;
      break;
    }
  }
  res.multiplicative = true;
  for (std::size_t i = 0; i < gens.size() && res.multiplicative; ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      auto prod = beta(gens[i].a * gens[j].a, gens[i].b * gens[j].b);
      auto sep = beta(gens[i].a, gens[i].b) * beta(gens[j].a, gens[j].b);
      if (!gb_t.contains(prod - sep)) {
        res.multiplicative = false;
        res.witness = "beta not multiplicative on " + gens[i].name + "*" + gens[j].name;
        break;
      }
    }
  res.ok = res.injective && res.inverse && res.multiplicative;
  return res;
}

/// K[T] is the limit of the K[T(F)]: glue the closures of the maximal faces one at a time.
inline GluingResult check_limit(const ToricComplex& t) {
  auto maxes = t.maximal_faces();
  GluingResult res;
  res.ok = res.injective = res.inverse = res.multiplicative = true;
  if (maxes.size() <= 1) return res;
  std::vector<IndexSet> done{t.faces()[maxes[0]].gens};
  for (std::size_t k = 1; k < maxes.size(); ++k) {
    done.push_back(t.faces()[maxes[k]].gens);
    auto whole = closure(t, done);
    std::vector<IndexSet> earlier;
    for (std::size_t i = 0; i + 1 < done.size(); ++i) earlier.push_back(whole.index_set(t.id_set(done[i])));
    auto q = closure(whole, earlier);
    auto piece = closure(whole, {whole.index_set(t.id_set(done.back()))});
    auto step = check_fiber_product(whole, q, piece);
    if (!step.ok) {
      step.witness = "gluing " + t.face_name(t.faces()[maxes[k]].gens) + ": " + step.witness;
      return step;
    }
  }
  return res;
}

// --- Veronese ---------------------------------------------------------------------

struct VeroneseResult {
  bool ok = false;
  std::vector<long> multiple;  // H(K[rT], n)
  std::vector<long> original;  // H(K[T], r·n)
};

inline VeroneseResult veronese_check(const ToricComplex& t, int r, long nmax) {
  if (!properties(t).standard_graded) throw std::invalid_argument("veronese_check: T is not standard graded");
  auto rt = multiple(t, r);
  VeroneseResult v;
  std::vector<long> g1(rt.generator_count(), 1), g0(t.generator_count(), 1);
  auto ir = face_ring_ideal(rt).generators();
  auto it = face_ring_ideal(t).generators();
  v.multiple = hilbert_series_prefix(ir, g1, nmax);
  auto full = hilbert_series_prefix(it, g0, r * nmax);
  for (long n = 0; n <= nmax; ++n) v.original.push_back(full[static_cast<std::size_t>(r * n)]);
  v.ok = v.multiple == v.original;
  return v;
}

// --- reconstruction ---------------------------------------------------------------

struct Reconstruction {
  ToricComplex complex;
  bool isomorphism = false;  // I = ∩_F (P_F + (x_i : i ∉ F))
  std::map<IndexSet, std::vector<Polynomial>> primes;  // P_F per face, in all variables
};

namespace detail {

/// x^u − x^v with coefficients ±1 (or a monomial); exponent difference u − v.
inline std::optional<IntVec> pure_difference(const Polynomial& f) {
  if (f.size() != 2) return std::nullopt;
  auto it = f.terms().begin();
  auto [u, cu] = *it++;
  auto [v, cv] = *it;
  if (!((cu == 1 && cv == -1) || (cu == -1 && cv == 1))) return std::nullopt;
  IntVec m;
  for (std::size_t i = 0; i < u.size(); ++i) m.emplace_back(u[i] - v[i]);
  return m;
}

}  // namespace detail

/// T(I) for a binomial ideal I ⊆ K[x_0..x_{n-1}].
inline Reconstruction reconstruct(std::span<const Polynomial> gens, std::size_t nvars) {
  if (nvars > 12) throw std::invalid_argument("reconstruct: at most 12 variables are supported");
  for (const auto& g : gens)
    if (g.size() > 2 || (g.size() == 2 && !detail::pure_difference(normalized(g))))
      throw std::invalid_argument("reconstruct: generators must be binomials or monomials");
  auto gb = buchberger(gens, MonomialOrder::grevlex(nvars));
  auto full = gb.generators();

  struct Candidate {
    IndexSet gens;
    Lattice lattice;
    std::vector<Polynomial> prime;  // P_F in the variables of F
  };
  std::vector<Candidate> faces;
  for (Mask m = 0; m < (Mask{1} << nvars); ++m) {
    IndexSet f = detail::set_of(m);
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < nvars; ++i)
      if (!(m >> i & 1)) drop.push_back(i);
    auto pf = eliminate(full, nvars, drop);
    const std::size_t k = f.size();
    // pure differences only
    std::vector<IntVec> diffs;
    bool pure = true;
    for (const auto& p : pf) {
      auto d = detail::pure_difference(normalized(p));
      if (!d) {
        pure = false;
        break;
      }
      diffs.push_back(*d);
    }
    if (!pure) continue;
    Lattice l = Lattice::span(diffs, k);
    if (!l.is_saturated()) continue;
    // no monomials and prime: P_F is the lattice ideal of its exponent lattice
    if (k > 0 && !ideals_equal(pf, lattice_ideal(l), k)) continue;
    // i_F^* maps I into P_F
    std::vector<long> map(nvars, -1);
    for (std::size_t i = 0; i < k; ++i) map[f[i]] = static_cast<long>(i);
    bool projects = true;
    if (k > 0) {
      auto gbf = buchberger(pf, MonomialOrder::grevlex(k));
      for (const auto& g : full)
        if (!gbf.contains(remap(g, k, map))) {
          projects = false;
          break;
        }
    } else {
      for (const auto& g : full)
        if (!remap(g, 0, map).is_zero()) projects = false;
    }
    if (!projects) continue;
    faces.push_back({f, l, pf});
  }

  // Z^F / L_F ≅ Z^{d_F} through a Smith normal form change of basis
  std::vector<Face> out_faces;
  std::map<IndexSet, IntMatrix> quotient;  // d_F × |F|
  std::map<IndexSet, IntMatrix> section;   // |F| × d_F, quotient·section = id
  for (const auto& c : faces) {
    const std::size_t k = c.gens.size();
    Face face{c.gens, 1, {}};
    if (k == 0) {
      out_faces.push_back(face);
      continue;
    }
    std::size_t rk = c.lattice.rank();
    if (rk == k) throw std::logic_error("reconstruct: face with zero-dimensional quotient");
    IntMatrix q(k - rk, k), sct(k, k - rk);
    if (rk == 0) {
      q = IntMatrix::identity(k);
      sct = IntMatrix::identity(k);
    } else {
      auto snf = smith_normal_form(c.lattice.basis());
      RatMatrix vinv = *inverse(to_rational(snf.V));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = rk; j < k; ++j) {
          q(j - rk, i) = snf.V(i, j);
          sct(i, j - rk) = vinv(j, i).get_num();
        }
    }
    face.dim = k - rk;
    for (std::size_t i = 0; i < k; ++i) face.coords.push_back(q.col(i));
    quotient[c.gens] = q;
    section[c.gens] = sct;
    out_faces.push_back(std::move(face));
  }
  std::map<std::pair<IndexSet, IndexSet>, IntMatrix> inc;
  for (const auto& a : faces)
    for (const auto& b : faces) {
      if (a.gens.empty() || a.gens == b.gens) continue;
      if (!std::includes(b.gens.begin(), b.gens.end(), a.gens.begin(), a.gens.end())) continue;
      // columns of b's quotient at a's generators, through a's section
      const IntMatrix& qb = quotient.at(b.gens);
      IntMatrix qba(qb.rows(), a.gens.size());
      for (std::size_t i = 0; i < a.gens.size(); ++i) {
        auto pos = static_cast<std::size_t>(std::lower_bound(b.gens.begin(), b.gens.end(), a.gens[i]) - b.gens.begin());
        for (std::size_t r = 0; r < qb.rows(); ++r) qba(r, i) = qb(r, pos);
      }
      inc[{a.gens, b.gens}] = qba * section.at(a.gens);
    }
  // Gen(T(I)): variables lying in some face, named by their original index
  std::set<std::size_t> used;
  for (const auto& c : faces) used.insert(c.gens.begin(), c.gens.end());
  std::map<std::size_t, std::size_t> re;
  std::vector<std::string> ids;
  for (auto i : used) {
    re[i] = ids.size();
    ids.push_back("x" + std::to_string(i));
  }
  auto reindex = [&](const IndexSet& f) {
    IndexSet g;
    for (auto i : f) g.push_back(re.at(i));
    return g;
  };
  for (auto& f : out_faces) f.gens = reindex(f.gens);
  std::map<std::pair<IndexSet, IndexSet>, IntMatrix> inc_local;
  for (auto& [key, m] : inc) inc_local[{reindex(key.first), reindex(key.second)}] = m;

  Reconstruction rec;
  rec.complex = ToricComplex::general(ids, out_faces, inc_local);
  for (const auto& c : faces) {
    std::vector<long> map;
    for (auto g : c.gens) map.push_back(static_cast<long>(g));
    rec.primes[c.gens] = remap_all(c.prime, nvars, map);
  }

  // I = ∩ over maximal faces of (P_F + (x_i : i ∉ F))
  std::vector<Polynomial> meet;
  bool first = true;
  for (auto mi : rec.complex.maximal_faces()) {
    IndexSet f;
    for (auto i : rec.complex.faces()[mi].gens) f.push_back(std::stoul(rec.complex.id(i).substr(1)));
    auto part = rec.primes.at(f);
    for (std::size_t i = 0; i < nvars; ++i)
      if (!std::binary_search(f.begin(), f.end(), i)) part.push_back(Polynomial::variable(nvars, i));
    meet = first ? part : intersect_ideals(meet, part, nvars);
    first = false;
  }
  if (first) meet = {Polynomial::constant(nvars, 1)};
  rec.isomorphism = ideals_equal(meet, full, nvars);
  return rec;
}

}  // namespace toric
