#pragma once

// Polynomials over Q in a fixed number of variables, monomial and weight
// orders, Buchberger's algorithm and the ideal operations built on it.

#include "toric/exactlin.hpp"
#include "toric/polyhedra.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Dense exponent vector; every monomial carries all variables of its ring.
using Monomial = std::vector<int>;

inline int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

/// a / b, assuming b divides a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] - b[i];
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

inline std::vector<std::size_t> support(const Monomial& m) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) s.push_back(i);
  return s;
}

inline bool square_free(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int e) { return e <= 1; });
}

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

  explicit Polynomial(std::size_t nvars = 0) : n_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Monomial(nvars)] = c;
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.at(i) = 1;
    return term(m, 1);
  }
  static Polynomial term(const Monomial& m, const Rational& c) {
    Polynomial p(m.size());
    if (c != 0) p.terms_[m] = c;
    return p;
  }
  /// x^u - x^v
  static Polynomial binomial(const Monomial& u, const Monomial& v) {
    Polynomial p = term(u, 1);
    p.add_term(v, -1);
    return p;
  }

  std::size_t nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.size() != n_) throw std::invalid_argument("Polynomial: monomial has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) t.second = -t.second;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial p(a.n_);
    for (const auto& [m1, c1] : a.terms_)
      for (const auto& [m2, c2] : b.terms_) p.add_term(m1 * m2, c1 * c2);
    return p;
  }
  friend Polynomial operator*(const Rational& s, Polynomial a) {
    if (s == 0) return Polynomial(a.n_);
    for (auto& t : a.terms_) t.second *= s;
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(n_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, degree(t.first));
    return d;
  }

  /// Homogeneous for the grading deg(x_i) = grading[i].
  bool is_homogeneous(std::span<const long> grading) const {
    std::optional<long> deg;
    for (const auto& t : terms_) {
      long g = 0;
      for (std::size_t i = 0; i < n_; ++i) g += grading[i] * t.first[i];
      if (deg && *deg != g) return false;
      deg = g;
    }
    return true;
  }

  /// Variables occurring in some term.
  std::vector<std::size_t> variables() const {
    std::vector<bool> used(n_);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < n_; ++i)
        if (t.first[i]) used[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (used[i]) out.push_back(i);
    return out;
  }

  /// Binomial x^u - x^v (or a monomial when `v` is absent), up to scaling.
  bool is_binomial_or_monomial() const { return terms_.size() == 1 || (terms_.size() == 2 && is_pure_difference()); }
  bool is_pure_difference() const {
    if (terms_.size() != 2) return false;
    auto it = terms_.begin();
    const Rational& a = it->second;
    const Rational& b = (++it)->second;
    return a == -b;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.n_ != n_) throw std::invalid_argument("Polynomial: variable count mismatch");
  }

  std::size_t n_;
  TermMap terms_;
};

/// Substitute: variable i goes to variable map[i] of the target ring, or to 0
/// when map[i] is negative.
inline Polynomial remap(const Polynomial& f, std::size_t new_nvars, std::span<const long> map) {
  Polynomial out(new_nvars);
  for (const auto& [m, c] : f.terms()) {
    Monomial nm(new_nvars);
    bool killed = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (map[i] < 0) {
        killed = true;
        break;
      }
      nm[static_cast<std::size_t>(map[i])] += m[i];
    }
    if (!killed) out.add_term(nm, c);
  }
  return out;
}

/// Scaled so that the lexicographically largest term has coefficient 1.
inline Polynomial normalized(const Polynomial& f) {
  if (f.is_zero()) return f;
  return (1 / f.terms().begin()->second) * f;
}

inline std::vector<Polynomial> normalized(std::vector<Polynomial> fs) {
  for (auto& f : fs) f = normalized(f);
  std::sort(fs.begin(), fs.end());
  return fs;
}

/// Same polynomial in a ring with `extra` more variables appended.
inline Polynomial extend(const Polynomial& f, std::size_t extra) {
  std::vector<long> map(f.nvars());
  std::iota(map.begin(), map.end(), 0L);
  return remap(f, f.nvars() + extra, map);
}

// --- weights and orders -----------------------------------------------------------

/// ω(x^u) = Σ u(a) ω(a).
inline Rational weight_of(std::span<const Rational> w, const Monomial& m) {
  if (w.size() != m.size()) throw std::invalid_argument("weight_of: weight has wrong number of entries");
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) s += w[i] * m[i];
  return s;
}

/// Terms of maximal ω-weight.
inline Polynomial initial_poly(std::span<const Rational> w, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("initial_poly: zero polynomial");
  std::optional<Rational> best;
  for (const auto& t : f.terms()) {
    Rational v = weight_of(w, t.first);
    if (!best || v > *best) best = v;
  }
  Polynomial out(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (weight_of(w, m) == *best) out.add_term(m, c);
  return out;
}

enum class Tiebreak { lex, revlex };

/// Compares integer weight rows in turn (larger weight is larger), then
/// breaks ties lexicographically or reverse-lexicographically.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(std::size_t nvars, std::vector<std::vector<long>> rows, Tiebreak tie)
      : n_(nvars), rows_(std::move(rows)), tie_(tie) {
    for (const auto& r : rows_)
      if (r.size() != n_) throw std::invalid_argument("MonomialOrder: weight row has wrong length");
  }

  static MonomialOrder lex(std::size_t n) { return {n, {}, Tiebreak::lex}; }
  static MonomialOrder grevlex(std::size_t n) { return {n, {std::vector<long>(n, 1)}, Tiebreak::revlex}; }
  /// Graded reverse lex for the grading deg(x_i) = g[i].
  static MonomialOrder graded(std::span<const long> g) {
    return {g.size(), {std::vector<long>(g.begin(), g.end())}, Tiebreak::revlex};
  }
  /// ω first, then total degree, then reverse lex.
  static MonomialOrder weighted(std::span<const Rational> w) {
    return {w.size(), {scaled(w), std::vector<long>(w.size(), 1)}, Tiebreak::revlex};
  }
  /// Orders so that any monomial involving `eliminate` exceeds all monomials without it.
  static MonomialOrder elimination(std::size_t n, std::span<const std::size_t> eliminate) {
    std::vector<long> ind(n, 0);
    for (auto i : eliminate) ind.at(i) = 1;
    return {n, {ind, std::vector<long>(n, 1)}, Tiebreak::revlex};
  }

  std::size_t nvars() const { return n_; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }
  Tiebreak tiebreak() const { return tie_; }

  /// Every variable exceeds 1 (a well-order, so Buchberger terminates).
  bool is_global() const {
    for (std::size_t i = 0; i < n_; ++i) {
      long first = 0;
      for (const auto& r : rows_)
        if (r[i] != 0) {
          first = r[i];
          break;
        }
      if (first < 0) return false;
      if (first == 0 && tie_ == Tiebreak::revlex) return false;
    }
    return true;
  }

  int compare(const Monomial& a, const Monomial& b) const {
    for (const auto& r : rows_) {
      long sa = 0, sb = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        sa += r[i] * a[i];
        sb += r[i] * b[i];
      }
      if (sa != sb) return sa < sb ? -1 : 1;
    }
    if (tie_ == Tiebreak::lex) {
      for (std::size_t i = 0; i < n_; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    } else {
      for (std::size_t i = n_; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Rational weights scaled by the lcm of their denominators.
  static std::vector<long> scaled(std::span<const Rational> w) {
    Integer l = 1;
    for (const auto& x : w) l = lcm(l, Integer(x.get_den()));
    std::vector<long> out;
    for (const auto& x : w) {
      Rational s = x * l;
      if (!s.get_num().fits_slong_p()) throw std::overflow_error("MonomialOrder: weight too large");
      out.push_back(s.get_num().get_si());
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<long>> rows_;
  Tiebreak tie_ = Tiebreak::lex;
};

// --- Buchberger -------------------------------------------------------------------

namespace detail {

struct Term {
  Monomial m;
  Rational c;
};

/// Terms sorted decreasingly for a fixed order.
using OPoly = std::vector<Term>;

inline OPoly to_ordered(const Polynomial& f, const MonomialOrder& ord) {
  OPoly p;
  for (const auto& [m, c] : f.terms()) p.push_back({m, c});
  std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ord.less(b.m, a.m); });
  return p;
}

inline Polynomial from_ordered(const OPoly& p, std::size_t n) {
  Polynomial f(n);
  for (const auto& t : p) f.add_term(t.m, t.c);
  return f;
}

/// a - s·x^shift·b for sorted a, b (b starts at index `from`).
inline OPoly sub_mul(const OPoly& a, std::size_t afrom, const Rational& s, const Monomial& shift, const OPoly& b,
                     std::size_t bfrom, const MonomialOrder& ord) {
  OPoly out;
  out.reserve(a.size() - afrom + b.size() - bfrom);
  std::size_t i = afrom, j = bfrom;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = b[j].m * shift;
    if (i == a.size()) {
      out.push_back({std::move(mb), -s * b[j].c});
      ++j;
      continue;
    }
    int c = ord.compare(a[i].m, mb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({std::move(mb), -s * b[j].c});
      ++j;
    } else {
      Rational v = a[i].c - s * b[j].c;
      if (v != 0) out.push_back({std::move(mb), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline void make_monic(OPoly& p) {
  if (p.empty() || p[0].c == 1) return;
  Rational inv = 1 / p[0].c;
  for (auto& t : p) t.c *= inv;
}

/// Full reduction of f modulo monic polynomials `basis` (skipping index `skip`).
inline OPoly reduce(OPoly f, const std::vector<OPoly>& basis, const MonomialOrder& ord,
                    std::size_t skip = static_cast<std::size_t>(-1)) {
  OPoly rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& t = f[start];
    std::size_t hit = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (k != skip && !basis[k].empty() && divides(basis[k][0].m, t.m)) {
        hit = k;
        break;
      }
    if (hit == basis.size()) {
      rem.push_back(t);
      ++start;
      continue;
    }
    Rational s = t.c;
    Monomial shift = quotient(t.m, basis[hit][0].m);
    f = sub_mul(f, start + 1, s, shift, basis[hit], 1, ord);
    start = 0;
  }
  return rem;
}

inline OPoly spoly(const OPoly& f, const OPoly& g, const MonomialOrder& ord) {
  Monomial l = lcm(f[0].m, g[0].m);
  OPoly a;
  Monomial sf = quotient(l, f[0].m);
  for (std::size_t i = 1; i < f.size(); ++i) a.push_back({f[i].m * sf, f[i].c});
  return sub_mul(a, 0, 1, quotient(l, g[0].m), g, 1, ord);
}

}  // namespace detail

/// Reduced Gröbner basis (monic, sorted increasingly by leading monomial).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(MonomialOrder ord, std::vector<detail::OPoly> basis, std::size_t nvars)
      : ord_(std::move(ord)), basis_(std::move(basis)), n_(nvars) {}

  const MonomialOrder& order() const { return ord_; }
  std::size_t nvars() const { return n_; }
  std::size_t size() const { return basis_.size(); }

  std::vector<Polynomial> generators() const {
    std::vector<Polynomial> out;
    for (const auto& g : basis_) out.push_back(detail::from_ordered(g, n_));
    return out;
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : basis_) out.push_back(g[0].m);
    return out;
  }
  Polynomial normal_form(const Polynomial& f) const {
    if (f.nvars() != n_) throw std::invalid_argument("normal_form: variable count mismatch");
    return detail::from_ordered(detail::reduce(detail::to_ordered(f, ord_), basis_, ord_), n_);
  }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains_all(std::span<const Polynomial> fs) const {
    return std::all_of(fs.begin(), fs.end(), [&](const Polynomial& f) { return contains(f); });
  }
  bool is_unit() const { return basis_.size() == 1 && degree(basis_[0][0].m) == 0; }
  bool is_zero_ideal() const { return basis_.empty(); }

  /// Is x^m in the initial ideal?
  bool in_initial(const Monomial& m) const {
    return std::any_of(basis_.begin(), basis_.end(), [&](const detail::OPoly& g) { return divides(g[0].m, m); });
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.generators() == b.generators(); }

 private:
  MonomialOrder ord_;
  std::vector<detail::OPoly> basis_;
  std::size_t n_ = 0;
};

inline GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  using detail::OPoly;
  const std::size_t n = ord.nvars();
  if (!ord.is_global()) throw std::invalid_argument("buchberger: order is not a well-order");
  std::vector<OPoly> g;
  for (const auto& f : gens) {
    if (f.nvars() != n) throw std::invalid_argument("buchberger: variable count mismatch");
    auto p = detail::reduce(detail::to_ordered(f, ord), g, ord);
    if (p.empty()) continue;
    detail::make_monic(p);
    g.push_back(std::move(p));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  std::vector<std::vector<bool>> pending;
  auto grow = [&] {
    for (auto& row : pending) row.resize(g.size(), false);
    pending.resize(g.size(), std::vector<bool>(g.size(), false));
  };
  grow();
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (g[i].empty()) continue;
      pairs.push_back({i, k, lcm(g[i][0].m, g[k][0].m)});
      pending[i][k] = pending[k][i] = true;
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) add_pairs_for(k);

  while (!pairs.empty()) {
    // normal strategy: smallest lcm first
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p)
      if (ord.less(pairs[p].lcm, pairs[best].lcm)) best = p;
    Pair pr = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();
    pending[pr.i][pr.j] = pending[pr.j][pr.i] = false;
    if (g[pr.i].empty() || g[pr.j].empty()) continue;

    if (coprime(g[pr.i][0].m, g[pr.j][0].m)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || g[k].empty()) continue;
      if (divides(g[k][0].m, pr.lcm) && !pending[pr.i][k] && !pending[pr.j][k]) chain = true;
    }
    if (chain) continue;

    auto s = detail::reduce(detail::spoly(g[pr.i], g[pr.j], ord), g, ord);
    if (s.empty()) continue;
    detail::make_monic(s);
    g.push_back(std::move(s));
    grow();
    add_pairs_for(g.size() - 1);
  }

  // minimal, then reduced
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].empty()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || g[j].empty()) continue;
      if (divides(g[j][0].m, g[i][0].m) && (g[j][0].m != g[i][0].m || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    OPoly tail(minimal[i].begin() + 1, minimal[i].end());
    OPoly red = detail::reduce(std::move(tail), minimal, ord, i);
    red.insert(red.begin(), minimal[i][0]);
    minimal[i] = std::move(red);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const OPoly& a, const OPoly& b) { return ord.less(a[0].m, b[0].m); });
  return GroebnerBasis(ord, std::move(minimal), n);
}

// --- ideal operations -------------------------------------------------------------

/// I ∩ K[kept variables], with the eliminated variables removed from the ring.
inline std::vector<Polynomial> eliminate(std::span<const Polynomial> gens, std::size_t nvars,
                                         std::span<const std::size_t> drop) {
  auto gb = buchberger(gens, MonomialOrder::elimination(nvars, drop));
  std::vector<bool> dropped(nvars);
  for (auto i : drop) dropped[i] = true;
  std::vector<long> map(nvars, -1);
  std::size_t next = 0;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!dropped[i]) map[i] = static_cast<long>(next++);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    auto vars = g.variables();
    if (std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return dropped[v]; })) continue;
    out.push_back(remap(g, next, map));
  }
  return out;
}

/// (I : f^∞) via elimination of y from (I, 1 - y·f).
inline std::vector<Polynomial> saturation(std::span<const Polynomial> gens, const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<Polynomial> ext;
  for (const auto& g : gens) ext.push_back(extend(g, 1));
  ext.push_back(Polynomial::constant(n + 1, 1) - Polynomial::variable(n + 1, n) * extend(f, 1));
  std::vector<std::size_t> drop{n};
  return eliminate(ext, n + 1, drop);
}

/// f ∈ rad(I), via 1 ∈ (I, 1 - y·f).
inline bool radical_membership(const Polynomial& f, std::span<const Polynomial> gens) {
  const std::size_t n = f.nvars();
  if (f.is_zero()) return true;
  auto gb = buchberger(gens, MonomialOrder::grevlex(n));
  Polynomial p = f;
  for (int k = 1; k <= 3; ++k, p = p * f)
    if (gb.contains(p)) return true;
  std::vector<Polynomial> ext;
  for (const auto& g : gens) ext.push_back(extend(g, 1));
  ext.push_back(Polynomial::constant(n + 1, 1) - Polynomial::variable(n + 1, n) * extend(f, 1));
  return buchberger(ext, MonomialOrder::grevlex(n + 1)).is_unit();
}

inline std::vector<Polynomial> intersect_ideals(std::span<const Polynomial> a, std::span<const Polynomial> b,
                                                std::size_t nvars) {
  std::vector<Polynomial> ext;
  Polynomial t = Polynomial::variable(nvars + 1, nvars);
  Polynomial one_minus_t = Polynomial::constant(nvars + 1, 1) - t;
  for (const auto& f : a) ext.push_back(t * extend(f, 1));
  for (const auto& f : b) ext.push_back(one_minus_t * extend(f, 1));
  std::vector<std::size_t> drop{nvars};
  return eliminate(ext, nvars + 1, drop);
}

inline bool ideal_contains(std::span<const Polynomial> big, std::span<const Polynomial> small, std::size_t nvars) {
  auto gb = buchberger(big, MonomialOrder::grevlex(nvars));
  return gb.contains_all(small);
}

inline bool ideals_equal(std::span<const Polynomial> a, std::span<const Polynomial> b, std::size_t nvars) {
  return buchberger(a, MonomialOrder::grevlex(nvars)) == buchberger(b, MonomialOrder::grevlex(nvars));
}

/// Product of all variables.
inline Polynomial all_variables(std::size_t n) {
  Monomial m(n, 1);
  return Polynomial::term(m, 1);
}

/// x^{m+} - x^{m-}
inline Polynomial lattice_binomial(std::span<const Integer> m) {
  Monomial plus(m.size()), minus(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].fits_sint_p()) throw std::overflow_error("lattice_binomial: exponent too large");
    int e = static_cast<int>(m[i].get_si());
    (e > 0 ? plus[i] : minus[i]) = std::abs(e);
  }
  return Polynomial::binomial(plus, minus);
}

/// I_L = (x^{m+} - x^{m-} : m in a basis of L) : (∏ x)^∞.
inline std::vector<Polynomial> lattice_ideal(const Lattice& l) {
  const std::size_t n = l.ambient_dim();
  std::vector<Polynomial> gens;
  for (const auto& m : l.basis_vectors()) gens.push_back(lattice_binomial(m));
  if (gens.empty()) return {};
  return saturation(gens, all_variables(n));
}

/// Kernel of x_a ↦ t^{p_a}, by eliminating t (and one inversion variable w
/// when some coordinate is negative) from (x_a - t^{p_a + m_a·1}·w^{m_a}, w·t_1⋯t_d - 1).
inline std::vector<Polynomial> toric_ideal(const VectorConfig& cfg) {
  const std::size_t n = cfg.size(), d = cfg.ambient_dim();
  bool negative = false;
  for (const auto& p : cfg.points())
    for (const auto& x : p)
      if (x < 0) negative = true;
  const std::size_t total = n + d + (negative ? 1 : 0);
  std::vector<Polynomial> gens;
  for (std::size_t a = 0; a < n; ++a) {
    long shift = 0;
    for (const auto& x : cfg[a]) shift = std::max(shift, -x.get_si());
    Monomial lhs(total), rhs(total);
    lhs[a] = 1;
    if (negative) rhs[n + d] = static_cast<int>(shift);
    for (std::size_t j = 0; j < d; ++j) rhs[n + j] = static_cast<int>(cfg[a][j].get_si() + shift);
    gens.push_back(Polynomial::binomial(lhs, rhs));
  }
  if (negative) {
    Monomial all(total);
    for (std::size_t j = 0; j < d; ++j) all[n + j] = 1;
    all[n + d] = 1;
    gens.push_back(Polynomial::binomial(all, Monomial(total)));
  }
  std::vector<std::size_t> drop;
  for (std::size_t j = n; j < total; ++j) drop.push_back(j);
  return normalized(eliminate(gens, total, drop));
}

// --- initial ideals ---------------------------------------------------------------

namespace detail {

inline bool all_homogeneous(std::span<const Polynomial> gens, std::span<const long> grading) {
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& f) { return f.is_homogeneous(grading); });
}

/// Order refining ω on ideals homogeneous for the positive grading g:
/// ω + c·g is positive for c large and induces the same initial forms.
inline MonomialOrder shifted_weight_order(std::span<const Rational> w, std::span<const long> g) {
  std::vector<long> ws = MonomialOrder::scaled(w);
  long c = 0;
  for (std::size_t i = 0; i < ws.size(); ++i)
    while (ws[i] + c * g[i] <= 0) ++c;
  std::vector<long> row(ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) row[i] = ws[i] + c * g[i];
  return MonomialOrder(ws.size(), {row, std::vector<long>(g.begin(), g.end())}, Tiebreak::revlex);
}

inline Polynomial homogenize(const Polynomial& f) {
  const std::size_t n = f.nvars();
  int deg = f.total_degree();
  Polynomial out(n + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial e(m);
    e.push_back(deg - degree(m));
    out.add_term(e, c);
  }
  return out;
}

}  // namespace detail

/// Gröbner basis for an order refining ω (max convention). Homogeneous input
/// (for `grading`, default standard) is handled by a positive shift of ω;
/// otherwise the ideal is homogenized first and the result dehomogenized.
inline std::vector<Polynomial> initial_ideal(std::span<const Rational> w, std::span<const Polynomial> gens,
                                             std::optional<std::vector<long>> grading = std::nullopt) {
  const std::size_t n = w.size();
  std::vector<long> g = grading ? *grading : std::vector<long>(n, 1);
  bool positive = std::all_of(g.begin(), g.end(), [](long x) { return x > 0; });
  std::vector<Polynomial> out;
  if (positive && detail::all_homogeneous(gens, g)) {
    auto gb = buchberger(gens, detail::shifted_weight_order(w, g));
    for (const auto& f : gb.generators()) out.push_back(initial_poly(w, f));
  } else {
    // I^h from a degree-compatible basis, then ini_(ω,0) of I^h, then h ↦ 1
    auto gb = buchberger(gens, MonomialOrder::grevlex(n));
    std::vector<Polynomial> hom;
    for (const auto& f : gb.generators()) hom.push_back(detail::homogenize(f));
    std::vector<Rational> wh(w.begin(), w.end());
    wh.push_back(0);
    std::vector<long> ones(n + 1, 1);
    auto gbh = buchberger(hom, detail::shifted_weight_order(wh, ones));
    for (const auto& f : gbh.generators()) {
      auto in = initial_poly(wh, f);
      Polynomial d(n);
      for (const auto& [m, c] : in.terms()) d.add_term(Monomial(m.begin(), m.end() - 1), c);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return normalized(std::move(out));
}

/// Monomial ideal generated by leading monomials of `gens` when every
/// generator is a single term.
inline bool is_monomial_ideal_generators(std::span<const Polynomial> gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& f) { return f.size() == 1; });
}

// --- Hilbert functions --------------------------------------------------------------

namespace detail {

inline void for_each_monomial_of_degree(std::span<const long> g, long target, std::size_t i, Monomial& m,
                                        const std::function<void(const Monomial&)>& f) {
  if (i == g.size()) {
    if (target == 0) f(m);
    return;
  }
  for (long e = 0; e * g[i] <= target; ++e) {
    m[i] = static_cast<int>(e);
    for_each_monomial_of_degree(g, target - e * g[i], i + 1, m, f);
  }
  m[i] = 0;
}

}  // namespace detail

/// dim_K (K[x]/I)_n for an ideal homogeneous w.r.t. the positive grading.
inline long hilbert_function(std::span<const Polynomial> gens, std::span<const long> grading, long n) {
  if (!detail::all_homogeneous(gens, grading)) throw std::invalid_argument("hilbert_function: ideal not homogeneous");
  for (long x : grading)
    if (x <= 0) throw std::invalid_argument("hilbert_function: grading must be positive");
  if (n < 0) return 0;
  auto gb = buchberger(gens, MonomialOrder::graded(grading));
  long count = 0;
  Monomial m(grading.size());
  detail::for_each_monomial_of_degree(grading, n, 0, m, [&](const Monomial& x) {
    if (!gb.in_initial(x)) ++count;
  });
  return count;
}

/// Hilbert function values 0..nmax from one Gröbner basis.
inline std::vector<long> hilbert_series_prefix(std::span<const Polynomial> gens, std::span<const long> grading,
                                               long nmax) {
  if (!detail::all_homogeneous(gens, grading)) throw std::invalid_argument("hilbert_function: ideal not homogeneous");
  auto gb = buchberger(gens, MonomialOrder::graded(grading));
  std::vector<long> out;
  Monomial m(grading.size());
  for (long n = 0; n <= nmax; ++n) {
    long count = 0;
    detail::for_each_monomial_of_degree(grading, n, 0, m, [&](const Monomial& x) {
      if (!gb.in_initial(x)) ++count;
    });
    out.push_back(count);
  }
  return out;
}

// --- text format ------------------------------------------------------------------

inline std::string monomial_string(const Monomial& m, std::span<const std::string> names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// Terms in decreasing lex order: "x0*x2 - x1^2", "3/2*x0 + 1".
inline std::string to_string(const Polynomial& f, std::span<const std::string> names) {
  if (names.size() != f.nvars()) throw std::invalid_argument("to_string: wrong number of variable names");
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational a = c;
    a.canonicalize();
    bool neg = a < 0;
    if (neg) a = -a;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    bool unit_monomial = degree(m) == 0;
    if (a != 1 || unit_monomial) {
      s += to_string(a);
      if (!unit_monomial) s += "*";
    }
    if (!unit_monomial) s += monomial_string(m, names);
  }
  return s;
}

inline std::vector<std::string> default_names(std::size_t n, const std::string& prefix = "x") {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

/// Parses the format written by to_string; variables are looked up in `names`.
inline Polynomial parse_polynomial(const std::string& text, std::span<const std::string> names) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  const std::size_t n = names.size();
  Polynomial out(n);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_polynomial: " + why + " at position " + std::to_string(pos) + " in '" +
                                text + "'");
  };
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto is_name_char = [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '(' || ch == ')' ||
           ch == ',' || ch == '[' || ch == ']';
  };
  skip_ws();
  if (text.substr(pos) == "0") return out;
  bool any = false;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (any) {
      fail("expected + or -");
    }
    any = true;
    Rational coef = 1;
    Monomial m(n);
    bool have_factor = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      try {
        coef = Rational(text.substr(start, pos - start));
        coef.canonicalize();
      } catch (const std::exception&) {
        fail("bad coefficient");
      }
      have_factor = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        have_factor = false;
      }
    }
    while (!have_factor || (pos < text.size() && text[pos] == '*')) {
      if (have_factor) ++pos;
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && is_name_char(text[pos])) ++pos;
      std::string name = text.substr(start, pos - start);
      auto it = index.find(name);
      if (it == index.end()) fail("unknown variable '" + name + "'");
      int e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t s2 = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (s2 == pos) fail("missing exponent");
        e = std::stoi(text.substr(s2, pos - s2));
      }
      m[it->second] += e;
      have_factor = true;
      skip_ws();
    }
    out.add_term(m, sign * coef);
  }
  if (!any) fail("empty polynomial");
  return out;
}

}  // namespace toric
