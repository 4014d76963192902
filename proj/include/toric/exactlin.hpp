#pragma once

// Exact integer/rational linear algebra: dense matrices over GMP numbers,
// Hermite and Smith normal forms, integer kernels and lattice saturation.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Stacks the given vectors as rows; all must have length `cols`.
  static Matrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<std::vector<T>> row_list() const {
    std::vector<std::vector<T>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& f) {
    if (f == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += f * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const T& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += f * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      T s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

inline RatVec to_rational(std::span<const Integer> v) { return RatVec(v.begin(), v.end()); }

inline Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline Rational dot(std::span<const Rational> a, std::span<const Integer> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline IntVec primitive(IntVec v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

/// Clears denominators and divides by the content, preserving the direction.
inline IntVec primitive(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
  }
  return primitive(std::move(out));
}

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline std::string to_string(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

inline std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

// --- Gaussian elimination over Q -------------------------------------------

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) m.add_row(i, r, -m(i, c));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

inline std::size_t rank(std::span<const IntVec> vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, dim));
}

inline bool linearly_independent(std::span<const IntVec> vectors, std::size_t dim) {
  return rank(vectors, dim) == vectors.size();
}

/// Some solution of A·x = b, or nothing if the system is inconsistent.
/// Free variables are set to zero.
inline std::optional<RatVec> solve_rational(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

/// Rational basis of {x : A·x = 0}.
inline std::vector<RatVec> nullspace(const RatMatrix& a) {
  RatMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  RatMatrix m = a;
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i)
      if (m(i, c) != 0) m.add_row(i, c, -m(i, c) / m(c, c));
  }
  return det;
}

inline Integer determinant(const IntMatrix& a) {
  Rational d = determinant(to_rational(a));
  return d.get_num();
}

// --- Integer normal forms -----------------------------------------------------

struct HermiteResult {
  IntMatrix H;  // row Hermite normal form
  IntMatrix U;  // unimodular, U·M = H
};

/// Row-style Hermite normal form: echelon shape, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are at the bottom.
inline HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t p = 0;
  for (std::size_t c = 0; c < h.cols() && p < h.rows(); ++c) {
    for (std::size_t i = p + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Integer a = h(p, c), b = h(i, c);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      for (std::size_t j = 0; j < h.cols(); ++j) {
        Integer x = h(p, j), y = h(i, j);
        h(p, j) = s * x + t * y;
        h(i, j) = ag * y - bg * x;
      }
      for (std::size_t j = 0; j < u.cols(); ++j) {
        Integer x = u(p, j), y = u(i, j);
        u(p, j) = s * x + t * y;
        u(i, j) = ag * y - bg * x;
      }
    }
    if (h(p, c) == 0) continue;
    if (h(p, c) < 0) {
      h.negate_row(p);
      u.negate_row(p);
    }
    for (std::size_t k = 0; k < p; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(k, c).get_mpz_t(), h(p, c).get_mpz_t());
      if (q != 0) {
        h.add_row(k, p, -q);
        u.add_row(k, p, -q);
      }
    }
    ++p;
  }
  return {std::move(h), std::move(u)};
}

struct SmithResult {
  IntMatrix S;  // diagonal, d_1 | d_2 | ..., d_i >= 0
  IntMatrix U;  // unimodular rows
  IntMatrix V;  // unimodular columns; U·M·V = S
};

inline SmithResult smith_normal_form(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(s.rows(), s.cols());

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j)
          if (s(i, j) != 0 && (!best || abs(s(i, j)) < abs(s(best->first, best->second))))
            best = std::make_pair(i, j);
      if (!best) break;
      s.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      s.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < s.rows() && !bad; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      s.add_row(t, *bad, 1);
      u.add_row(t, *bad, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

/// Basis (as rows, in Hermite normal form) of the integer kernel {u : M·u = 0}.
/// The kernel lattice is saturated by construction.
inline IntMatrix kernel_basis(const IntMatrix& m) {
  auto [h, u] = hermite_normal_form(m.transpose());
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) rows.push_back(u.row(i));
  }
  if (rows.empty()) return IntMatrix(0, m.cols());
  return hermite_normal_form(IntMatrix::from_rows(rows, m.cols())).H;
}

// --- Lattices -------------------------------------------------------------------

/// Sublattice of Z^n stored by its canonical (Hermite) basis.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient) : basis_(0, ambient) {}

  /// Lattice spanned by arbitrary (possibly dependent) generators.
  static Lattice span(std::span<const IntVec> generators, std::size_t ambient) {
    Lattice l(ambient);
    if (generators.empty()) return l;
    l.basis_ = strip_zero_rows(hermite_normal_form(IntMatrix::from_rows(generators, ambient)).H);
    return l;
  }
  static Lattice span(const IntMatrix& rows) {
    Lattice l(rows.cols());
    if (rows.rows() == 0) return l;
    l.basis_ = strip_zero_rows(hermite_normal_form(rows).H);
    return l;
  }

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::vector<IntVec> basis_vectors() const { return basis_.row_list(); }

  bool contains(std::span<const Integer> x) const {
    if (rank() == 0) return is_zero(x);
    // x ∈ L iff the Hermite basis of L + <x> is unchanged
    std::vector<IntVec> rows = basis_vectors();
    rows.emplace_back(x.begin(), x.end());
    return span(rows, ambient_dim()) == *this;
  }

  /// Z^n / L is torsion-free.
  bool is_saturated() const {
    if (rank() == 0) return true;
    auto snf = smith_normal_form(basis_);
    for (std::size_t i = 0; i < rank(); ++i)
      if (snf.S(i, i) != 1) return false;
    return true;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  static IntMatrix strip_zero_rows(const IntMatrix& h) {
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      auto r = h.row(i);
      if (!is_zero(r)) rows.push_back(std::move(r));
    }
    if (rows.empty()) return IntMatrix(0, h.cols());
    return IntMatrix::from_rows(rows, h.cols());
  }

  IntMatrix basis_;
};

/// Smallest L' ⊇ L with Z^n/L' torsion-free, read off the Smith form:
/// if U·B·V = S then B = U⁻¹·S·V⁻¹ and the first rank(B) rows of V⁻¹ span
/// the rational row space of B inside a basis of Z^n.
inline Lattice saturate_lattice(const Lattice& l) {
  if (l.rank() == 0) return l;
  auto snf = smith_normal_form(l.basis());
  auto vinv = inverse(to_rational(snf.V));
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    IntVec r(l.ambient_dim());
    for (std::size_t j = 0; j < l.ambient_dim(); ++j) r[j] = (*vinv)(i, j).get_num();
    rows.push_back(std::move(r));
  }
  return Lattice::span(rows, l.ambient_dim());
}

}  // namespace toric
