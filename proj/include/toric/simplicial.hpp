#pragma once

// Abstract simplicial complexes on the vertex set {1, ..., n}.

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Simplex = std::vector<int>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// All subsets of the given facets (and the empty face).
  static SimplicialComplex from_facets(int nverts, const std::vector<Simplex>& facets) {
    SimplicialComplex c(nverts);
    c.faces_.insert(Simplex{});
    for (auto f : facets) {
      c.check_simplex(f);
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw std::invalid_argument("SimplicialComplex: repeated vertex in a facet");
      const std::size_t k = f.size();
      if (k > 30) throw std::invalid_argument("SimplicialComplex: facet too large");
      for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < k; ++i)
          if (mask >> i & 1) s.push_back(f[i]);
        c.faces_.insert(std::move(s));
      }
    }
    return c;
  }

  /// Explicit face list; rejected unless closed under taking subsets.
  static SimplicialComplex from_faces(int nverts, const std::vector<Simplex>& faces) {
    SimplicialComplex c(nverts);
    for (auto f : faces) {
      c.check_simplex(f);
      std::sort(f.begin(), f.end());
      c.faces_.insert(std::move(f));
    }
    for (const auto& f : c.faces_)
      for (std::size_t i = 0; i < f.size(); ++i) {
        Simplex g = f;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
        if (!c.faces_.count(g))
          throw std::invalid_argument("SimplicialComplex: not closed under subsets (" + to_string(g) +
                                      " missing below " + to_string(f) + ")");
      }
    return c;
  }

  /// Full simplex on {1..n}.
  static SimplicialComplex simplex(int nverts) {
    Simplex all(static_cast<std::size_t>(nverts));
    for (int i = 0; i < nverts; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return from_facets(nverts, {all});
  }

  /// Proper subsets of {1..n}.
  static SimplicialComplex boundary(int nverts) {
    std::vector<Simplex> facets;
    for (int skip = 1; skip <= nverts; ++skip) {
      Simplex f;
      for (int i = 1; i <= nverts; ++i)
        if (i != skip) f.push_back(i);
      facets.push_back(f);
    }
    return from_facets(nverts, facets);
  }

  int vertex_count() const { return n_; }
  const std::set<Simplex>& faces() const { return faces_; }
  bool contains(Simplex f) const {
    std::sort(f.begin(), f.end());
    return faces_.count(f) > 0;
  }
  std::size_t size() const { return faces_.size(); }

  std::vector<Simplex> facets() const {
    std::vector<Simplex> out;
    for (const auto& f : faces_) {
      bool maximal = true;
      for (const auto& g : faces_)
        if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(f);
    }
    return out;
  }

  /// Vertices occurring in some face.
  std::vector<int> used_vertices() const {
    std::set<int> v;
    for (const auto& f : faces_) v.insert(f.begin(), f.end());
    return {v.begin(), v.end()};
  }

  /// Minimal subsets of the used vertices that are not faces.
  std::vector<Simplex> minimal_nonfaces() const {
    std::vector<Simplex> out;
    auto verts = used_vertices();
    std::vector<Simplex> level{Simplex{}};
    // a minimal nonface has all its codimension-one subsets in the complex
    for (std::size_t size = 1; size <= verts.size() && !level.empty(); ++size) {
      std::vector<Simplex> next;
      std::set<Simplex> tried;
      for (const auto& f : level)
        for (int v : verts) {
          if (!f.empty() && v <= f.back()) continue;
          Simplex g = f;
          g.push_back(v);
          if (!tried.insert(g).second) continue;
          if (faces_.count(g)) {
            next.push_back(g);
            continue;
          }
          bool minimal = true;
          for (std::size_t i = 0; i < g.size() && minimal; ++i) {
            Simplex h = g;
            h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
            if (!faces_.count(h)) minimal = false;
          }
          if (minimal) out.push_back(g);
        }
      level = std::move(next);
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) = default;

  static std::string to_string(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  }

 private:
  explicit SimplicialComplex(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("SimplicialComplex: negative vertex count");
  }
  void check_simplex(const Simplex& f) const {
    for (int v : f)
      if (v < 1 || v > n_)
        throw std::invalid_argument("SimplicialComplex: vertex " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n_));
  }

  int n_ = 0;
  std::set<Simplex> faces_;
};

}  // namespace toric
