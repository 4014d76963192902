#include "toric/subdivision.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace toric;

namespace {

VectorConfig cfg(std::vector<std::vector<long>> pts, std::size_t d) { return VectorConfig::from_ints(pts, d); }

Weights weights(std::vector<long> w) { return {w.begin(), w.end()}; }

std::set<IndexSet> maximal(const std::set<IndexSet>& faces) {
  std::set<IndexSet> out;
  for (const auto& f : faces) {
    bool covered = false;
    for (const auto& g : faces)
      if (g != f && std::includes(g.begin(), g.end(), f.begin(), f.end())) covered = true;
    if (!covered) out.insert(f);
  }
  return out;
}

VectorConfig random_graded(std::mt19937& rng, std::size_t d, std::size_t n) {
  std::uniform_int_distribution<long> coord(0, 2), last(1, 2);
  std::vector<IntVec> pts;
  int guard = 0;
  while (pts.size() < n && ++guard < 1000) {
    IntVec p(d);
    for (std::size_t j = 0; j + 1 < d; ++j) p[j] = coord(rng);
    p[d - 1] = last(rng);
    if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
    pts.push_back(p);
  }
  return VectorConfig(pts, d);
}

VectorConfig random_any(std::mt19937& rng, std::size_t d, std::size_t n) {
  std::uniform_int_distribution<long> coord(-2, 2);
  std::vector<IntVec> pts;
  int guard = 0;
  while (pts.size() < n && ++guard < 1000) {
    IntVec p(d);
    for (auto& x : p) x = coord(rng);
    if (is_zero(p) || std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
    pts.push_back(p);
  }
  return VectorConfig(pts, d);
}

Weights random_weights(std::mt19937& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> w(lo, hi);
  Weights out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(w(rng));
  return out;
}

// Faces of sd_ω T straight from the definition, with the supporting-form oracle.
std::set<IndexSet> oracle_sd(const ToricComplex& t, const Weights& w) {
  std::set<IndexSet> out;
  for (auto& f : oracle::all_subsets(t.generator_count())) {
    IndexSet carrier;
    bool first = true;
    for (const auto& g : t.faces()) {
      if (!std::includes(g.gens.begin(), g.gens.end(), f.begin(), f.end())) continue;
      if (first) {
        carrier = g.gens;
        first = false;
      } else {
        IndexSet meet;
        std::set_intersection(carrier.begin(), carrier.end(), g.gens.begin(), g.gens.end(), std::back_inserter(meet));
        carrier = meet;
      }
    }
    if (first) continue;
    std::vector<IntVec> pts;
    std::vector<Rational> wl;
    IndexSet local;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      pts.push_back(t.coords(carrier[i]));
      wl.push_back(w[carrier[i]]);
      if (std::binary_search(f.begin(), f.end(), carrier[i])) local.push_back(i);
    }
    if (oracle::supported(pts, wl, local, t.ambient_dim())) out.insert(f);
  }
  return out;
}

// Every small lattice point of cone(T) lies in the cone of some face of sd.
bool oracle_covers(const ToricComplex& t, const std::set<IndexSet>& sd) {
  const std::size_t d = t.ambient_dim();
  bool ok = true;
  for (const auto& g : t.faces()) {
    if (g.gens.empty()) continue;
    oracle::for_each_box(d, 3, [&](const IntVec& x) {
      if (!ok || !oracle::in_cone(g.coords, x)) return;
      bool hit = false;
      for (const auto& f : sd) {
        if (!std::includes(g.gens.begin(), g.gens.end(), f.begin(), f.end())) continue;
        std::vector<IntVec> pts;
        for (auto a : f) pts.push_back(t.coords(a));
        if (pts.empty() ? is_zero(x) : oracle::in_cone(pts, x)) {
          hit = true;
          break;
        }
      }
      if (!hit) ok = false;
    });
  }
  return ok;
}

}  // namespace

TEST(SdOmega, EmptyExample) {
  auto t = from_config(cfg({{-1}, {1}}, 1));
  auto res = sd_omega(t, weights({-1, -1}));
  EXPECT_EQ(res.complex.face_count(), 0u);
  EXPECT_EQ(res.classification, Classification::partial);
  EXPECT_FALSE(res.regular);

  auto pos = sd_omega(t, weights({1, 1}));
  EXPECT_EQ(pos.faces_in(t), (std::set<IndexSet>{{}, {0}, {1}}));
  EXPECT_EQ(pos.classification, Classification::triangulation);
}

TEST(SdOmega, ThreePointExamples) {
  auto t = from_config(cfg({{0, 1}, {1, 1}, {2, 1}}, 2));
  auto a = sd_omega(t, weights({0, -1, 0}));
  EXPECT_EQ(maximal(a.faces_in(t)), (std::set<IndexSet>{{0, 1}, {1, 2}}));
  EXPECT_EQ(a.classification, Classification::triangulation);

  auto b = sd_omega(t, weights({0, 1, 0}));
  EXPECT_EQ(maximal(b.faces_in(t)), (std::set<IndexSet>{{0, 2}}));
  EXPECT_TRUE(b.regular);
  EXPECT_EQ(b.complex.generator_count(), 2u);

  auto c = sd_omega(t, weights({0, 0, 0}));
  EXPECT_EQ(c.faces_in(t), t.face_sets());
  EXPECT_EQ(c.classification, Classification::subdivision);
}

TEST(SdOmega, RandomGradedAgreesWithOracle) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 2 + trial % 2;
    auto t = from_config(random_graded(rng, d, 3 + rng() % 4));
    auto w = random_weights(rng, t.generator_count(), -3, 3);
    auto res = sd_omega(t, w);
    EXPECT_TRUE(validate(res.complex).ok());
    EXPECT_TRUE(verify_certificates(t, w, res));
    EXPECT_EQ(res.faces_in(t), oracle_sd(t, w));
    // N-graded complexes always give subdivisions
    EXPECT_TRUE(res.regular) << res.witness;
    EXPECT_TRUE(oracle_covers(t, res.faces_in(t)));
  }
}

TEST(SdOmega, RandomUngradedClassification) {
  std::mt19937 rng(23);
  int partial = 0, regular = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto t = from_config(random_any(rng, 2, 2 + rng() % 3));
    auto w = random_weights(rng, t.generator_count(), -2, 2);
    auto res = sd_omega(t, w);
    EXPECT_TRUE(validate(res.complex).ok());
    EXPECT_EQ(res.faces_in(t), oracle_sd(t, w));
    EXPECT_EQ(res.regular, oracle_covers(t, res.faces_in(t))) << res.witness;
    (res.regular ? regular : partial)++;
    auto positive = random_weights(rng, t.generator_count(), 1, 3);
    EXPECT_TRUE(sd_omega(t, positive).regular);
  }
  EXPECT_GT(partial, 0);
  EXPECT_GT(regular, 0);
}

TEST(SdOmega, SubcomplexesRestrict) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    auto t = from_config(random_graded(rng, 3, 4 + rng() % 2));
    auto w = random_weights(rng, t.generator_count(), -3, 3);
    auto whole = sd_omega(t, w);
    for (const auto& f : t.faces()) {
      if (f.gens.size() != 2 || rank(f.coords, 3) != 2) continue;
      auto s = closure(t, {f.gens});
      Weights ws;
      for (const auto& id : s.ids()) ws.push_back(w[*t.index_of(id)]);
      auto part = sd_omega(s, ws);
      auto sub = part.complex.face_id_sets();
      auto all = whole.complex.face_id_sets();
      EXPECT_TRUE(std::includes(all.begin(), all.end(), sub.begin(), sub.end()));
      EXPECT_NO_THROW(subcomplex(whole.complex, sub));
      EXPECT_TRUE(part.regular);
    }
  }
}

TEST(SdOmega, NonEmbedded) {
  std::vector<Face> faces{{{}, 1, {}},
                          {{0}, 1, {{1}}},
                          {{1}, 1, {{1}}},
                          {{2}, 1, {{1}}},
                          {{0, 1}, 2, {{1, 1}, {0, 1}}},
                          {{1, 2}, 2, {{1, 1}, {0, 1}}}};
  std::map<std::pair<IndexSet, IndexSet>, IntMatrix> inc;
  auto col = [](long a, long b) { return IntMatrix::from_rows(std::vector<IntVec>{{a}, {b}}, 1); };
  inc[{{0}, {0, 1}}] = col(1, 1);
  inc[{{1}, {0, 1}}] = col(0, 1);
  inc[{{1}, {1, 2}}] = col(1, 1);
  inc[{{2}, {1, 2}}] = col(0, 1);
  auto t = ToricComplex::general({"a", "b", "c"}, faces, inc);
  ASSERT_TRUE(validate(t).ok());
  auto res = sd_omega(t, weights({0, 5, 0}));
  EXPECT_TRUE(validate(res.complex).ok());
  EXPECT_EQ(res.faces_in(t), t.face_sets());
  EXPECT_EQ(res.classification, Classification::triangulation);
}

TEST(Stellar, Examples) {
  auto c = cfg({{1, 0}, {0, 1}, {1, 1}}, 2);
  auto s = stellar_config(c, 2);
  EXPECT_EQ(maximal(s.face_sets()), (std::set<IndexSet>{{0, 2}, {1, 2}}));
  EXPECT_TRUE(validate(s).ok());

  auto simplex = cfg({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(stellar_config(simplex, 0).face_sets(), from_config(simplex).face_sets());
  EXPECT_THROW(stellar_config(c, 5), std::invalid_argument);

  // square cone, subdivided at an interior point of an edge
  auto sq = cfg({{0, 0, 1}, {2, 0, 1}, {0, 1, 1}, {2, 1, 1}, {1, 0, 1}}, 3);
  auto st = stellar_config(sq, 4);
  EXPECT_TRUE(validate(st).ok());
  EXPECT_EQ(maximal(st.face_sets()), (std::set<IndexSet>{{0, 2, 4}, {2, 3, 4}, {1, 3, 4}}));
}

TEST(Stellar, ComplexWide) {
  auto t = from_fan({cfg({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, 3), cfg({{1, 0, 1}, {1, -1, 1}}, 3)},
                    GeneratorChoice::given);
  auto a = *t.index_of("x2");
  auto s = stellar_complex(t, a);
  EXPECT_TRUE(validate(s).ok());
  std::mt19937 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    auto tc = from_config(random_graded(rng, 3, 4 + rng() % 2));
    auto st = stellar_complex(tc, rng() % tc.generator_count());
    EXPECT_TRUE(validate(st).ok());
    EXPECT_EQ(st.generator_count(), tc.generator_count());
    EXPECT_TRUE(oracle_covers(tc, st.face_sets()));
  }
}

TEST(MainTheorem, Examples) {
  auto t = from_config(cfg({{0, 1}, {1, 1}, {2, 1}}, 2));
  auto a = verify_main_theorem(t, weights({0, -1, 0}));
  EXPECT_TRUE(a.ok) << a.witness;
  ASSERT_EQ(a.initial.size(), 1u);
  EXPECT_EQ(to_string(a.initial[0], t.ids()), "x0*x2");

  auto b = verify_main_theorem(t, weights({0, 1, 0}));
  EXPECT_TRUE(b.ok) << b.witness;
  ASSERT_EQ(b.initial.size(), 1u);
  EXPECT_EQ(to_string(b.initial[0], t.ids()), "x1^2");
  EXPECT_EQ(b.dropped, (std::vector<std::size_t>{1}));

  auto c = verify_main_theorem(t, weights({0, 0, 0}));
  EXPECT_TRUE(c.ok);
  EXPECT_TRUE(ideals_equal(c.initial, face_ring_ideal(t).generators(), 3));

  EXPECT_THROW(verify_main_theorem(from_config(cfg({{-1}, {1}}, 1)), weights({-1, -1})), std::invalid_argument);
}

TEST(MainTheorem, RandomGraded) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto t = from_config(random_graded(rng, 2 + trial % 2, 3 + rng() % 3));
    auto w = random_weights(rng, t.generator_count(), -3, 3);
    auto rep = verify_main_theorem(t, w);
    EXPECT_TRUE(rep.ok) << rep.witness;
  }
}

TEST(MainTheorem, Simplicial) {
  auto t = from_simplicial(SimplicialComplex::boundary(3));
  auto rep = verify_main_theorem(t, weights({1, -2, 3}));
  EXPECT_TRUE(rep.ok) << rep.witness;
}

TEST(TriangulationCor, Examples) {
  auto t = from_config(cfg({{0, 1}, {1, 1}, {2, 1}}, 2));
  auto a = verify_triangulation_cor(t, weights({0, -1, 0}));
  EXPECT_TRUE(a.ok);
  EXPECT_TRUE(a.square_free_monomial && a.triangulation);

  auto sq = from_config(cfg({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, 3));
  auto b = verify_triangulation_cor(sq, weights({0, 0, 0, 0}));
  EXPECT_TRUE(b.ok);
  EXPECT_FALSE(b.square_free_monomial);
  EXPECT_FALSE(b.triangulation);

  auto simp = from_simplicial(SimplicialComplex::boundary(3));
  auto c = verify_triangulation_cor(simp, weights({0, 0, 0}));
  EXPECT_TRUE(c.ok && c.square_free_monomial && c.triangulation);
}

TEST(UniquenessCor, Examples) {
  auto t = from_config(cfg({{0, 1}, {1, 1}, {2, 1}, {3, 1}}, 2));
  Weights w = weights({0, -1, 1, 0});
  Weights doubled = weights({0, -2, 2, 0});
  auto a = verify_uniqueness_cor(t, w, doubled);
  EXPECT_TRUE(a.ok && a.same_subdivision && a.same_radical);

  // add α∘T for α = (1, 2)
  Weights shifted;
  for (std::size_t i = 0; i < 4; ++i) shifted.push_back(w[i] + Rational(static_cast<long>(i) + 2));
  auto b = verify_uniqueness_cor(t, w, shifted);
  EXPECT_TRUE(b.ok && b.same_subdivision);

  auto three = from_config(cfg({{0, 1}, {1, 1}, {2, 1}}, 2));
  auto c = verify_uniqueness_cor(three, weights({0, -1, 0}), weights({0, 1, 0}));
  EXPECT_TRUE(c.ok);
  EXPECT_FALSE(c.same_subdivision);
  EXPECT_FALSE(c.same_radical);
}

TEST(UniquenessCor, RandomPairs) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 8; ++trial) {
    auto t = from_config(random_graded(rng, 2, 4));
    auto w1 = random_weights(rng, 4, -1, 1), w2 = random_weights(rng, 4, -1, 1);
    EXPECT_TRUE(verify_uniqueness_cor(t, w1, w2).ok);
  }
}

TEST(RadicalHypotheses, Examples) {
  auto t = from_config(cfg({{0, 1}, {1, 1}, {2, 1}}, 2));
  auto a = check_radical_hypotheses(t, weights({0, 1, 0}));
  EXPECT_FALSE(a.generators_equal);
  EXPECT_FALSE(a.radical);
  EXPECT_TRUE(a.ok);

  auto b = check_radical_hypotheses(t, weights({0, 0, 0}));
  EXPECT_TRUE(b.radical);
  EXPECT_TRUE(b.ok);

  auto c = check_radical_hypotheses(t, weights({0, -1, 0}));
  EXPECT_TRUE(c.generators_equal);
  EXPECT_EQ(c.integrally_closed, Verdict::yes);
  EXPECT_TRUE(c.radical);
}

TEST(RadicalHypotheses, NonNormalCell) {
  // (1,0,1),(1,2,1) span a cell missing (1,1,1)
  auto t = from_config(cfg({{1, 0, 1}, {1, 2, 1}, {1, 1, 1}, {0, 0, 1}}, 3));
  auto res = sd_omega(t, weights({0, 0, 1, 0}));
  ASSERT_TRUE(res.regular);
  auto rep = check_radical_hypotheses(t, weights({0, 0, 1, 0}));
  EXPECT_FALSE(rep.generators_equal);
  EXPECT_TRUE(rep.ok);
}
