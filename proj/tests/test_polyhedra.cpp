#include "toric/polyhedra.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace toric;

namespace {

VectorConfig cfg(std::vector<std::vector<long>> pts, std::size_t d) { return VectorConfig::from_ints(pts, d); }

std::vector<Rational> weights(std::vector<long> w) { return {w.begin(), w.end()}; }

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

std::set<IndexSet> oracle_faces(const VectorConfig& c) {
  std::set<IndexSet> out;
  std::vector<Rational> zero(c.size());
  for (auto& s : oracle::all_subsets(c.size()))
    if (oracle::supported(c.points(), zero, s, c.ambient_dim())) out.insert(s);
  return out;
}

std::set<IndexSet> oracle_lower(const VectorConfig& c, const std::vector<Rational>& w) {
  std::set<IndexSet> out;
  for (auto& s : oracle::all_subsets(c.size()))
    if (oracle::supported(c.points(), w, s, c.ambient_dim())) out.insert(s);
  return out;
}

VectorConfig random_config(std::mt19937& rng, std::size_t d, std::size_t n, int lo, int hi, bool graded) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::set<IntVec> seen;
  std::vector<IntVec> pts;
  while (pts.size() < n) {
    IntVec p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = dist(rng);
    if (graded) p[d - 1] = 1 + rng() % 2;
    if (is_zero(p) || !seen.insert(p).second) continue;
    pts.push_back(p);
  }
  return VectorConfig(pts, d);
}

bool same_direction(const IntVec& a, const IntVec& b) { return primitive(a) == primitive(b); }

}  // namespace

TEST(Config, RejectsZeroAndDuplicates) {
  EXPECT_THROW(cfg({{0, 0}}, 2), std::invalid_argument);
  EXPECT_THROW(cfg({{1, 0}, {1, 0}}, 2), std::invalid_argument);
}

TEST(Facets, Quadrant) {
  auto f = facets(cfg({{1, 0}, {0, 1}}, 2)).normals;
  ASSERT_EQ(f.size(), 2u);
  EXPECT_TRUE(same_direction(f[0], IntVec{-1, 0}) || same_direction(f[1], IntVec{-1, 0}));
  EXPECT_TRUE(same_direction(f[0], IntVec{0, -1}) || same_direction(f[1], IntVec{0, -1}));
  EXPECT_EQ(facets(cfg({{1, 0}, {0, 1}, {1, 1}}, 2)).normals, f);
}

TEST(Facets, Line) {
  auto f = facets(cfg({{1, 0}, {-1, 0}}, 2)).normals;
  std::set<IntVec> got(f.begin(), f.end());
  EXPECT_EQ(got, (std::set<IntVec>{{0, 1}, {0, -1}}));
}

TEST(Facets, RandomAgreeWithConeMembership) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = 2 + rng() % 2;
    auto c = random_config(rng, d, 2 + rng() % 4, -2, 2, false);
    auto normals = facets(c).normals;
    for (const auto& n : normals)
      for (const auto& p : c.points()) ASSERT_LE(dot(n, p), 0);
    oracle::for_each_box(d, 2, [&](const IntVec& x) {
      bool inside = std::all_of(normals.begin(), normals.end(), [&](const IntVec& n) { return dot(n, x) <= 0; });
      ASSERT_EQ(inside, oracle::in_cone(c.points(), x)) << to_string(x);
    });
  }
}

TEST(IsFace, Examples) {
  auto c = cfg({{1, 0}, {0, 1}, {1, 1}}, 2);
  EXPECT_FALSE(is_face(c, {2}));
  auto cert = is_face(c, {0});
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->alpha, (IntVec{0, -1}));
  auto all = is_face(c, {0, 1, 2});
  ASSERT_TRUE(all);
  EXPECT_TRUE(is_zero(all->alpha));
}

TEST(FacePoset, Examples) {
  EXPECT_EQ(face_poset(cfg({{1, 0}, {0, 1}, {1, 1}}, 2)), (std::set<IndexSet>{{}, {0}, {1}, {0, 1, 2}}));
  EXPECT_EQ(face_poset(cfg({{-1}, {1}}, 1)), (std::set<IndexSet>{{0, 1}}));
  EXPECT_EQ(face_poset(cfg({{1, 1}}, 2)), (std::set<IndexSet>{{}, {0}}));
}

TEST(FacePoset, RandomMatchesOracleAndClosure) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t d = 2 + rng() % 2;
    auto c = random_config(rng, d, 2 + rng() % 4, -2, 2, false);
    auto faces = face_poset(c);
    ASSERT_EQ(faces, oracle_faces(c));
    for (const auto& f : faces) {
      auto cert = is_face(c, f);
      ASSERT_TRUE(cert);
      ASSERT_EQ(cert->zero_set, f);
      for (const auto& p : c.points()) ASSERT_LE(dot(cert->alpha, p), 0);
      for (const auto& g : faces) {
        IndexSet h;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(h));
        ASSERT_TRUE(faces.count(h));
      }
    }
  }
}

TEST(LowerFaces, Examples) {
  auto c = cfg({{0, 1}, {1, 1}, {2, 1}}, 2);
  EXPECT_EQ(maximal(lower_faces(c, weights({0, -1, 0}))), (std::set<IndexSet>{{0, 1}, {1, 2}}));
  auto up = lower_faces(c, weights({0, 1, 0}));
  EXPECT_EQ(maximal(up), (std::set<IndexSet>{{0, 2}}));
  for (const auto& f : up) EXPECT_FALSE(std::count(f.begin(), f.end(), 1u));
  EXPECT_TRUE(lower_faces(cfg({{-1}, {1}}, 1), weights({-1, -1})).empty());
}

TEST(LowerFaces, RandomMatchOracleWithValidCertificates) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> wd(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 1 + rng() % 3;
    auto c = random_config(rng, d, 1 + rng() % (d == 1 ? 3 : 5), -2, 2, d > 1 && trial % 2 == 0);
    std::vector<Rational> w(c.size());
    for (auto& x : w) {
      x = Rational(wd(rng), 1 + rng() % 2);
      x.canonicalize();
    }
    auto certs = lower_face_certificates(c, w);
    std::set<IndexSet> got;
    for (const auto& cert : certs) {
      ASSERT_TRUE(verify_lower_certificate(c, w, cert));
      got.insert(cert.face);
    }
    ASSERT_EQ(got, oracle_lower(c, w));
    for (const auto& f : got)
      for (const auto& g : got) {
        IndexSet h;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(h));
        ASSERT_TRUE(got.count(h));
      }
  }
}

TEST(LowerFaces, PositiveWeightsCoverCone) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    auto c = random_config(rng, 2, 3 + rng() % 3, -2, 2, true);
    std::vector<Rational> w(c.size());
    for (auto& x : w) x = 1 + rng() % 4;
    auto cells = maximal(lower_faces(c, w));
    oracle::for_each_box(2, 3, [&](const IntVec& x) {
      if (!oracle::in_cone(c.points(), x)) return;
      bool covered = false;
      for (const auto& cell : cells) {
        std::vector<IntVec> pts;
        for (auto i : cell) pts.push_back(c[i]);
        if (oracle::in_cone(pts, x)) covered = true;
      }
      ASSERT_TRUE(covered) << to_string(x);
    });
  }
}

TEST(InCone, Examples) {
  auto zero = in_cone(cfg({{1, 0}, {0, 1}}, 2), IntVec{0, 0});
  EXPECT_TRUE(zero.member);
  EXPECT_EQ(zero.lambda, (RatVec{0, 0}));
  EXPECT_EQ(in_cone(cfg({{1, 0}, {0, 1}}, 2), IntVec{2, 3}).lambda, (RatVec{2, 3}));
  EXPECT_EQ(in_cone(cfg({{2, 1}, {1, 2}}, 2), IntVec{1, 1}).lambda, (RatVec{Rational(1, 3), Rational(1, 3)}));
  auto out = in_cone(cfg({{1, 0}, {0, 1}}, 2), IntVec{-1, 2});
  EXPECT_FALSE(out.member);
  EXPECT_GT(dot(out.separator, IntVec{-1, 2}), 0);
}

TEST(InCone, RandomRoundTrip) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t d = 2 + rng() % 2;
    auto c = random_config(rng, d, 2 + rng() % 3, -2, 2, false);
    oracle::for_each_box(d, 1, [&](const IntVec& x) {
      auto m = in_cone(c, x);
      ASSERT_EQ(m.member, oracle::in_cone(c.points(), x));
      if (m.member) {
        RatVec sum(d);
        for (std::size_t i = 0; i < c.size(); ++i) {
          ASSERT_GE(m.lambda[i], 0);
          for (std::size_t j = 0; j < d; ++j) sum[j] += m.lambda[i] * c[i][j];
        }
        ASSERT_EQ(sum, to_rational(x));
      } else {
        ASSERT_GT(dot(m.separator, x), 0);
        for (const auto& p : c.points()) ASSERT_LE(dot(m.separator, p), 0);
      }
    });
  }
}

TEST(IntegralClosure, Examples) {
  auto sup = cfg({{1}}, 1);
  EXPECT_EQ(integrally_closed(sup, sup).verdict, Verdict::yes);
  auto r = integrally_closed(cfg({{2}}, 1), sup);
  EXPECT_EQ(r.verdict, Verdict::no);
  EXPECT_EQ(r.witness[0] % 2, 1);
  // unimodular pair from the second edgewise subdivision of a segment
  auto big = cfg({{2, 2}, {1, 2}, {0, 2}}, 2);
  EXPECT_EQ(integrally_closed(cfg({{2, 2}, {1, 2}}, 2), big).verdict, Verdict::yes);
  // a non-saturated pair where only the search can decide
  auto hole = integrally_closed(cfg({{2, 0}, {0, 1}}, 2), cfg({{1, 0}, {0, 1}, {2, 0}}, 2));
  EXPECT_EQ(hole.verdict, Verdict::no);
}

TEST(IntegralClosure, AgreesWithEnumeration) {
  // cone(sub) ∩ M_sup = M_sub checked by brute force on small boxes
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    auto sup = random_config(rng, 2, 3, 0, 2, true);
    IndexSet pick{0, 1};
    auto sub = sup.subset(pick);
    auto res = integrally_closed(sub, sup);
    ASSERT_NE(res.verdict, Verdict::inconclusive);
    if (res.verdict == Verdict::no) {
      ASSERT_TRUE(oracle::in_cone(sub.points(), res.witness));
      continue;
    }
    oracle::for_each_box(3, 3, [&](const IntVec& coef) {
      for (auto& x : coef)
        if (x < 0) return;
      IntVec y(2);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) y[j] += coef[i] * sup[i][j];
      if (!oracle::in_cone(sub.points(), y)) return;
      bool found = false;
      for (long a = 0; a <= 20 && !found; ++a)
        for (long b = 0; b <= 20 && !found; ++b)
          if (IntVec{a * sub[0][0] + b * sub[1][0], a * sub[0][1] + b * sub[1][1]} == y) found = true;
      ASSERT_TRUE(found) << to_string(y);
    });
  }
}
