#include "toric/io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <random>
#include <sys/wait.h>

using namespace toric;

namespace {

const std::string data = TORIC_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TORIC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string path(const std::string& name) { return data + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Io, RationalsRoundTrip) {
  EXPECT_EQ(io::parse_rational("3/6", "w"), Rational(1, 2));
  EXPECT_EQ(io::format(io::parse_rational(" -4/2 ", "w")), "-2");
  EXPECT_EQ(io::format(Rational(-3, 9)), "-1/3");
  EXPECT_THROW(io::parse_rational("1/0", "w"), io::InputError);
  EXPECT_THROW(io::parse_rational("x", "w"), io::InputError);
  EXPECT_THROW(io::parse_rational("1/2/3", "w"), io::InputError);
  EXPECT_THROW(io::parse_rational("", "w"), io::InputError);
}

TEST(Io, ComplexRoundTrip) {
  auto t = io::complex_from_json(io::read_json(path("cfg3.json")));
  EXPECT_EQ(t.ids(), (std::vector<std::string>{"x0", "x1", "x2"}));
  EXPECT_EQ(t.face_count(), 4u);
  auto back = io::complex_from_json(io::complex_to_json(t));
  EXPECT_EQ(back.face_id_sets(), t.face_id_sets());

  auto g = io::complex_from_json(io::read_json(path("chain.json")));
  EXPECT_FALSE(g.is_embedded());
  EXPECT_TRUE(validate(g).ok());
  auto gb = io::complex_from_json(io::complex_to_json(g));
  EXPECT_EQ(gb.face_id_sets(), g.face_id_sets());
  EXPECT_EQ(gb.inclusions(), g.inclusions());

  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<IntVec> pts;
    while (pts.size() < 4) {
      IntVec p{static_cast<long>(rng() % 3), static_cast<long>(rng() % 3), 1};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    auto c = from_config(VectorConfig(pts, 3));
    auto j = io::complex_to_json(c);
    auto d = io::complex_from_json(j);
    EXPECT_EQ(io::complex_to_json(d), j);
  }
}

TEST(Io, MalformedInputNamesLocation) {
  using io::json;
  auto expect_error = [](const json& j, const std::string& where) {
    try {
      io::complex_from_json(j);
      ADD_FAILURE() << "accepted " << j.dump();
    } catch (const io::InputError& e) {
      EXPECT_TRUE(contains(e.what(), where)) << e.what();
    }
  };
  expect_error(json::parse(R"({"faces": []})"), "generators");
  expect_error(json::parse(R"({"ambient_dim": 1, "generators": [{"id": "a", "coords": [1, 2]}], "faces": [["a"]]})"),
               "generators[0].coords");
  expect_error(json::parse(R"({"ambient_dim": 1, "generators": [{"id": "a", "coords": [1]}], "faces": [["b"]]})"),
               "faces[0]");
  expect_error(json::parse(R"({"ambient_dim": 1, "generators": [{"id": "a", "coords": ["z"]}], "faces": [["a"]]})"),
               "coords[0]");
  EXPECT_THROW(io::simplicial_from_json(json::parse(R"({"vertices": 2, "facets": [[3]]})")), io::InputError);
  EXPECT_THROW(io::config_from_json(json::parse(R"({"points": [[0, 0]]})")), io::InputError);
}

TEST(Io, Weights) {
  auto t = io::complex_from_json(io::read_json(path("cfg3.json")));
  EXPECT_EQ(io::parse_weights("0,-1,1/2", t), (Weights{0, -1, Rational(1, 2)}));
  EXPECT_EQ(io::parse_weights(path("cfg3_weights.json"), t), (Weights{0, -1, 0}));
  EXPECT_THROW(io::parse_weights("0,1", t), io::InputError);
}

TEST(Cli, MainTheoremExample) {
  auto r = run("verify main-theorem --complex " + path("cfg3.json") + " --weights \"0,-1,0\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "status: ok"));
  EXPECT_TRUE(contains(r.out, "ini: x0*x2"));
  EXPECT_TRUE(contains(r.out, "classification: triangulation"));

  auto drop = run("verify main-theorem --config " + path("cfg3_points.json") + " --weights 0,1,0");
  EXPECT_EQ(drop.code, 0);
  EXPECT_TRUE(contains(drop.out, "ini: x1^2"));
  EXPECT_TRUE(contains(drop.out, "dropped: x1"));

  auto empty = run("verify main-theorem --config " + path("line.json") + " --weights=-1,-1");
  EXPECT_EQ(empty.code, 1);
  EXPECT_TRUE(contains(empty.out, "witness:"));
}

TEST(Cli, EsdCountFacets) {
  auto r = run("esd --simplicial " + path("delta2.json") + " -r 2 --count-facets");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
  auto j = run("esd --simplicial " + path("delta1.json") + " -r 3");
  auto parsed = io::json::parse(j.out);
  EXPECT_EQ(parsed["facets"].size(), 3u);
  EXPECT_EQ(parsed["vertex_map"].size(), 4u);
}

TEST(Cli, ValidateBroken) {
  auto r = run("validate --complex " + path("broken.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "violation (i)"));
  EXPECT_TRUE(contains(r.out, "{b}"));
  EXPECT_EQ(run("validate --complex " + path("cfg3.json")).code, 0);
  EXPECT_EQ(run("validate --complex " + path("chain.json")).code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("validate --complex " + path("missing.json")).code, 2);
  EXPECT_EQ(run("verify main-theorem --complex " + path("cfg3.json") + " --weights 0,a,0").code, 2);
  EXPECT_EQ(run("verify main-theorem --complex " + path("cfg3.json") + " --weights 0,1").code, 2);
  EXPECT_EQ(run("multiply --complex " + path("cfg3.json") + " -r 0").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify nonsense --complex " + path("cfg3.json")).code, 2);
  EXPECT_EQ(run("ideal --complex " + path("twisted_cubic.json")).code, 2);
}

TEST(Cli, Verbs) {
  auto ideal = run("ideal --simplicial " + path("two_points.json"));
  EXPECT_EQ(ideal.code, 0);
  EXPECT_EQ(ideal.out, "x1*x2\n");

  auto ini = run("initial --complex " + path("cfg3.json") + " --weights " + path("cfg3_weights.json"));
  EXPECT_EQ(ini.out, "x0*x2\n");

  auto gb = run("groebner --polys " + path("twisted_cubic.json"));
  EXPECT_EQ(gb.code, 0);
  EXPECT_EQ(std::count(gb.out.begin(), gb.out.end(), '\n'), 3);

  auto h = run("hilbert --complex " + path("cfg3.json") + " --nmax 4");
  EXPECT_EQ(h.out, "H(0..4): 1 3 5 7 9\n");

  auto sub = run("subdivide --complex " + path("cfg3.json") + " --weights 0,-1,0");
  EXPECT_EQ(sub.code, 0);
  EXPECT_TRUE(contains(sub.out, "classification: triangulation"));

  auto mult = run("multiply --simplicial " + path("delta1.json") + " -r 2");
  auto m = io::complex_from_json(io::json::parse(mult.out));
  EXPECT_EQ(m.generator_count(), 3u);

  auto built = run("build --config " + path("square_points.json"));
  EXPECT_EQ(io::complex_from_json(io::json::parse(built.out)).face_count(), 10u);
}

TEST(Cli, VerifyVariants) {
  EXPECT_EQ(run("verify triangulation --config " + path("square_points.json") + " --weights 0,0,0,0").code, 0);
  EXPECT_EQ(run("verify uniqueness --complex " + path("cfg3.json") + " --weights 0,-1,0 --weights2 0,-2,0").code, 0);
  EXPECT_EQ(run("verify radical --complex " + path("cfg3.json") + " --weights 0,1,0").code, 0);
  EXPECT_EQ(run("verify veronese --simplicial " + path("two_points.json") + " -r 2 --nmax 4").code, 0);
  EXPECT_EQ(run("verify limit --complex " + path("fan2.json")).code, 0);
  EXPECT_EQ(run("verify reconstruct --polys " + path("twisted_cubic.json")).code, 0);
  EXPECT_EQ(run("verify reconstruct --polys " + path("x_squared.json")).code, 1);
  EXPECT_EQ(run("verify esd-regular --simplicial " + path("delta2.json") + " -r 2").code, 0);
  EXPECT_EQ(run("verify sorting --dim 2 -r 2").code, 0);
  EXPECT_EQ(run("verify sorting-general --simplicial " + path("two_points.json") + " -r 2").code, 0);
  EXPECT_EQ(run("verify hilbert-esd --simplicial " + path("boundary3.json") + " -r 2 --nmax 3").code, 0);
  auto k = run("verify koszul --simplicial " + path("boundary3.json") + " -r 2");
  EXPECT_EQ(k.code, 0);
  EXPECT_TRUE(contains(k.out, "x(1,4) * x(2,4) * x(3,4)"));
  EXPECT_EQ(run("verify koszul --simplicial " + path("delta2.json") + " -r 2").code, 2);
}

TEST(Cli, DeterministicReports) {
  auto a = run("verify random --seed 11 --count 4 --json -");
  auto b = run("verify random --seed 11 --count 4 --json -");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(contains(a.out, "4/4"));
  auto s1 = run("subdivide --complex " + path("fan2.json") + " --weights 1,2,0,1/3 --json -");
  auto s2 = run("subdivide --complex " + path("fan2.json") + " --weights 1,2,0,1/3 --json -");
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_TRUE(contains(s1.out, "\"certificates\""));
}
