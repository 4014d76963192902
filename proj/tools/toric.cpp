// toric: command-line front end for toric complexes, face rings and subdivisions.
//
// Exit codes: 0 success, 1 a verification failed, 2 malformed input.

#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "toric/io.hpp"

using namespace toric;
using io::InputError;
using io::json;

namespace {

struct Options {
  std::string complex, simplicial, config, polys;
  std::string weights, weights2;
  std::string json_out;
  std::string what;
  std::string order = "grevlex";
  int r = 2;
  int dim = 1;
  long nmax = 6;
  long count = 10;
  unsigned seed = 1;
  std::optional<long> degree_bound;
  bool count_facets = false;
};

struct Report {
  bool ok = true;
  std::vector<std::string> lines;
  json j = json::object();

  void line(std::string s) { lines.push_back(std::move(s)); }
  void fail(const std::string& witness) {
    ok = false;
    line("witness: " + witness);
    j["witness"] = witness;
  }
};

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::string poly_list(std::span<const Polynomial> fs, std::span<const std::string> names) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f, names));
  return out.empty() ? "(zero ideal)" : join(out);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// --- inputs ---------------------------------------------------------------------

SimplicialComplex load_simplicial(const Options& o) {
  if (o.simplicial.empty()) throw InputError("--simplicial is required");
  return io::simplicial_from_json(io::read_json(o.simplicial));
}

ToricComplex load_complex(const Options& o) {
  int given = !o.complex.empty() + !o.simplicial.empty() + !o.config.empty();
  if (given != 1) throw InputError("give exactly one of --complex, --simplicial, --config");
  if (!o.complex.empty()) return io::complex_from_json(io::read_json(o.complex));
  if (!o.simplicial.empty()) return from_simplicial(load_simplicial(o));
  return from_config(io::config_from_json(io::read_json(o.config)));
}

Weights load_weights(const std::string& spec, const ToricComplex& t, const std::string& flag) {
  if (spec.empty()) throw InputError(flag + " is required");
  return io::parse_weights(spec, t);
}

void need_valid(const ToricComplex& t) {
  auto v = validate(t);
  if (!v.ok()) throw InputError("complex violates axiom (" + v.violations[0].axiom + "): " + v.violations[0].detail);
}

void need_r(int r) {
  if (r < 1) throw InputError("-r must be at least 1");
}

// --- verbs ------------------------------------------------------------------------

Report cmd_validate(const Options& o) {
  auto t = load_complex(o);
  auto v = validate(t);
  Report rep;
  json list = json::array();
  for (const auto& x : v.violations) {
    std::vector<std::string> faces;
    for (const auto& f : x.faces) faces.push_back(t.face_name(f));
    rep.line("violation (" + x.axiom + "): " + x.detail);
    list.push_back({{"axiom", x.axiom}, {"detail", x.detail}, {"faces", faces}});
  }
  rep.ok = v.ok();
  if (rep.ok) {
    auto p = properties(t);
    rep.line("valid: " + std::to_string(t.generator_count()) + " generators, " + std::to_string(t.face_count()) + " faces");
    rep.line("embedded " + yes_no(p.embedded) + ", pointed " + yes_no(p.pointed) + ", simplicial " + yes_no(p.simplicial) +
             ", N-graded " + yes_no(p.n_graded) + ", standard graded " + yes_no(p.standard_graded));
    rep.j["properties"] = {{"embedded", p.embedded},     {"pointed", p.pointed},
                           {"simplicial", p.simplicial}, {"z_graded", p.z_graded},
                           {"n_graded", p.n_graded},     {"standard_graded", p.standard_graded}};
  }
  rep.j["violations"] = list;
  return rep;
}

Report emit_complex(const ToricComplex& t) {
  Report rep;
  rep.j["complex"] = io::complex_to_json(t);
  rep.line(rep.j["complex"].dump(2));
  return rep;
}

Report cmd_build(const Options& o) {
  auto t = load_complex(o);
  need_valid(t);
  return emit_complex(t);
}

Report cmd_multiply(const Options& o) {
  need_r(o.r);
  auto t = load_complex(o);
  need_valid(t);
  try {
    return emit_complex(multiple(t, o.r));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Report cmd_subdivide(const Options& o) {
  auto t = load_complex(o);
  need_valid(t);
  auto w = load_weights(o.weights, t, "--weights");
  auto res = sd_omega(t, w);
  Report rep;
  rep.j = io::subdivision_to_json(t, res);
  rep.line("classification: " + to_string(res.classification));
  std::vector<std::string> faces;
  for (const auto& f : res.faces_in(t)) faces.push_back(t.face_name(f));
  rep.line("faces: " + (faces.empty() ? std::string("(none)") : join(faces, " ")));
  for (const auto& c : res.certificates) {
    std::vector<std::string> a;
    for (const auto& x : c.alpha) a.push_back(io::format(x));
    rep.line("certificate " + t.face_name(c.face) + " in " + t.face_name(c.carrier) + ": alpha = (" + join(a) + ")");
  }
  if (!res.regular) rep.line("not a subdivision: " + res.witness);
  return rep;
}

Report cmd_esd(const Options& o) {
  need_r(o.r);
  auto delta = load_simplicial(o);
  auto e = esd(delta, o.r);
  Report rep;
  auto facets = e.complex.facets();
  rep.j = io::edgewise_to_json(e);
  if (o.count_facets) {
    rep.line(std::to_string(facets.size()));
  } else {
    rep.line(rep.j.dump(2));
  }
  return rep;
}

Report cmd_ideal(const Options& o) {
  auto t = load_complex(o);
  need_valid(t);
  auto p = face_ring_ideal(t);
  Report rep;
  rep.j = io::presentation_to_json(p);
  for (const auto& f : p.generators()) rep.line(to_string(f, p.variables));
  if (rep.lines.empty()) rep.line("(zero ideal)");
  return rep;
}

Report cmd_initial(const Options& o) {
  auto t = load_complex(o);
  need_valid(t);
  auto w = load_weights(o.weights, t, "--weights");
  auto ini = initial_ideal_of(t, w);
  Report rep;
  rep.j["variables"] = t.ids();
  rep.j["initial"] = io::polys_to_json(ini, t.ids());
  for (const auto& f : ini) rep.line(to_string(f, t.ids()));
  if (rep.lines.empty()) rep.line("(zero ideal)");
  return rep;
}

io::PolynomialSystem load_system(const Options& o) {
  if (!o.polys.empty()) return io::polys_from_json(io::read_json(o.polys));
  auto t = load_complex(o);
  need_valid(t);
  return {t.ids(), face_ring_ideal(t).generators()};
}

Report cmd_groebner(const Options& o) {
  auto sys = load_system(o);
  const std::size_t n = sys.variables.size();
  MonomialOrder ord = MonomialOrder::grevlex(n);
  if (o.order == "lex")
    ord = MonomialOrder::lex(n);
  else if (o.order != "grevlex")
    throw InputError("--order must be grevlex or lex");
  auto gb = buchberger(sys.generators, ord).generators();
  Report rep;
  rep.j["variables"] = sys.variables;
  rep.j["order"] = o.order;
  rep.j["basis"] = io::polys_to_json(gb, sys.variables);
  for (const auto& f : gb) rep.line(to_string(f, sys.variables));
  if (rep.lines.empty()) rep.line("(zero ideal)");
  return rep;
}

Report cmd_hilbert(const Options& o) {
  std::vector<Polynomial> gens;
  std::vector<long> grading;
  if (!o.polys.empty()) {
    auto sys = load_system(o);
    gens = sys.generators;
    grading.assign(sys.variables.size(), 1);
  } else {
    auto t = load_complex(o);
    need_valid(t);
    auto g = detail::natural_grading(t);
    if (!g) throw InputError("hilbert: the complex is not N-graded");
    gens = face_ring_ideal(t).generators();
    grading = *g;
  }
  std::vector<long> h;
  try {
    h = hilbert_series_prefix(gens, grading, o.nmax);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Report rep;
  rep.j["hilbert"] = h;
  std::vector<std::string> vals;
  for (long x : h) vals.push_back(std::to_string(x));
  rep.line("H(0.." + std::to_string(o.nmax) + "): " + join(vals, " "));
  return rep;
}

// --- verify -----------------------------------------------------------------------

Report verify_main(const ToricComplex& t, const Weights& w) {
  Report rep;
  MainTheoremReport m;
  try {
    m = verify_main_theorem(t, w);
  } catch (const std::invalid_argument& e) {
    rep.fail(e.what());
    return rep;
  }
  std::vector<std::string> dropped;
  for (auto a : m.dropped) dropped.push_back(t.id(a));
  rep.line(std::string("status: ") + (m.ok ? "ok" : "failed"));
  rep.line("classification: " + to_string(m.classification));
  rep.line("ini: " + poly_list(m.initial, t.ids()));
  rep.line("rad(ini): " + poly_list(m.subdivision, t.ids()));
  rep.line("dropped: " + (dropped.empty() ? std::string("(none)") : join(dropped)));
  rep.j = {{"status", m.ok ? "ok" : "failed"},
           {"classification", to_string(m.classification)},
           {"initial", io::polys_to_json(m.initial, t.ids())},
           {"radical", io::polys_to_json(m.subdivision, t.ids())},
           {"dropped", dropped}};
  if (!m.ok) rep.fail(m.witness);
  return rep;
}

ToricComplex random_graded_complex(std::mt19937& rng) {
  std::size_t d = 2 + rng() % 2, n = 2 + rng() % 5;
  std::uniform_int_distribution<long> coord(0, 2), last(1, 2);
  std::vector<IntVec> pts;
  for (int guard = 0; pts.size() < n && guard < 1000; ++guard) {
    IntVec p(d);
    for (std::size_t j = 0; j + 1 < d; ++j) p[j] = coord(rng);
    p[d - 1] = last(rng);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return from_config(VectorConfig(pts, d));
}

Report verify_random(const Options& o) {
  std::mt19937 rng(o.seed);
  std::uniform_int_distribution<long> wd(-3, 3);
  Report rep;
  long passed = 0;
  for (long k = 0; k < o.count; ++k) {
    auto t = random_graded_complex(rng);
    Weights w;
    for (std::size_t a = 0; a < t.generator_count(); ++a) w.emplace_back(wd(rng));
    auto m = verify_main(t, w);
    if (!m.ok) {
      rep.j["instance"] = {{"complex", io::complex_to_json(t)}, {"weights", io::weights_to_json(w)}};
      rep.fail("instance " + std::to_string(k) + ": " + m.j.value("witness", std::string("?")));
      break;
    }
    ++passed;
  }
  rep.line("main theorem on random N-graded complexes: " + std::to_string(passed) + "/" + std::to_string(o.count) +
           " (seed " + std::to_string(o.seed) + ")");
  rep.j["passed"] = passed;
  rep.j["seed"] = o.seed;
  return rep;
}

Report cmd_verify(const Options& o) {
  const auto& what = o.what;
  if (what == "random") return verify_random(o);
  if (what == "esd-regular") {
    need_r(o.r);
    auto e = check_esd_regular(load_simplicial(o), o.r);
    Report rep;
    rep.line("sd_omega rT = esd_r: " + yes_no(e.equal) + " (" + std::to_string(e.faces) + " faces)");
    rep.line("regular triangulation: " + yes_no(e.triangulation));
    rep.j = {{"equal", e.equal}, {"triangulation", e.triangulation}, {"faces", e.faces}};
    if (!e.ok) rep.fail(e.witness);
    return rep;
  }
  if (what == "sorting" || what == "sorting-general") {
    need_r(o.r);
    SortingReport s;
    if (what == "sorting") {
      if (o.dim < 0) throw InputError("--dim must be nonnegative");
      s = sorting_gb_simplex(o.dim, o.r);
    } else {
      s = sorting_gb_general(load_simplicial(o), o.r);
    }
    Report rep;
    rep.line("binomials: " + std::to_string(s.binomials.size()) + ", nonface monomials: " + std::to_string(s.monomials.size()));
    rep.line("initials generate ini: " + yes_no(s.initials_generate));
    rep.line("matches esd: " + yes_no(s.matches_esd));
    rep.line("ini: " + poly_list(s.initial, s.names));
    rep.j = {{"variables", s.names},
             {"binomials", io::polys_to_json(s.binomials, s.names)},
             {"monomials", io::polys_to_json(s.monomials, s.names)},
             {"initial", io::polys_to_json(s.initial, s.names)},
             {"initials_generate", s.initials_generate},
             {"matches_esd", s.matches_esd}};
    if (!s.ok) rep.fail(s.witness);
    return rep;
  }
  if (what == "hilbert-esd") {
    need_r(o.r);
    auto h = hilbert_compare(load_simplicial(o), o.r, o.nmax);
    Report rep;
    std::vector<std::string> a, b;
    for (long x : h.esd) a.push_back(std::to_string(x));
    for (long x : h.veronese) b.push_back(std::to_string(x));
    rep.line("H(K[esd_r]): " + join(a, " "));
    rep.line("H(K[Delta], rn): " + join(b, " "));
    rep.j = {{"esd", h.esd}, {"veronese", h.veronese}};
    if (!h.ok) rep.fail("Hilbert functions differ");
    return rep;
  }
  if (what == "koszul") {
    need_r(o.r);
    KoszulReport k;
    try {
      k = koszul_counterexample(load_simplicial(o), o.r);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    Report rep;
    std::vector<std::string> ws;
    for (const auto& u : k.witness) ws.push_back(tuple_name(psi_inverse(u)));
    rep.line("witness: " + join(ws, " * "));
    rep.line("nonface: " + yes_no(k.nonface) + ", proper subsets faces: " + yes_no(k.proper_faces));
    rep.line("minimal generator degree: " + std::to_string(k.degree));
    rep.j = {{"witness", ws}, {"nonface", k.nonface}, {"proper_faces", k.proper_faces}, {"degree", k.degree}};
    if (!k.ok) rep.fail("the witness is not a minimal nonface");
    return rep;
  }
  if (what == "reconstruct") {
    auto sys = load_system(o);
    Reconstruction r;
    try {
      r = reconstruct(sys.generators, sys.variables.size());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    Report rep;
    rep.line("isomorphism: " + yes_no(r.isomorphism));
    rep.j["isomorphism"] = r.isomorphism;
    if (r.complex.generator_count() > 0 || r.complex.face_count() > 0) {
      rep.j["complex"] = io::complex_to_json(r.complex);
      std::vector<std::string> faces;
      for (const auto& f : r.complex.faces()) faces.push_back(r.complex.face_name(f.gens));
      rep.line("faces: " + join(faces, " "));
    }
    if (!r.isomorphism) rep.fail("I is not the face ring ideal of the reconstructed complex");
    return rep;
  }

  auto t = load_complex(o);
  need_valid(t);
  if (what == "main-theorem") return verify_main(t, load_weights(o.weights, t, "--weights"));
  if (what == "triangulation") {
    Report rep;
    try {
      auto c = verify_triangulation_cor(t, load_weights(o.weights, t, "--weights"));
      rep.line("rad(ini) square-free monomial: " + yes_no(c.square_free_monomial));
      rep.line("triangulation: " + yes_no(c.triangulation));
      rep.j = {{"square_free_monomial", c.square_free_monomial}, {"triangulation", c.triangulation}};
      if (!c.ok) rep.fail(c.witness);
    } catch (const std::invalid_argument& e) {
      rep.fail(e.what());
    }
    return rep;
  }
  if (what == "uniqueness") {
    Report rep;
    try {
      auto u = verify_uniqueness_cor(t, load_weights(o.weights, t, "--weights"), load_weights(o.weights2, t, "--weights2"));
      rep.line("same subdivision: " + yes_no(u.same_subdivision));
      rep.line("same radical: " + yes_no(u.same_radical));
      rep.j = {{"same_subdivision", u.same_subdivision}, {"same_radical", u.same_radical}};
      if (!u.ok) rep.fail("subdivisions and radicals disagree");
    } catch (const std::invalid_argument& e) {
      rep.fail(e.what());
    }
    return rep;
  }
  if (what == "radical") {
    Report rep;
    std::optional<Integer> bound;
    if (o.degree_bound) bound = Integer(*o.degree_bound);
    auto w = load_weights(o.weights, t, "--weights");
    if (!sd_omega(t, w).regular) {
      rep.fail("sd_omega is not a subdivision");
      return rep;
    }
    auto r = check_radical_hypotheses(t, w, bound);
    rep.line("Gen(sd) = Gen(T): " + yes_no(r.generators_equal));
    rep.line("integrally closed: " + to_string(r.integrally_closed) +
             (r.closure_witness.empty() ? "" : " (" + r.closure_witness + ")"));
    rep.line("ini radical: " + yes_no(r.radical));
    rep.j = {{"generators_equal", r.generators_equal},
             {"integrally_closed", to_string(r.integrally_closed)},
             {"radical", r.radical}};
    if (!r.ok) rep.fail("hypotheses hold but ini is not radical");
    return rep;
  }
  if (what == "veronese") {
    need_r(o.r);
    Report rep;
    VeroneseResult v;
    try {
      v = veronese_check(t, o.r, o.nmax);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    std::vector<std::string> a, b;
    for (long x : v.multiple) a.push_back(std::to_string(x));
    for (long x : v.original) b.push_back(std::to_string(x));
    rep.line("H(K[rT], n): " + join(a, " "));
    rep.line("H(K[T], rn): " + join(b, " "));
    rep.j = {{"multiple", v.multiple}, {"original", v.original}};
    if (!v.ok) rep.fail("Hilbert functions differ");
    return rep;
  }
  if (what == "limit") {
    auto g = check_limit(t);
    Report rep;
    rep.line("K[T] is the limit over faces: " + yes_no(g.ok));
    rep.j = {{"ok", g.ok}, {"injective", g.injective}, {"inverse", g.inverse}, {"multiplicative", g.multiplicative}};
    if (!g.ok) rep.fail(g.witness);
    return rep;
  }
  throw InputError("unknown verification '" + what + "'");
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("--complex", o.complex, "toric complex (JSON)");
  sub->add_option("--simplicial", o.simplicial, "simplicial complex (JSON)");
  sub->add_option("--config", o.config, "vector configuration (JSON)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric complexes, face rings and regular subdivisions"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, std::function<Report(const Options&)>> verbs{
      {"validate", cmd_validate}, {"build", cmd_build},     {"multiply", cmd_multiply}, {"subdivide", cmd_subdivide},
      {"esd", cmd_esd},           {"ideal", cmd_ideal},     {"initial", cmd_initial},   {"groebner", cmd_groebner},
      {"hilbert", cmd_hilbert},   {"verify", cmd_verify}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, fn] : verbs) {
    auto* sub = app.add_subcommand(name);
    subs[name] = sub;
    add_input(sub, o);
    sub->add_option("--json", o.json_out, "also write the report as JSON to this path ('-' for stdout)");
  }
  for (auto name : {"subdivide", "initial", "verify"}) subs[name]->add_option("--weights", o.weights, "weights: \"0,-1,1/2\" or JSON file");
  for (auto name : {"multiply", "esd", "verify"}) subs[name]->add_option("-r", o.r, "multiple / subdivision factor");
  for (auto name : {"groebner", "hilbert", "verify"}) subs[name]->add_option("--polys", o.polys, "polynomial system (JSON)");
  for (auto name : {"hilbert", "verify"}) subs[name]->add_option("--nmax", o.nmax, "largest degree");
  subs["groebner"]->add_option("--order", o.order, "grevlex or lex");
  subs["esd"]->add_flag("--count-facets", o.count_facets, "print only the number of facets");
  auto* v = subs["verify"];
  v->add_option("what", o.what,
                "main-theorem | triangulation | uniqueness | radical | veronese | limit | reconstruct | esd-regular | "
                "sorting | sorting-general | hilbert-esd | koszul | random")
      ->required();
  v->add_option("--weights2", o.weights2, "second weight vector for uniqueness");
  v->add_option("--seed", o.seed, "seed for random instances");
  v->add_option("--count", o.count, "number of random instances");
  v->add_option("--degree-bound", o.degree_bound, "bound for the integral closure search");
  v->add_option("--dim", o.dim, "d for the sorting check on the simplex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    std::string verb;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) verb = name;
    Report rep = verbs.at(verb)(o);
    for (const auto& l : rep.lines) std::cout << l << "\n";
    if (!o.json_out.empty()) {
      rep.j["status"] = rep.ok ? "ok" : "failed";
      if (o.json_out == "-") {
        std::cout << rep.j.dump(2) << "\n";
      } else {
        std::ofstream out(o.json_out);
        if (!out) throw InputError(o.json_out + ": cannot write");
        out << rep.j.dump(2) << "\n";
      }
    }
    return rep.ok ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
