// Acceptance checks. Prints one PASS/FAIL line per criterion; indented lines
// are details. Exit status is 0 only when every criterion passes.

#include "spheromo/cli.hpp"
#include "spheromo/colored.hpp"
#include "spheromo/input.hpp"
#include "spheromo/linalg.hpp"
#include "spheromo/lp.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace spheromo;

namespace {

// Every comparison is exact; there is no numeric tolerance anywhere.
constexpr std::size_t kMinInstances = 200;
constexpr std::uint64_t kSeed = 0x5eed2024;

std::string g_data = SPHEROMO_DATA;
std::string g_fixtures = SPHEROMO_FIXTURES;
std::shared_ptr<const LunaSTable> g_luna;
std::shared_ptr<const SocleRegistry> g_socles;

// ------------------------------------------------------------------ plumbing

struct Criterion {
  std::vector<std::string> notes;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Suite {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first;
  std::string extra;
  void expect(bool cond, const std::function<std::string()>& what) {
    if (cond) return;
    if (violations++ == 0) first = what();
  }
  bool ok() const { return instances >= kMinInstances && violations == 0; }
  std::string line() const {
    std::string s = name + ": " + std::to_string(instances) + " instances, " + std::to_string(violations) +
                    " violations";
    if (instances < kMinInstances) s += " (fewer than " + std::to_string(kMinInstances) + ")";
    if (violations) s += "; first: " + first;
    if (!extra.empty()) s += "\n      " + extra;
    return s;
  }
};

struct CliRun {
  int code = 0;
  std::string out, err;
  bool operator==(const CliRun& o) const { return code == o.code && out == o.out && err == o.err; }
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "spheromo");
  args.insert(args.begin() + 1, {"--data-dir", g_data});
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& name) { return g_fixtures + "/" + name; }

Problem fixture(const std::string& name) { return build_problem(load_document(fx(name)), g_luna); }

SphericalRoot named(const Instance& in, const std::string& alias) {
  return parse_spherical_root(in.roots(), in.catalog(), alias);
}

std::vector<SphericalRoot> sorted(std::vector<SphericalRoot> s) {
  std::sort(s.begin(), s.end(), spherical_root_less);
  return s;
}

bool contains_text(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

struct Rng {
  std::mt19937_64 g{kSeed};
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
  bool chance(double p) { return std::bernoulli_distribution(p)(g); }
  Rational rational(long lo, long hi, long maxden) {
    long d = uniform(1, maxden);
    return Rational(uniform(lo * d, hi * d), d);
  }
};

// ------------------------------------------------------------------ criteria 1-5

Criterion criterion_foschi() {
  Criterion c;
  CliRun r = cli({"enumerate", fx("foschi.json"), "--level", "admissible", "--format", "json"});
  c.expect(r.code == 0, "enumerate --level admissible exits 0 (got " + std::to_string(r.code) + ")");
  auto j = nlohmann::json::parse(r.out);
  std::vector<std::vector<std::string>> got;
  for (const auto& p : j["passing"]) got.push_back(p["sigma"].get<std::vector<std::string>>());
  std::vector<std::vector<std::string>> want{{}, {"alpha1"}, {"alpha2"}, {"alpha1", "alpha2"}};
  c.expect(got == want, "admissible sets are exactly the subsets of {alpha1, alpha2}");
  c.expect(j["complete"] == true, "enumeration is complete");

  Problem pb = fixture("foschi.json");
  const Instance& in = *pb.instance;
  for (const auto& cand : enumerate_sigma(in, Level::admissible, nullptr).passing) {
    Verdict v = smooth_check(in, cand.sigma, *g_socles);
    c.expect(v.passed(), "smooth for " + in.sigma_name(cand.sigma) + " (" + v.axiom + ": " + v.witness + ")");
  }
  CliRun s = cli({"enumerate", fx("foschi.json"), "--level", "smooth", "--format", "json"});
  c.expect(s.code == 0 && nlohmann::json::parse(s.out)["count"] == 4, "enumerate --level smooth lists 4 sets");

  std::set<QVec> normals;
  for (const auto& f : in.polytope().facets()) normals.insert(f.normal);
  // epsilon_i is dual to alpha_i, the basis of Xi
  c.expect(normals == std::set<QVec>{{-1, 0}, {1, 1}, {0, -1}}, "facet normals are -e1, e1+e2, -e2");
  c.note("admissible sets: 4; smooth: 4; normals (-1, 0), (0, -1), (1, 1)");
  return c;
}

Criterion criterion_sp6() {
  Criterion c;
  Problem pb = fixture("sp6.json");
  const Instance& in = *pb.instance;
  const auto full = *pb.sigma;
  c.expect(admissible(in, full).passed(), "{alpha1+alpha3, alpha2} is admissible");
  for (const auto& names : std::vector<std::vector<std::string>>{{}, {"alpha2"}, {"alpha1+alpha3"}}) {
    std::vector<SphericalRoot> s;
    for (const auto& n : names) s.push_back(named(in, n));
    Verdict v = admissible(in, sorted(s));
    bool cert = v.status == Status::fail && v.axiom.rfind("adm.", 0) == 0 && contains_text(v.witness, "not in the lattice");
    c.expect(cert, in.sigma_name(s) + " fails admissibility with an orbit-vertex lattice certificate");
    c.note(in.sigma_name(s) + ": " + v.axiom + ", " + v.witness);
  }
  const auto& q = in.polytope();
  c.expect(q.vertex(1) == QVec{0, 1, 0}, "v2 is the second fundamental weight");
  ColorTable t = color_table(in, full);
  OrbitVertexData d = orbit_vertex_data(in, t, 1);
  std::set<std::string> dnames;
  for (auto k : d.d) dnames.insert(t.colors[k].name);
  c.expect(dnames == std::set<std::string>{"D_alpha1=D_alpha3", "D_alpha2^+"}, "D(v2) = {D, D_2^+}");
  c.expect(d.b.empty(), "B(v2) is empty");
  Verdict sm = smooth_check(in, full, *g_socles);
  c.expect(sm.status == Status::fail && sm.axiom == "smooth.socle" && contains_text(sm.witness, "v2") &&
               contains_text(sm.witness, "-3"),
           "smooth_check fails at v2 with socle pairing -3");
  c.note("smooth: " + sm.axiom + ", " + sm.witness);
  c.expect(cli({"check", fx("sp6.json"), "--level", "smooth"}).code == 1, "CLI check --level smooth exits 1");
  return c;
}

Criterion criterion_sp4() {
  Criterion c;
  Problem pb = fixture("sp4.json");
  const Instance& in = *pb.instance;
  QVec w = anticanonical_weight(in);
  c.expect(w == in.roots().weight_of(QVec{4, 3}), "w = 4 alpha + 3 beta");
  c.expect(reflexive_check(in, {}, ReflexiveLevel::q_reflexive).passed(), "Q-reflexive");
  Verdict v = reflexive_check(in, {}, ReflexiveLevel::reflexive);
  c.expect(v.status == Status::fail && v.axiom == "refl.w_lattice" && contains_text(v.witness, to_string(w)),
           "reflexive fails with witness w");
  for (const auto& p : in.polytope().vertices())
    c.expect(!in.lattice().member(p - w), "v - w not in Xi for v = " + to_string(p));
  c.note("reflexive: " + v.axiom + ", " + v.witness);
  c.expect(cli({"check", fx("sp4.json"), "--level", "q-reflexive"}).code == 0, "CLI q-reflexive exits 0");
  c.expect(cli({"check", fx("sp4.json"), "--level", "reflexive"}).code == 1, "CLI reflexive exits 1");
  return c;
}

Criterion criterion_woodward() {
  Criterion c;
  CliRun k = cli({"kaehler", fx("woodward_gl2.json"), "--format", "json"});
  auto j = nlohmann::json::parse(k.out);
  c.expect(k.code == 1 && j["passing"].empty() && j["complete"] == true, "kaehler returns the empty list");
  c.expect(j["summary"] == "not Kählerizable", "summary reads not Kählerizable");
  CliRun e = cli({"enumerate", fx("woodward_gl2.json"), "--level", "q-admissible", "--format", "json"});
  auto je = nlohmann::json::parse(e.out);
  c.expect(e.code == 0 && je["count"] == 1 && je["passing"][0]["sigma"].empty(), "q-admissible sets are exactly {{}}");
  Problem pb = fixture("woodward_gl2.json");
  Verdict v = smooth_check(*pb.instance, {}, *g_socles, SmoothLevel::real);
  c.expect(v.axiom == "smooth.basis" && contains_text(v.witness, "(0, 0)") &&
               contains_text(v.witness, "| = 3 against rank 2"),
           "smooth fails at 0 with |D(0) u B(0)| = 3 against rank 2");
  c.note("smooth(empty): " + v.axiom + ", " + v.witness);
  return c;
}

Criterion criterion_sl2xsl2() {
  Criterion c;
  Problem pb = fixture("sl2xsl2.json");
  const Instance& in = *pb.instance;
  const auto& cat = in.catalog();
  c.expect(cat.size() == 6, "six catalog roots");
  std::size_t failed = 0;
  for (std::size_t mask = 0; mask < (std::size_t(1) << cat.size()); ++mask) {
    std::vector<SphericalRoot> s;
    for (std::size_t i = 0; i < cat.size(); ++i)
      if (mask >> i & 1) s.push_back(cat[i]);
    Verdict v = quadruple_check(in.roots(), in.luna(), *pb.quadruple, s);
    if (v.status == Status::fail) ++failed;
    else c.expect(false, in.sigma_name(s) + " does not fail (" + status_name(v.status) + ")");
  }
  c.note(std::to_string(failed) + " of 64 subsets fail");
  CliRun r = cli({"quadruple", fx("sl2xsl2.json"), "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  c.expect(r.code == 1 && j["passing"] == 0 && j["undecided"] == 0 && j["candidates"] == 64,
           "CLI quadruple exits 1 with no passing candidate");
  return c;
}

// ------------------------------------------------------------------ random instances

using Poly = std::vector<QVec>;

// Keep a.x >= b.
Poly clip(const Poly& p, const QVec& a, const Rational& b) {
  Poly out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const QVec& c = p[i];
    const QVec& n = p[(i + 1) % p.size()];
    Rational fc = dot(a, c) - b, fn = dot(a, n) - b;
    if (fc >= 0) out.push_back(c);
    if ((fc > 0 && fn < 0) || (fc < 0 && fn > 0)) out.push_back(c + (fc / (fc - fn)) * (n - c));
  }
  return out;
}

RootSystem gl2() { return RootSystem(RootSystemSpec{{}, 0, CustomBlock{2, {{2, -1}}, std::nullopt}}); }

RootSystem group_choice(long k) {
  auto g = [](std::vector<ComponentSpec> c, int t) { return RootSystem(RootSystemSpec{std::move(c), t, std::nullopt}); };
  switch (k) {
    case 0: return g({{'A', 1}}, 0);
    case 1: return g({{'A', 1}, {'A', 1}}, 0);
    case 2: return g({{'A', 2}}, 0);
    case 3: return g({{'C', 2}}, 0);
    case 4: return g({{'A', 1}}, 1);
    case 5: return gl2();
    case 6: return g({{'A', 1}, {'A', 1}, {'A', 1}}, 0);
    case 7: return g({{'G', 2}}, 0);
    default: return g({{'A', 2}}, 1);
  }
}

std::optional<Sublattice> random_lattice(Rng& rng, const RootSystem& r) {
  std::size_t n = r.rank();
  std::vector<QVec> gens;
  auto with_torus = [&](QMat roots) {
    for (std::size_t j = r.num_simple(); j < n; ++j) roots.push_back(unit(n, j));
    return roots;
  };
  switch (rng.uniform(0, 5)) {
    case 0:
    case 1: return Sublattice::full(n);
    case 2: gens = with_torus(r.simple_roots()); break;
    case 3:
      for (const auto& a : r.simple_roots()) gens.push_back(Rational(2) * a);
      gens = with_torus(gens);
      break;
    case 4:
      for (std::size_t i = 0; i < n; ++i) {
        QVec v(n);
        for (auto& x : v) x = rng.uniform(-2, 2);
        gens.push_back(v);
      }
      break;
    default: {
      if (n < 2) return Sublattice::full(n);
      std::size_t k = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n) - 1));
      for (std::size_t i = 0; i < k; ++i) {
        QVec v(n);
        for (auto& x : v) x = rng.uniform(-2, 2);
        gens.push_back(v);
      }
    }
  }
  Sublattice l(gens, n);
  if (l.rank() == 0) return std::nullopt;
  return l;
}

bool dominant_point(const RootSystem& r, const QVec& p) {
  for (std::size_t i = 0; i < r.num_simple(); ++i)
    if (r.pair(i, p) < 0) return false;
  return true;
}

std::shared_ptr<Instance> try_instance(const RootSystem& r, const Sublattice& xi, const std::vector<QVec>& pts) {
  try {
    return std::make_shared<Instance>(r, xi, pts, g_luna);
  } catch (const std::exception&) {
    return nullptr;
  }
}

// Random dominant points; walls are hit often on purpose.
std::shared_ptr<Instance> random_instance(Rng& rng) {
  RootSystem r = group_choice(rng.uniform(0, 8));
  auto xi = random_lattice(rng, r);
  if (!xi) return nullptr;
  std::size_t n = r.rank(), d = xi->rank();
  auto coordinate = [&](std::size_t i) {
    if (i < r.num_simple()) return rng.chance(0.35) ? Rational(0) : rng.rational(0, 4, 2);
    return rng.rational(-2, 2, 2);
  };
  std::vector<QVec> pts;
  std::size_t k = d + static_cast<std::size_t>(rng.uniform(1, 4));
  if (d == n) {
    for (std::size_t p = 0; p < k; ++p) {
      QVec x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = coordinate(i);
      pts.push_back(x);
    }
  } else {
    QVec omega(n);
    for (std::size_t i = 0; i < n; ++i) omega[i] = coordinate(i);
    for (int tries = 0; pts.size() < k && tries < 200; ++tries) {
      QVec x = omega;
      for (const auto& b : xi->basis()) x = x + rng.rational(-3, 3, 2) * b;
      if (dominant_point(r, x)) pts.push_back(x);
    }
    pts.push_back(omega);
  }
  if (rng.chance(0.3))
    for (auto& p : pts)
      for (auto& x : p) x = Rational(numerator_of(x * 2) / denominator_of(x * 2));  // coarsen to halves
  return try_instance(r, *xi, pts);
}

// GL2 polygons through a wall point p0 bounded there by two facets that are
// mirror images under s_alpha, cut by facets not positive on alpha.
std::shared_ptr<Instance> mirror_gl2_instance(Rng& rng) {
  RootSystem r = gl2();
  QVec p0{0, rng.rational(-3, 3, 2)};
  long n0 = rng.uniform(-3, 3);
  QVec rho{n0, 2 * n0 - 1}, rhob{1 - n0, 1 - 2 * n0};
  const Rational big = 60;
  Poly p{{-big, -big}, {big, -big}, {big, big}, {-big, big}};
  p = clip(p, rho, dot(rho, p0));
  p = clip(p, rhob, dot(rhob, p0));
  long cuts = rng.uniform(1, 3);
  for (long c = 0; c < cuts; ++c) {
    QVec m;
    do {
      m = QVec{rng.uniform(-4, 4), rng.uniform(-4, 4)};
    } while (is_zero(m) || 2 * m[0] - m[1] > 0);
    p = clip(p, m, dot(m, p0) - rng.rational(1, 6, 2));
  }
  for (const auto& v : p)
    if (abs(v[0]) == big || abs(v[1]) == big) return nullptr;
  Sublattice xi = rng.chance(0.7) ? Sublattice::full(2) : Sublattice({{2, -1}, {0, 1}}, 2);
  return try_instance(r, xi, p);
}

// Products of A1 (possibly with a torus factor) in the root lattice, with
// polytopes that have whole facets on the walls: many Q-compatible roots.
std::shared_ptr<Instance> wall_instance(Rng& rng) {
  long k = rng.uniform(0, 3);
  std::vector<ComponentSpec> comps(k == 2 ? 3 : 2, ComponentSpec{'A', 1});
  int torus = k == 3 ? 1 : 0;
  if (k == 3) comps.pop_back();
  RootSystem r(RootSystemSpec{comps, torus, std::nullopt});
  std::size_t n = r.rank(), s = r.num_simple();
  std::vector<QVec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    bool weight = i >= s || rng.chance(0.2);
    gens.push_back(Rational(weight ? 1 : 2) * unit(n, i));
  }
  Sublattice xi(gens, n);
  // local coordinates c, weight = sum c_i gens_i; the orthant is dominant
  auto local_point = [&](bool on_axes) {
    QVec c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= s) c[i] = rng.uniform(-1, 1);
      else c[i] = on_axes && rng.chance(0.5) ? Rational(0) : rng.rational(0, 3, 2);
    }
    return c;
  };
  std::vector<QVec> pts;
  QVec corner(n);
  for (std::size_t i = 0; i < s; ++i) corner[i] = rng.chance(0.75) ? 0 : rng.uniform(1, 2);
  pts.push_back(corner);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(corner + Rational(rng.uniform(1, 3)) * unit(n, i));
  long extra = rng.uniform(0, 3);
  for (long j = 0; j < extra; ++j) pts.push_back(corner + local_point(true));
  std::vector<QVec> ambient;
  for (const auto& c : pts) ambient.push_back(xi.embed(c));
  return try_instance(r, xi, ambient);
}

struct PoolEntry {
  std::shared_ptr<Instance> in;
  std::vector<SphericalRoot> compatible;
  std::vector<std::vector<SphericalRoot>> subsets;  // of compatible
};

std::vector<PoolEntry> make_pool(Rng& rng) {
  std::vector<PoolEntry> pool;
  auto add = [&](std::shared_ptr<Instance> in) {
    if (!in) return false;
    PoolEntry e;
    e.in = in;
    for (const auto& s : in->catalog()) {
      try {
        if (q_compatible(*in, s).passed()) e.compatible.push_back(s);
      } catch (const UnsupportedError&) {
      }
    }
    const auto& c = e.compatible;
    if (c.size() <= 6) {
      for (std::size_t mask = 0; mask < (std::size_t(1) << c.size()); ++mask) {
        std::vector<SphericalRoot> s;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (mask >> i & 1) s.push_back(c[i]);
        e.subsets.push_back(s);
      }
    } else {
      e.subsets.push_back({});
      for (int k = 0; k < 64; ++k) {
        std::vector<SphericalRoot> s;
        for (const auto& x : c)
          if (rng.chance(0.4)) s.push_back(x);
        e.subsets.push_back(s);
      }
    }
    pool.push_back(std::move(e));
    return true;
  };
  for (int made = 0, tries = 0; made < 450 && tries < 5000; ++tries) made += add(random_instance(rng));
  for (int made = 0, tries = 0; made < 300 && tries < 5000; ++tries) made += add(mirror_gl2_instance(rng));
  for (int made = 0, tries = 0; made < 550 && tries < 5000; ++tries) made += add(wall_instance(rng));
  return pool;
}

// ------------------------------------------------------------------ suites

bool lp_in_hull(const std::vector<QVec>& pts, const QVec& x) {
  LinearProgram lp(pts.size());
  lp.set_all_nonnegative();
  lp.add(QVec(pts.size(), Rational(1)), Rel::eq, 1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    QVec row(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) row[i] = pts[i][j];
    lp.add(row, Rel::eq, x[j]);
  }
  lp.set_objective(QVec(pts.size(), Rational(0)));
  return lp.solve().status == LPStatus::optimal;
}

// Facets checked against an LP membership oracle: every reported facet is a
// supporting hyperplane with a (d-1)-dimensional tight set, the vertex set
// equals the LP extreme points, and the H-description agrees with the convex
// hull on random test points.
Suite suite_facets(Rng& rng) {
  Suite s{"facet enumeration vs LP hull oracle (dim <= 3)"};
  while (s.instances < 250) {
    std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    std::size_t k = d + 1 + static_cast<std::size_t>(rng.uniform(0, 5));
    std::vector<QVec> pts;
    for (std::size_t i = 0; i < k; ++i) {
      QVec p(d);
      for (auto& x : p) x = rng.rational(-3, 3, 3);
      pts.push_back(p);
    }
    if (affine_rank(pts) != d) continue;
    RationalPolytope q(Sublattice::full(d), pts);
    ++s.instances;
    auto where = [&] {
      std::string t;
      for (const auto& p : pts) t += to_string(p);
      return t;
    };
    std::set<QVec> verts(q.vertices().begin(), q.vertices().end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<QVec> others;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (pts[j] != pts[i]) others.push_back(pts[j]);
      bool extreme = others.empty() || !lp_in_hull(others, pts[i]);
      s.expect(extreme == (verts.count(pts[i]) == 1), [&] { return "vertex status of " + to_string(pts[i]) + " in " + where(); });
    }
    std::set<QVec> normals;
    for (const auto& f : q.facets()) {
      s.expect(is_primitive_dual(f.normal), [&] { return "normal " + to_string(f.normal) + " not primitive"; });
      normals.insert(f.normal);
      std::vector<std::size_t> tight;
      std::vector<QVec> tight_pts;
      for (std::size_t i = 0; i < q.vertices().size(); ++i) {
        Rational val = dot(f.normal, q.local(i)) + f.offset;
        s.expect(val >= 0, [&] { return "facet " + to_string(f.normal) + " cuts a vertex in " + where(); });
        if (val == 0) {
          tight.push_back(i);
          tight_pts.push_back(q.vertex(i));
        }
      }
      s.expect(tight == f.vertices, [&] { return "tight set of " + to_string(f.normal) + " in " + where(); });
      s.expect(!tight_pts.empty() && affine_rank(tight_pts) + 1 == d,
               [&] { return "facet " + to_string(f.normal) + " is not a facet in " + where(); });
    }
    s.expect(normals.size() == q.facets().size(), [&] { return "duplicate facets in " + where(); });
    for (int t = 0; t < 20; ++t) {
      QVec x(d);
      if (t % 2 == 0) {
        for (auto& c : x) c = rng.rational(-4, 4, 4);
      } else {
        // near the boundary: a vertex nudged in a random direction
        const QVec& v = q.vertex(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(q.vertices().size()) - 1)));
        QVec dir(d);
        for (auto& c : dir) c = Rational(rng.uniform(-1, 1), rng.uniform(2, 8));
        x = v + dir;
      }
      bool h = true;
      for (const auto& f : q.facets()) h = h && dot(f.normal, q.local_of(x)) + f.offset >= 0;
      s.expect(h == lp_in_hull(pts, x), [&] { return "membership of " + to_string(x) + " in " + where(); });
    }
    if (d == 3) {
      std::map<std::size_t, long> f;
      for (const auto& face : q.faces()) ++f[face.dim];
      s.expect(f[0] - f[1] + f[2] == 2, [&] { return "Euler relation fails in " + where(); });
    }
    if (d == 2) s.expect(q.facets().size() == q.vertices().size(), [&] { return "polygon edge count in " + where(); });
  }
  return s;
}

Suite suite_duality(Rng& rng) {
  Suite s{"dual cone double duality"};
  while (s.instances < 300) {
    std::size_t d = static_cast<std::size_t>(rng.uniform(1, 4));
    std::size_t k = static_cast<std::size_t>(rng.uniform(0, 5));
    std::vector<QVec> gens;
    for (std::size_t i = 0; i < k; ++i) {
      QVec g(d);
      for (auto& x : g) x = rng.uniform(-3, 3);
      gens.push_back(g);
    }
    Cone c(d, gens);
    Cone dual = c.dual();
    ++s.instances;
    auto where = [&] {
      std::string t;
      for (const auto& g : gens) t += to_string(g);
      return "cone" + t;
    };
    s.expect(same_cone(c, dual.dual()), [&] { return "C != C^vv for " + where(); });
    const auto& dual_gens = dual.generators();
    for (const auto& g : gens)
      for (const auto& h : dual_gens)
        s.expect(dot(g, h) >= 0, [&] { return "dual generator " + to_string(h) + " negative on " + where(); });
    for (int t = 0; t < 8; ++t) {
      QVec y(d);
      for (auto& x : y) x = rng.uniform(-3, 3);
      bool direct = true;
      for (const auto& g : gens) direct = direct && dot(g, y) >= 0;
      s.expect(direct == dual.contains(y), [&] { return "dual membership of " + to_string(y) + " for " + where(); });
      s.expect(c.contains(y) == (gens.empty() ? is_zero(y) : in_cone(gens, y)),
               [&] { return "membership of " + to_string(y) + " for " + where(); });
    }
  }
  return s;
}

std::string describe(const Instance& in, const std::vector<SphericalRoot>& sigma = {}) {
  std::string t = "lattice";
  for (const auto& b : in.lattice().basis()) t += to_string(b);
  t += " Q";
  for (const auto& v : in.polytope().vertices()) t += to_string(v);
  if (!sigma.empty()) t += " Sigma " + in.sigma_name(sigma);
  return t;
}

Suite suite_sum_identities(const std::vector<PoolEntry>& pool) {
  Suite s{"sum identities rho_F + rho_F' = alpha^vee|Xi and m-sum"};
  for (const auto& e : pool) {
    const Instance& in = *e.in;
    const auto& q = in.polytope();
    const auto& r = in.roots();
    bool counted = false;
    for (const auto& sg : e.compatible) {
      auto a = simple_index(sg);
      if (!a) continue;
      QVec al = *in.local(r.simple_root(*a));
      std::vector<std::size_t> pos;
      for (std::size_t k = 0; k < q.facets().size(); ++k)
        if (dot(q.facets()[k].normal, al) > 0) pos.push_back(k);
      // the general inequality, for every compatible simple root
      AlphaPair ap = build_A(in, *a);
      Rational mF = q.facets()[ap.facet].offset;
      for (std::size_t i = 0; i < q.vertices().size(); ++i)
        s.expect(dot(ap.minus, q.local(i)) + r.pair(*a, q.omega()) - mF >= 0,
                 [&] { return "D^- inequality at v" + std::to_string(i + 1) + " for " + describe(in); });
      if (pos.size() < 2) continue;
      counted = true;
      for (std::size_t x = 0; x < pos.size(); ++x)
        for (std::size_t y = x + 1; y < pos.size(); ++y) {
          const Facet& f = q.facets()[pos[x]];
          const Facet& g = q.facets()[pos[y]];
          s.expect(f.normal + g.normal == in.coroot_local(*a),
                   [&] { return "rho sum " + to_string(f.normal + g.normal) + " for " + describe(in); });
          s.expect(f.offset + g.offset == r.pair(*a, q.omega()),
                   [&] { return "m sum " + to_string(f.offset + g.offset) + " for " + describe(in); });
        }
    }
    s.instances += counted;
  }
  return s;
}

struct QaCache {
  std::map<std::vector<SphericalRoot>, bool, decltype(&sigma_less)> memo{&sigma_less};
  const Instance* in = nullptr;
  std::optional<bool> get(const std::vector<SphericalRoot>& sigma) {
    auto key = sorted(sigma);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Verdict v = q_admissible(*in, key);
    if (v.status == Status::unsupported) return std::nullopt;
    return memo[key] = v.passed();
  }
};

Suite suite_subsets(const std::vector<PoolEntry>& pool) {
  Suite s{"q-admissibility subset closure and pairwise characterization"};
  for (const auto& e : pool) {
    if (e.compatible.size() < 2) continue;
    const Instance& in = *e.in;
    QaCache qa;
    qa.in = &in;
    ++s.instances;
    for (const auto& sigma : e.subsets) {
      auto whole = qa.get(sigma);
      if (!whole) continue;
      bool pairs = true;
      for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i; j < sigma.size(); ++j) {
          std::vector<SphericalRoot> p{sigma[i]};
          if (j != i) p.push_back(sigma[j]);
          pairs = pairs && qa.get(p).value_or(false);
        }
      s.expect(*whole == pairs, [&] { return "pairwise characterization for " + describe(in, sigma); });
      if (*whole)
        for (std::size_t i = 0; i < sigma.size(); ++i) {
          auto smaller = sigma;
          smaller.erase(smaller.begin() + static_cast<long>(i));
          s.expect(qa.get(smaller).value_or(false), [&] { return "subset closure for " + describe(in, sigma); });
        }
    }
  }
  return s;
}

Integer scaling_factor(const Instance& in, const std::vector<SphericalRoot>& sigma) {
  const auto& q = in.polytope();
  Integer n = 1;
  for (const auto& v : q.vertices()) n = lcm(n, denominator_lcm(v));
  for (std::size_t i = 0; i < q.vertices().size(); ++i)
    for (std::size_t j = i + 1; j < q.vertices().size(); ++j)
      n = lcm(n, denominator_lcm(*in.lattice().coords(q.vertex(j) - q.vertex(i))));
  for (std::size_t k = 0; k < q.facets().size(); ++k)
    for (const auto& v : q.vertices()) n = lcm(n, denominator_of(m_sigma(in, sigma, k, v)));
  return n;
}

struct Scaled {
  std::shared_ptr<Instance> in;
  Integer n;
};

Scaled scaled(const Instance& in, const Integer& n) {
  std::vector<QVec> pts;
  for (const auto& v : in.polytope().vertices()) pts.push_back(Rational(n) * v);
  return {std::make_shared<Instance>(in.roots(), in.lattice(), pts, in.luna_ptr()), n};
}

struct MonoidComparison {
  bool admissible = false, monoid = false;
  // every Sigma-orbit vertex v' has (v', 1) in the extended lattice
  bool degree_one = false;
};

// Xi~ = Xi + Z(v, 1) for the first orbit vertex v in Lambda.
std::optional<MonoidComparison> compare_monoid(const Instance& in, const std::vector<SphericalRoot>& sigma) {
  const auto& q = in.polytope();
  auto ov = orbit_vertices(in, sigma);
  for (auto i : ov) {
    if (!is_integral(q.vertex(i))) continue;
    Sublattice ext = extended_lattice(in.lattice(), q.vertex(i));
    Monoid m = make_monoid(in.roots(), ext, q.vertices());
    Verdict a = admissible(in, sigma);
    Verdict b = monoid_admissible(in.roots(), in.luna(), m, sigma);
    if (a.status == Status::unsupported || b.status == Status::unsupported) return std::nullopt;
    MonoidComparison c{a.passed(), b.passed(), true};
    for (auto j : ov) {
      QVec lifted = q.vertex(j);
      lifted.push_back(1);
      c.degree_one = c.degree_one && ext.member(lifted);
    }
    return c;
  }
  return std::nullopt;
}

void suites_scaling_monoid(const std::vector<PoolEntry>& pool, Suite& scaling, Suite& monoid) {
  std::size_t monoid_degree_one = 0, outside = 0;
  std::string outside_example;
  for (const auto& e : pool) {
    const Instance& in = *e.in;
    QaCache qa;
    qa.in = &in;
    std::size_t used = 0;
    for (const auto& sigma : e.subsets) {
      if (used++ == 16) break;
      auto ok = qa.get(sigma);
      if (!ok) continue;
      Integer n = scaling_factor(in, sigma);
      Scaled sc = scaled(in, n);
      Verdict adm = admissible(*sc.in, sigma);
      if (adm.status == Status::unsupported) continue;
      ++scaling.instances;
      scaling.expect(*ok == adm.passed(), [&] {
        return "q-admissible " + std::string(*ok ? "yes" : "no") + " but admissible(nQ) " + adm.axiom + ": " +
               adm.witness + ", n = " + n.str() + ", " + describe(in, sigma);
      });
      if (!*ok) continue;
      for (const Instance* x : std::array<const Instance*, 2>{&in, sc.in.get()}) {
        auto c = compare_monoid(*x, sigma);
        if (!c) continue;
        ++monoid.instances;
        auto what = [&] { return std::string(c->admissible ? "admissible" : "not admissible") + " but " +
                                 (c->monoid ? "monoid-admissible" : "not monoid-admissible") + " for " +
                                 describe(*x, sigma); };
        monoid.expect(!c->admissible || c->monoid, what);
        if (c->degree_one) {
          ++monoid_degree_one;
          monoid.expect(c->admissible == c->monoid, what);
        } else if (c->monoid && !c->admissible) {
          std::string d = describe(*x, sigma);
          if (outside++ == 0 || d.size() < outside_example.size()) outside_example = d;
        }
      }
    }
  }
  monoid.extra = "equivalence checked on " + std::to_string(monoid_degree_one) +
                 " with all orbit vertices in degree 1; converse fails outside that on " + std::to_string(outside) +
                 (outside ? ", smallest: " + outside_example : std::string());
}

void suites_colors(const std::vector<PoolEntry>& pool, Suite& fan, Suite& nd) {
  for (const auto& e : pool) {
    const Instance& in = *e.in;
    const auto& r = in.roots();
    const auto& q = in.polytope();
    QaCache qa;
    qa.in = &in;
    for (const auto& sigma : e.subsets) {
      if (!qa.get(sigma).value_or(false)) continue;
      auto s = sorted(sigma);
      ColorTable t = color_table(in, s);
      ColoredFan f = colored_fan(in, s, t);
      Verdict v = validate_colored_fan(t, f, valuation_cone(in, s));
      ++fan.instances;
      fan.expect(v.passed(), [&] { return v.axiom + ": " + v.witness + " for " + describe(in, s); });

      ++nd.instances;
      for (const auto& w : q.vertices()) {
        ColorTable tw = color_table(in, s, w);
        for (std::size_t a = 0; a < r.num_simple(); ++a) {
          if (in.in_sp(a)) continue;
          bool doubled = false;
          for (const auto& x : s) doubled = doubled || x.coeffs == Rational(2) * unit(r.num_simple(), a);
          Rational lhs = (doubled ? Rational(1, 2) : Rational(1)) * r.pair(a, w);
          Rational rhs = 0;
          for (auto d : tw.moved[a]) rhs += tw.colors[d].n;
          nd.expect(lhs == rhs, [&] {
            return "alpha" + std::to_string(a + 1) + ": " + to_string(lhs) + " vs " + to_string(rhs) + " at w = " +
                   to_string(w) + " for " + describe(in, s);
          });
        }
        for (const auto& d : tw.colors)
          for (std::size_t i = 0; i < q.vertices().size(); ++i)
            nd.expect(dot(d.rho, q.local(i) - q.local_of(w)) + d.n >= 0,
                      [&] { return "containment of " + d.name + " for " + describe(in, s); });
      }
    }
  }
}

Suite suite_orbit_faces(const std::vector<PoolEntry>& pool) {
  Suite s{"orbit faces contain orbit vertices (independent Sigma)"};
  for (const auto& e : pool) {
    const Instance& in = *e.in;
    const auto& q = in.polytope();
    std::vector<std::pair<SphericalRoot, QVec>> in_span;
    for (const auto& x : in.catalog())
      if (auto loc = in.local(in.sigma_weight(x))) in_span.emplace_back(x, *loc);
    std::size_t m = std::min<std::size_t>(in_span.size(), 8);
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
      std::vector<QVec> locs;
      std::vector<SphericalRoot> sigma;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) {
          locs.push_back(in_span[i].second);
          sigma.push_back(in_span[i].first);
        }
      if (!locs.empty() && rank(locs, q.dim()) != locs.size()) continue;
      Cone v = valuation_cone(q.dim(), locs);
      auto ov = orbit_vertices(q, v);
      ++s.instances;
      for (auto k : orbit_faces(q, v)) {
        bool has = false;
        for (auto i : q.faces()[k].vertices) has = has || std::count(ov.begin(), ov.end(), i);
        s.expect(has, [&] { return "orbit face without orbit vertex for " + describe(in, sigma); });
      }
    }
  }
  return s;
}

QMat random_unimodular(Rng& rng, std::size_t n) {
  QMat u(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  for (int step = 0; step < 6; ++step) {
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    long c = rng.uniform(-2, 2);
    for (std::size_t k = 0; k < n; ++k) u[i][k] += c * u[j][k];
  }
  return u;
}

QVec mat_vec(const QMat& u, const QVec& x) {
  QVec y(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) y[i] = dot(u[i], x);
  return y;
}

// Lattice polytopes in local coordinates: Delzant shapes and random ones.
std::vector<QVec> torus_shape(Rng& rng, std::size_t d) {
  std::vector<QVec> pts;
  long a = rng.uniform(1, 3), b = rng.uniform(1, 3), c = rng.uniform(1, 3);
  switch (rng.uniform(0, 4)) {
    case 0:  // simplex
      pts.push_back(zeros(d));
      for (std::size_t i = 0; i < d; ++i) pts.push_back(Rational(a) * unit(d, i));
      break;
    case 1:  // box
      for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        QVec p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = (mask >> i & 1) ? Rational(i == 0 ? a : i == 1 ? b : c) : Rational(0);
        pts.push_back(p);
      }
      break;
    case 2:  // box with a corner cut off
      for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        QVec p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = (mask >> i & 1) ? Rational(a + 1) : Rational(0);
        if (mask + 1 == (std::size_t(1) << d)) {
          for (std::size_t i = 0; i < d; ++i) {
            QVec q = p;
            q[i] -= 1;
            pts.push_back(q);
          }
        } else {
          pts.push_back(p);
        }
      }
      break;
    case 3:  // a non-Delzant weighted simplex
      pts.push_back(zeros(d));
      for (std::size_t i = 0; i < d; ++i) pts.push_back(Rational(i == 0 ? 2 * a : a) * unit(d, i));
      break;
    default:
      for (std::size_t i = 0; i < d + 3; ++i) {
        QVec p(d);
        for (auto& x : p) x = rng.rational(0, 3, rng.chance(0.3) ? 2 : 1);
        pts.push_back(p);
      }
  }
  return pts;
}

Suite suite_torus(Rng& rng) {
  Suite s{"torus smooth_check <=> Delzant at every vertex"};
  std::size_t yes = 0, no = 0;
  while (s.instances < 250) {
    std::size_t d = static_cast<std::size_t>(rng.uniform(2, 3));
    RootSystem r(RootSystemSpec{{}, static_cast<int>(d), std::nullopt});
    QMat u = random_unimodular(rng, d);
    Sublattice xi = rng.chance(0.5) ? Sublattice::full(d) : Sublattice(random_unimodular(rng, d), d);
    if (rng.chance(0.3)) {
      QMat g = xi.basis();
      g[0] = Rational(2) * g[0];
      xi = Sublattice(g, d);
    }
    QVec shift(d);
    for (auto& x : shift) x = rng.rational(-2, 2, 2);
    std::vector<QVec> pts;
    for (const auto& p : torus_shape(rng, d)) pts.push_back(shift + xi.embed(mat_vec(u, p)));
    auto in = try_instance(r, xi, pts);
    if (!in) continue;
    const auto& q = in->polytope();
    bool delzant = true;
    for (std::size_t i = 0; i < q.vertices().size(); ++i) {
      QMat normals;
      for (const auto& f : q.facets())
        if (std::count(f.vertices.begin(), f.vertices.end(), i)) normals.push_back(f.normal);
      delzant = delzant && normals.size() == d && abs(determinant(normals)) == 1;
    }
    ++s.instances;
    (delzant ? yes : no)++;
    Verdict real = smooth_check(*in, {}, *g_socles, SmoothLevel::real);
    s.expect(real.passed() == delzant, [&] {
      return "real level " + real.axiom + " vs Delzant " + (delzant ? "yes" : "no") + " for " + describe(*in);
    });
    if (admissible(*in, {}).passed()) {
      Verdict alg = smooth_check(*in, {}, *g_socles);
      s.expect(alg.passed() == delzant, [&] { return "algebraic level disagrees for " + describe(*in); });
    }
  }
  s.name += " (" + std::to_string(yes) + " Delzant, " + std::to_string(no) + " not)";
  if (yes == 0 || no == 0) s.expect(false, [] { return "one outcome never occurred"; });
  return s;
}

Criterion criterion_properties() {
  Criterion c;
  Rng rng;
  std::vector<Suite> suites;
  suites.push_back(suite_facets(rng));
  suites.push_back(suite_duality(rng));
  auto pool = make_pool(rng);
  c.note("instance pool: " + std::to_string(pool.size()) + " pairs (Xi, Q)");
  suites.push_back(suite_sum_identities(pool));
  suites.push_back(suite_subsets(pool));
  Suite scaling{"scaling: q-admissible <=> admissible for nQ"};
  Suite monoid{"monoid/polytope admissibility via dual_rays (admissible => monoid-admissible; <= given degree-1 orbit vertices)"};
  suites_scaling_monoid(pool, scaling, monoid);
  suites.push_back(scaling);
  suites.push_back(monoid);
  Suite fan{"colored fan satisfies CC1, CC2, SCC, CF1, CF2 and completeness"};
  Suite nd{"n_D identity and containment"};
  suites_colors(pool, fan, nd);
  suites.push_back(fan);
  suites.push_back(nd);
  suites.push_back(suite_orbit_faces(pool));
  suites.push_back(suite_torus(rng));
  for (const auto& s : suites) {
    c.note(s.line());
    c.ok = c.ok && s.ok();
  }
  return c;
}

// ------------------------------------------------------------------ criterion 7

Criterion criterion_determinism() {
  Criterion c;
  struct Case {
    std::string file;
    bool has_sigma;
  };
  std::vector<Case> cases{{"foschi.json", false},         {"foschi.toml", false},      {"foschi_a1a2.json", true},
                          {"sp6.json", true},             {"sp6_pair.json", false},    {"sp4.json", true},
                          {"woodward_gl2.json", false},   {"woodward_gl2_empty.json", true},
                          {"reflective_gl2.json", false}, {"sl2xsl2.json", false},     {"torus_delzant.json", false},
                          {"malformed.json", true}};
  std::vector<std::vector<std::string>> commands;
  for (const auto& k : cases) {
    std::string f = fx(k.file);
    if (k.has_sigma) {
      for (const char* l : {"q-admissible", "admissible", "smooth", "q-reflexive", "reflexive", "kaehler"})
        commands.push_back({"check", f, "--level", l});
    } else {
      for (const char* l : {"q-admissible", "admissible", "smooth", "q-reflexive", "reflexive"})
        commands.push_back({"enumerate", f, "--level", l});
      commands.push_back({"kaehler", f});
    }
    for (const char* s : {"facets", "orbit-faces", "colors", "colored-fan"}) commands.push_back({"inspect", f, "--show", s});
    if (k.file == "sl2xsl2.json") commands.push_back({"quadruple", f});
  }
  std::size_t compared = 0;
  for (const auto& cmd : commands)
    for (const char* fmt : {"text", "json"}) {
      auto with = [&](const char* jobs) {
        std::vector<std::string> a{"--format", fmt, "--jobs", jobs, "--certificate"};
        a.insert(a.end(), cmd.begin(), cmd.end());
        return cli(a);
      };
      CliRun base = with("1");
      for (const char* jobs : {"1", "2", "4"}) {
        ++compared;
        c.expect(with(jobs) == base, cmd[0] + " " + cmd[1] + " " + (cmd.size() > 3 ? cmd[3] : "") + " --format " + fmt +
                                         " --jobs " + jobs + " differs from --jobs 1");
      }
    }
  c.note(std::to_string(commands.size() * 2) + " reports, " + std::to_string(compared) + " byte comparisons");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_data = argv[1];
  if (argc > 2) g_fixtures = argv[2];
  g_luna = std::make_shared<const LunaSTable>(LunaSTable::load(g_data + "/luna_s.toml"));
  g_socles = std::make_shared<const SocleRegistry>(SocleRegistry::load(g_data + "/socles.toml"));

  struct Item {
    const char* title;
    std::function<Criterion()> run;
  };
  std::vector<Item> items{
      {"SL3 Foschi: 4 admissible sets, all smooth, facet normals", criterion_foschi},
      {"Sp6: admissibility certificates and the socle failure at v2", criterion_sp6},
      {"Sp4: Q-reflexive but not reflexive", criterion_sp4},
      {"GL2 Woodward: not Kaehlerizable", criterion_woodward},
      {"SL2xSL2: no momentum quadruple for any Sigma", criterion_sl2xsl2},
      {"property suites", criterion_properties},
      {"determinism across runs and --jobs", criterion_determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Criterion c;
    try {
      c = items[i].run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    all = all && c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << items[i].title << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
