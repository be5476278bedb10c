#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace spheromo;
using namespace spheromo::test;

namespace {

const Color& color_named(const ColorTable& t, const std::string& name) {
  for (const auto& c : t.colors)
    if (c.name == name) return c;
  FAIL("no color " << name);
  return t.colors.front();
}

std::set<std::string> names_of(const ColorTable& t, const std::vector<std::size_t>& ids) {
  std::set<std::string> out;
  for (auto d : ids) out.insert(t.colors[d].name);
  return out;
}

}  // namespace

TEST_CASE("Sp6 colors") {
  auto pb = fixture("sp6.json");
  const Instance& in = *pb.instance;
  ColorTable t = color_table(in, *pb.sigma);
  CHECK(t.w == QVec{0, 1, 0});
  REQUIRE(t.colors.size() == 3);
  CHECK(color_named(t, "D_alpha2^+").rho == QVec{-3, 1});
  CHECK(color_named(t, "D_alpha2^+").n == 0);
  CHECK(color_named(t, "D_alpha2^-").rho == QVec{0, 1});
  CHECK(color_named(t, "D_alpha2^-").n == 1);
  const Color& glued = color_named(t, "D_alpha1=D_alpha3");
  CHECK(glued.rho == QVec{2, -1});
  CHECK(glued.moved_by == std::vector<std::size_t>{0, 2});
}

TEST_CASE("Sp6 orbit vertex data and the socle failure") {
  auto pb = fixture("sp6.json");
  const Instance& in = *pb.instance;
  ColorTable t = color_table(in, *pb.sigma);
  OrbitVertexData d = orbit_vertex_data(in, t, 1);
  CHECK(names_of(t, d.d) == std::set<std::string>{"D_alpha2^+", "D_alpha1=D_alpha3"});
  CHECK(d.b.empty());
  Verdict v = smooth_check(in, *pb.sigma, socles());
  CHECK(v.status == Status::fail);
  CHECK(v.axiom == "smooth.socle");
  CHECK(v.witness.find("v2") != std::string::npos);
  CHECK(v.witness.find("-3") != std::string::npos);
}

TEST_CASE("Foschi: every Sigma is smooth") {
  auto pb = fixture("foschi_a1a2.json");
  CHECK(smooth_check(*pb.instance, *pb.sigma, socles()).passed());
  CHECK(smooth_check(*pb.instance, {}, socles()).passed());
}

TEST_CASE("GL2 Woodward example") {
  auto pb = fixture("woodward_gl2.json");
  const Instance& in = *pb.instance;
  Verdict v = smooth_check(in, {}, socles(), SmoothLevel::real);
  CHECK(v.axiom == "smooth.basis");
  CHECK(v.witness.find("v1 = (0, 0)") != std::string::npos);
  CHECK(v.witness.find("= 3 against rank 2") != std::string::npos);
  ColorTable t = color_table(in, {});
  OrbitVertexData d = orbit_vertex_data(in, t, 0);
  CHECK(d.d.size() + d.b.size() == 3);
  auto e = kaehler_check(in, socles());
  CHECK(e.passing.empty());
  CHECK(e.undecided.empty());
  auto q = enumerate_sigma(in, Level::q_admissible, nullptr);
  REQUIRE(q.passing.size() == 1);
  CHECK(q.passing[0].sigma.empty());
}

TEST_CASE("Reflective polytopes of GL2") {
  auto good = fixture("reflective_gl2.json");
  CHECK(is_simple_polytope(good.instance->polytope()));
  CHECK(reflective_check(*good.instance).passed());
  auto e = kaehler_check(*good.instance, socles());
  REQUIRE(e.passing.size() == 1);
  CHECK(good.instance->sigma_name(e.passing[0].sigma) == "{alpha1}");

  CHECK(woodward_facet_condition(*good.instance).passed());

  // Woodward's polytope is simple and reflective, but the facet through v2 and v4
  // pairs positively with alpha without containing P ∩ H_alpha = {0}
  auto bad = fixture("woodward_gl2.json");
  CHECK(is_simple_polytope(bad.instance->polytope()));
  CHECK(reflective_check(*bad.instance).passed());
  Verdict w = woodward_facet_condition(*bad.instance);
  CHECK(w.status == Status::fail);
}

TEST_CASE("Torus Delzant polygon is Kaehler with trivial Sigma") {
  auto pb = fixture("torus_delzant.json");
  auto e = kaehler_check(*pb.instance, socles());
  REQUIRE(e.passing.size() == 1);
  CHECK(e.passing[0].sigma.empty());
}

TEST_CASE("Colored fans of Foschi validate and contain Q") {
  auto pb = fixture("foschi.json");
  const Instance& in = *pb.instance;
  for (const auto& c : enumerate_sigma(in, Level::q_admissible, nullptr).passing) {
    ColorTable t = color_table(in, c.sigma);
    ColoredFan fan = colored_fan(in, c.sigma, t);
    CHECK(validate_colored_fan(t, fan, valuation_cone(in, c.sigma)).passed());
    // every color's half-space contains Q
    const auto& q = in.polytope();
    for (const auto& d : t.colors)
      for (std::size_t i = 0; i < q.vertices().size(); ++i)
        CHECK(dot(d.rho, q.local(i) - q.local_of(t.w)) + d.n >= 0);
  }
}

TEST_CASE("Verdicts do not depend on the reference point") {
  auto pb = fixture("foschi_a1a2.json");
  const Instance& in = *pb.instance;
  const auto& q = in.polytope();
  ColorTable t0 = color_table(in, *pb.sigma);
  for (const auto& w : q.vertices()) {
    ColorTable t = color_table(in, *pb.sigma, w);
    REQUIRE(t.colors.size() == t0.colors.size());
    for (std::size_t k = 0; k < t.colors.size(); ++k) {
      CHECK(t.colors[k].rho == t0.colors[k].rho);
      // n_D shifts by <rho(D), w - w0>
      CHECK(t.colors[k].n == t0.colors[k].n + dot(t0.colors[k].rho, q.local_of(w) - q.local_of(t0.w)));
    }
    CHECK(validate_colored_fan(t, colored_fan(in, *pb.sigma, t), valuation_cone(in, *pb.sigma)).passed());
  }
}

TEST_CASE("Synthetic fans: SCC and CF2 failures") {
  ColorTable t;
  t.colors.push_back(Color{"D0", QVec{0, 0}, 0, {0}, false});
  Cone whole = valuation_cone(2, {});
  ColoredFan zero;
  zero.cones.push_back(ColoredCone{RationalPolytope::npos, Cone(2, {}), {0}});
  Verdict v = validate_colored_fan(t, zero, whole);
  CHECK(v.axiom == "fan.scc");

  ColoredFan overlap;
  for (const auto& gens : std::vector<std::vector<QVec>>{
           {}, {{1, 0}}, {{0, 1}}, {{1, 1}}, {{1, 0}, {0, 1}}, {{1, 0}, {1, 1}}})
    overlap.cones.push_back(ColoredCone{RationalPolytope::npos, Cone(2, gens), {}});
  ColorTable none;
  CHECK(validate_colored_fan(none, overlap, whole).axiom == "fan.cf2");

  ColoredFan missing_face;
  missing_face.cones.push_back(ColoredCone{RationalPolytope::npos, Cone(2, {{1, 0}, {0, 1}}), {}});
  CHECK(validate_colored_fan(none, missing_face, whole).axiom == "fan.cf1");

  ColoredFan line;
  line.cones.push_back(ColoredCone{RationalPolytope::npos, Cone(2, {{1, 0}, {-1, 0}}), {}});
  CHECK(validate_colored_fan(none, line, whole).axiom == "fan.scc");
}

TEST_CASE("Dynkin types of subdiagrams") {
  RootSystem r = group({{'C', 3}});
  CHECK(diagram_type(r, {0, 2}) == "A1xA1");
  CHECK(diagram_type(r, {1, 2}) == "B2");  // B2 = C2
  CHECK(diagram_type(r, {}) == "");
  CHECK(diagram_type(group({{'B', 3}}), {0, 1, 2}) == "B3");
}
