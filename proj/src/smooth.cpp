#include "spheromo/colored.hpp"
#include "spheromo/linalg.hpp"

#include <algorithm>

namespace spheromo {

OrbitVertexData orbit_vertex_data(const Instance& in, const ColorTable& t, std::size_t vertex) {
  const auto& q = in.polytope();
  const Face& face = q.faces()[q.vertex_face(vertex)];
  OrbitVertexData data;
  data.vertex = vertex;
  data.d = colors_of_face(in, t, face);
  for (std::size_t a = 0; a < t.moved.size(); ++a) {
    bool all = true;
    for (auto d : t.moved[a]) all = all && std::find(data.d.begin(), data.d.end(), d) != data.d.end();
    if (all) data.s.push_back(a);
  }
  for (const auto& ray : normal_cone(q, face).rays()) {
    bool colored = false;
    for (auto d : data.d)
      colored = colored || (!is_zero(t.colors[d].rho) && positively_proportional(ray, t.colors[d].rho));
    if (!colored) data.b.push_back(ray);
  }
  return data;
}

namespace {

std::string roots_list(const RootSystem& r, const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + r.root_name(idx[i]);
  return s + "}";
}

std::string colors_list(const ColorTable& t, const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + t.colors[idx[i]].name;
  return s + "}";
}

std::string vectors_list(const std::vector<QVec>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + to_string(vs[i]);
  return s + "}";
}

}  // namespace

Verdict smooth_check(const Instance& in, const std::vector<SphericalRoot>& sigma, const SocleRegistry& registry,
                     SmoothLevel level) {
  bool algebraic = level == SmoothLevel::algebraic;
  Verdict pre = algebraic ? admissible(in, sigma) : q_admissible(in, sigma);
  if (!pre.passed()) {
    pre.trace.push_back(algebraic ? "not a momentum triple" : "not an R-momentum triple");
    return pre;
  }
  const auto& r = in.roots();
  const auto& q = in.polytope();
  ColorTable t = color_table(in, sigma);
  auto ov = orbit_vertices(in, sigma);
  if (ov.empty()) return Verdict::fail("smooth.orbit_vertex", "Q has no orbit vertex");

  std::vector<std::string> trace;
  std::optional<Verdict> undecided;
  for (auto i : ov) {
    std::string vn = in.vertex_name(i);
    std::string vfull = vn + " = " + to_string(q.vertex(i));
    OrbitVertexData data = orbit_vertex_data(in, t, i);
    trace.push_back(vn + ": S(v) = " + roots_list(r, data.s) + ", D(v) = " + colors_list(t, data.d) +
                    ", B(v) = " + vectors_list(data.b));
    QMat m;
    for (auto d : data.d) m.push_back(t.colors[d].rho);
    for (const auto& b : data.b) m.push_back(b);
    if (m.size() != q.dim()) {
      Verdict f = Verdict::fail("smooth.basis", "at " + vfull + ": |D(v) ∪ B(v)| = " + std::to_string(m.size()) +
                                                    " against rank " + std::to_string(q.dim()));
      f.trace = trace;
      return f;
    }
    Rational det = determinant(m);
    if (det != 1 && det != -1) {
      Verdict f = Verdict::fail("smooth.basis", "at " + vfull + ": rho(D(v) ∪ B(v)) has determinant " + to_string(det));
      f.trace = trace;
      return f;
    }
    if (r.strictly_dominant(q.vertex(i))) continue;
    LocalizedSocle soc = localized_socle(in, sigma, t, data);
    Verdict b = registry.match(r, soc, vn);
    if (b.status == Status::fail) {
      for (const auto& line : b.trace) trace.push_back(line);
      b.trace = trace;
      return b;
    }
    if (b.status == Status::unsupported && !undecided) undecided = b;
  }
  if (undecided) {
    undecided->trace = trace;
    return *undecided;
  }
  Verdict ok;
  ok.trace = trace;
  return ok;
}

Enumeration kaehler_check(const Instance& in, const SocleRegistry& registry, unsigned jobs) {
  return enumerate_sigma(in, Level::kaehler, &registry, jobs);
}

}  // namespace spheromo
