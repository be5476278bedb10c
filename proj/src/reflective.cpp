#include "spheromo/colored.hpp"
#include "spheromo/linalg.hpp"

#include <algorithm>

namespace spheromo {

bool is_simple_polytope(const RationalPolytope& q) {
  for (std::size_t i = 0; i < q.vertices().size(); ++i) {
    std::size_t count = 0;
    for (const auto& f : q.facets())
      if (std::find(f.vertices.begin(), f.vertices.end(), i) != f.vertices.end()) ++count;
    if (count != q.dim()) return false;
  }
  return true;
}

namespace {

// Facet hyperplane {x : <n, x> = c} in weight coordinates, as the vector (n, c).
QVec ambient_hyperplane(const RationalPolytope& q, const Facet& f) {
  std::size_t d = q.lattice().ambient();
  QMat basis = q.lattice().basis();
  auto n = solve(basis, f.normal, d);
  if (!n) throw DomainError("facet normal does not lift to the weight lattice");
  QVec h = *n;
  h.push_back(dot(*n, q.vertex(f.vertices.front())));
  return h;
}

std::vector<std::size_t> wall_vertices(const RationalPolytope& q, std::size_t alpha) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.vertices().size(); ++i)
    if (q.vertex(i)[alpha] == 0) out.push_back(i);
  return out;
}

}  // namespace

Verdict reflective_check(const Instance& in) {
  const auto& q = in.polytope();
  const auto& r = in.roots();
  if (q.dim() != r.rank())
    return Verdict::fail("reflective.max_dim", "dim P = " + std::to_string(q.dim()) + " but the rank is " +
                                                   std::to_string(r.rank()));
  std::vector<QVec> planes;
  for (const auto& f : q.facets()) planes.push_back(ambient_hyperplane(q, f));
  for (const auto& face : q.faces()) {
    for (std::size_t a = 0; a < r.num_simple(); ++a) {
      bool on_wall = true;
      for (auto i : face.vertices) on_wall = on_wall && q.vertex(i)[a] == 0;
      if (!on_wall) continue;
      for (auto k : face.facets) {
        // s_alpha(H) for H = {<n, x> = c} is {<n - <n, alpha> alpha^vee, x> = c}
        QVec image = planes[k];
        Rational na = 0;
        for (std::size_t j = 0; j < r.rank(); ++j) na += planes[k][j] * r.simple_root(a)[j];
        image[a] -= na;
        bool found = false;
        for (auto k2 : face.facets) found = found || proportional(image, planes[k2]);
        if (!found) {
          std::string verts;
          for (auto i : face.vertices) verts += (verts.empty() ? "" : ", ") + in.vertex_name(i);
          return Verdict::fail("reflective.stabilizer", "s_" + r.root_name(a) + " maps the hyperplane of " +
                                                            in.facet_name(k) + " to no facet hyperplane through {" +
                                                            verts + "}");
        }
      }
    }
  }
  for (std::size_t k = 0; k < q.facets().size(); ++k)
    for (std::size_t a = 0; a < r.num_simple(); ++a) {
      bool positive = false;
      for (auto i : q.facets()[k].vertices) positive = positive || q.vertex(i)[a] > 0;
      if (!positive)
        return Verdict::fail("reflective.chamber", in.facet_name(k) + " lies in the wall H_" + r.root_name(a));
    }
  return Verdict::ok();
}

Verdict woodward_facet_condition(const Instance& in) {
  const auto& q = in.polytope();
  const auto& r = in.roots();
  if (q.dim() != r.rank()) throw DomainError("the Woodward condition needs a full-rank polytope");
  Verdict hyp = reflective_check(in);
  std::vector<std::string> trace;
  trace.push_back(std::string("reflective: ") + (hyp.passed() ? "yes" : "no (" + hyp.axiom + ")"));
  trace.push_back(std::string("simple: ") + (is_simple_polytope(q) ? "yes" : "no"));
  bool walls = true;
  for (std::size_t a = 0; a < r.num_simple(); ++a) walls = walls && !wall_vertices(q, a).empty();
  trace.push_back(std::string("meets every wall: ") + (walls ? "yes" : "no"));
  for (std::size_t k = 0; k < q.facets().size(); ++k) {
    const Facet& f = q.facets()[k];
    for (std::size_t a = 0; a < r.num_simple(); ++a) {
      Rational p = dot(f.normal, *in.local(r.simple_root(a)));
      auto z = wall_vertices(q, a);
      bool contains = std::includes(f.vertices.begin(), f.vertices.end(), z.begin(), z.end());
      if ((p > 0) != contains) {
        Verdict v = Verdict::fail(
            "woodward.facet", in.facet_name(k) + " (normal " + to_string(f.normal) + ") pairs " + to_string(p) +
                                  " with " + r.root_name(a) + (contains ? " but contains" : " but does not contain") +
                                  " P ∩ H_" + r.root_name(a));
        v.trace = trace;
        return v;
      }
    }
  }
  Verdict ok;
  ok.trace = trace;
  return ok;
}

}  // namespace spheromo
