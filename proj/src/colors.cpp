#include "spheromo/colored.hpp"
#include "spheromo/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace spheromo {

QVec default_reference_point(const Instance& in, const std::vector<SphericalRoot>& sigma) {
  const auto& q = in.polytope();
  auto ov = orbit_vertices(in, sigma);
  if (ov.empty()) return q.omega();
  QVec best = q.vertex(ov[0]);
  for (auto i : ov)
    if (q.vertex(i) < best) best = q.vertex(i);
  return best;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool contains_root(const std::vector<SphericalRoot>& sigma, const QVec& coeffs) {
  for (const auto& s : sigma)
    if (s.coeffs == coeffs) return true;
  return false;
}

}  // namespace

ColorTable color_table(const Instance& in, const std::vector<SphericalRoot>& sigma, std::optional<QVec> w) {
  const auto& r = in.roots();
  const auto& q = in.polytope();
  std::size_t ns = r.num_simple();
  ColorTable t;
  t.w = w ? *w : default_reference_point(in, sigma);
  if (!q.contains(t.w)) throw DomainError("reference point " + to_string(t.w) + " is not in Q");
  t.moved.assign(ns, {});
  auto pairing_w = [&](std::size_t a) { return t.w[a]; };

  // A(alpha) members, glued by equal rho across different alphas
  struct Member {
    std::size_t alpha;
    int sign;
    QVec rho;
    Rational n;
  };
  std::vector<Member> members;
  for (const auto& s : sigma) {
    auto a = simple_index(s);
    if (!a) continue;
    AlphaPair p = build_A(in, *a);
    Rational nplus = q.offset_at(q.facets()[p.facet], t.w);
    members.push_back({*a, 0, p.plus, nplus});
    members.push_back({*a, 1, p.minus, pairing_w(*a) - nplus});
  }
  std::sort(members.begin(), members.end(),
            [](const Member& x, const Member& y) { return std::pair(x.alpha, x.sign) < std::pair(y.alpha, y.sign); });
  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i].alpha != members[j].alpha && members[i].rho == members[j].rho)
        parent[find_root(parent, j)] = find_root(parent, i);
  std::map<std::size_t, std::size_t> class_to_color;
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::size_t root = find_root(parent, i);
    std::string mname = "D_" + r.root_name(members[i].alpha) + (members[i].sign == 0 ? "^+" : "^-");
    auto it = class_to_color.find(root);
    if (it == class_to_color.end()) {
      Color c;
      c.name = mname;
      c.rho = members[i].rho;
      c.n = members[i].n;  // the first member's value; the others agree on admissible input
      c.in_A = true;
      class_to_color[root] = t.colors.size();
      t.colors.push_back(std::move(c));
      it = class_to_color.find(root);
    } else {
      t.colors[it->second].name += "=" + mname;
    }
    auto& mb = t.colors[it->second].moved_by;
    if (std::find(mb.begin(), mb.end(), members[i].alpha) == mb.end()) mb.push_back(members[i].alpha);
    t.a_colors[{members[i].alpha, members[i].sign}] = it->second;
  }

  // one color for each remaining alpha outside S^perp(Q), shared by an
  // orthogonal pair alpha, beta with alpha+beta or (alpha+beta)/2 in Sigma
  std::vector<bool> done(ns, false);
  for (std::size_t a = 0; a < ns; ++a) {
    if (done[a] || in.in_sp(a)) continue;
    QVec ua = unit(ns, a);
    if (contains_root(sigma, ua)) continue;
    Color c;
    c.name = "D_" + r.root_name(a);
    bool half = contains_root(sigma, Rational(2) * ua);
    c.rho = half ? Rational(1, 2) * in.coroot_local(a) : in.coroot_local(a);
    c.n = half ? pairing_w(a) / 2 : pairing_w(a);
    c.moved_by.push_back(a);
    done[a] = true;
    for (std::size_t b = a + 1; b < ns; ++b) {
      if (done[b] || !r.orthogonal(a, b) || contains_root(sigma, unit(ns, b))) continue;
      QVec sum = ua + unit(ns, b);
      if (contains_root(sigma, sum) || contains_root(sigma, Rational(1, 2) * sum)) {
        c.name += "=D_" + r.root_name(b);
        c.moved_by.push_back(b);
        done[b] = true;
      }
    }
    t.colors.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < t.colors.size(); ++i) {
    std::sort(t.colors[i].moved_by.begin(), t.colors[i].moved_by.end());
    for (auto a : t.colors[i].moved_by) t.moved[a].push_back(i);
  }
  return t;
}

std::vector<std::size_t> colors_of_face(const Instance& in, const ColorTable& t, const Face& f) {
  const auto& q = in.polytope();
  QVec wl = q.local_of(t.w);
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < t.colors.size(); ++d) {
    bool zero = true;
    for (auto i : f.vertices) zero = zero && dot(t.colors[d].rho, q.local(i) - wl) + t.colors[d].n == 0;
    if (zero) out.push_back(d);
  }
  return out;
}

ColoredFan colored_fan(const Instance& in, const std::vector<SphericalRoot>& sigma, const ColorTable& t) {
  const auto& q = in.polytope();
  ColoredFan fan;
  for (auto f : orbit_faces(q, valuation_cone(in, sigma))) {
    ColoredCone c;
    c.face = f;
    c.cone = normal_cone(q, q.faces()[f]);
    c.colors = colors_of_face(in, t, q.faces()[f]);
    fan.cones.push_back(std::move(c));
  }
  return fan;
}

namespace {

std::string cone_label(const ColoredCone& c, std::size_t i) {
  std::string s = "cone " + std::to_string(i + 1) + " [";
  bool first = true;
  for (const auto& g : c.cone.generators()) {
    s += (first ? "" : ", ") + to_string(g);
    first = false;
  }
  return s + "]";
}

// Facets of a full-dimensional pointed cone, each as the rays on it.
std::vector<std::pair<QVec, std::vector<QVec>>> cone_facets(const Cone& p) {
  std::size_t n = p.ambient_dim();
  auto rays = p.rays();
  std::vector<std::pair<QVec, std::vector<QVec>>> out;
  for (const auto& a : p.inequalities()) {
    std::vector<QVec> on;
    for (const auto& r : rays)
      if (dot(a, r) == 0) on.push_back(r);
    if (spheromo::rank(on, n) + 1 != n) continue;
    bool dup = false;
    for (const auto& f : out) dup = dup || f.second == on;
    if (!dup) out.emplace_back(a, std::move(on));
  }
  return out;
}

}  // namespace

Verdict validate_colored_fan(const ColorTable& t, const ColoredFan& fan, const Cone& v) {
  std::size_t n = v.ambient_dim();
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const auto& c = fan.cones[i];
    std::string label = cone_label(c, i);
    if (!c.cone.pointed()) return Verdict::fail("fan.scc", label + " is not strictly convex");
    for (auto d : c.colors)
      if (!c.cone.contains(t.colors[d].rho))
        return Verdict::fail("fan.cc1", "rho(" + t.colors[d].name + ") = " + to_string(t.colors[d].rho) +
                                            " is not in " + label);
    for (const auto& ray : c.cone.rays()) {
      if (v.contains(ray)) continue;
      bool found = false;
      for (auto d : c.colors) found = found || (!is_zero(t.colors[d].rho) && positively_proportional(ray, t.colors[d].rho));
      if (!found)
        return Verdict::fail("fan.cc1", "extremal ray " + to_string(ray) + " of " + label +
                                            " is neither in V nor spanned by a color of the cone");
    }
    if (!relint_meets(c.cone, v))
      return Verdict::fail("fan.cc2", "relative interior of " + label + " misses V");
    for (auto d : c.colors)
      if (is_zero(t.colors[d].rho)) return Verdict::fail("fan.scc", "rho(" + t.colors[d].name + ") = 0 in " + label);
  }

  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const auto& c = fan.cones[i];
    for (const auto& face_rays : c.cone.faces()) {
      Cone fc(n, face_rays);
      if (!relint_meets(fc, v)) continue;
      std::vector<std::size_t> want;
      for (auto d : c.colors)
        if (fc.contains(t.colors[d].rho)) want.push_back(d);
      bool found = false;
      for (const auto& o : fan.cones) found = found || (same_cone(o.cone, fc) && o.colors == want);
      if (!found) {
        std::string rs;
        for (const auto& r : face_rays) rs += (rs.empty() ? "" : ", ") + to_string(r);
        return Verdict::fail("fan.cf1", "colored face [" + rs + "] of " + cone_label(c, i) + " is not in the fan");
      }
    }
  }

  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j)
      if (relints_meet_in(fan.cones[i].cone, fan.cones[j].cone, v))
        return Verdict::fail("fan.cf2", "relative interiors of " + cone_label(fan.cones[i], i) + " and " +
                                            cone_label(fan.cones[j], j) + " meet inside V");

  if (n == 0) return Verdict::ok();
  std::vector<Cone> pieces;
  for (const auto& c : fan.cones) {
    auto ineq = c.cone.inequalities();
    for (const auto& a : v.inequalities()) ineq.push_back(a);
    Cone p = Cone::from_inequalities(n, ineq);
    if (p.dim() == n) pieces.push_back(std::move(p));
  }
  if (pieces.empty()) return Verdict::fail("fan.complete", "no cone of the fan meets V in full dimension");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const auto& [a, on] : cone_facets(pieces[i])) {
      bool boundary = true;
      for (const auto& g : v.generators()) boundary = boundary && dot(a, g) >= 0;
      if (boundary) continue;
      QVec x = zeros(n);
      for (const auto& r : on) x = x + r;
      bool covered = false;
      for (std::size_t j = 0; j < pieces.size() && !covered; ++j) {
        if (j == i || !pieces[j].contains(x)) continue;
        for (const auto& g : pieces[j].generators()) covered = covered || dot(a, g) < 0;
      }
      if (!covered)
        return Verdict::fail("fan.complete", "V is not covered beyond " + to_string(x) + " across the wall " +
                                                 to_string(a) + "^perp");
    }
  }
  return Verdict::ok();
}

}  // namespace spheromo
