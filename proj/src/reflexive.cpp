#include "spheromo/momentum.hpp"

namespace spheromo {

QVec anticanonical_weight(const Instance& in) {
  return in.roots().two_rho() - in.roots().two_rho(in.sp());
}

Verdict reflexive_check(const Instance& in, const std::vector<SphericalRoot>& sigma, ReflexiveLevel level) {
  Verdict pre = level == ReflexiveLevel::reflexive ? admissible(in, sigma) : q_admissible(in, sigma);
  if (!pre.passed()) {
    pre.trace.push_back(level == ReflexiveLevel::reflexive ? "not a momentum triple" : "not a Q-momentum triple");
    return pre;
  }
  const auto& q = in.polytope();
  const auto& r = in.roots();
  QVec w = anticanonical_weight(in);
  std::string wname = "w = 2rho - 2rho_{S^perp(Q)} = " + to_string(w);
  if (!q.contains(w)) return Verdict::fail("refl.w_in_Q", wname + " is not in Q");

  for (std::size_t k = 0; k < q.facets().size(); ++k) {
    const Facet& f = q.facets()[k];
    std::string reason;
    for (const auto& s : sigma) {
      auto a = simple_index(s);
      if (a && dot(f.normal, in.sigma_local(s)) > 0) {
        reason = "pairs positively with " + in.root_name(s);
        break;
      }
    }
    if (reason.empty()) {
      bool nonpositive = true;
      for (const auto& s : sigma) nonpositive = nonpositive && dot(f.normal, in.sigma_local(s)) <= 0;
      if (!nonpositive) continue;
      bool wall = false;
      for (std::size_t a = 0; a < r.num_simple() && !wall; ++a) {
        if (in.in_sp(a)) continue;
        bool vanish = true;
        for (auto i : f.vertices) vanish = vanish && q.vertex(i)[a] == 0;
        wall = vanish;
      }
      if (wall) continue;
      reason = "is nonpositive on Sigma and lies in no coroot wall";
    }
    Rational m = m_sigma(in, sigma, k, w);
    if (m != 1)
      return Verdict::fail("refl.unit_offset", in.facet_name(k) + " (normal " + to_string(f.normal) + ") " + reason +
                                                   " but m^Sigma_{F,w} = " + to_string(m) + ", " + wname);
  }

  if (level == ReflexiveLevel::reflexive) {
    auto ov = orbit_vertices(in, sigma);
    std::string why;
    for (auto i : ov) {
      QVec d = q.vertex(i) - w;
      if (in.lattice().member(d)) return Verdict::ok();
      auto c = in.local(d);
      why += (why.empty() ? "" : "; ") + in.vertex_name(i) + " - w has lattice coordinates " +
             (c ? to_string(*c) : std::string("(off span)"));
    }
    return Verdict::fail("refl.w_lattice", wname + ", no orbit vertex v has v - w in the lattice: " + why);
  }
  return Verdict::ok();
}

}  // namespace spheromo
