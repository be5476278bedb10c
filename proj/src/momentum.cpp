#include "spheromo/momentum.hpp"

#include <algorithm>

namespace spheromo {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unsupported: return "unsupported";
  }
  return "?";
}

Verdict Verdict::fail(std::string axiom, std::string witness) {
  Verdict v;
  v.status = Status::fail;
  v.axiom = std::move(axiom);
  v.witness = std::move(witness);
  return v;
}

Verdict Verdict::unsupported(std::string axiom, std::string witness) {
  Verdict v;
  v.status = Status::unsupported;
  v.axiom = std::move(axiom);
  v.witness = std::move(witness);
  return v;
}

std::vector<std::size_t> perp_simple_roots(const RootSystem& r, const Sublattice& lat) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.num_simple(); ++i) {
    bool zero = true;
    for (const auto& b : lat.basis()) zero = zero && b[i] == 0;
    if (zero) out.push_back(i);
  }
  return out;
}

Instance::Instance(RootSystem r, Sublattice xi, const std::vector<QVec>& points,
                   std::shared_ptr<const LunaSTable> luna)
    : r_(std::move(r)), xi_(std::move(xi)), luna_(std::move(luna)) {
  if (xi_.ambient() != r_.rank()) throw DomainError("lattice rank does not match the weight lattice");
  q_ = RationalPolytope(xi_, points);
  for (std::size_t i = 0; i < q_.vertices().size(); ++i)
    if (!r_.dominant(q_.vertex(i)))
      throw DomainError("vertex " + vertex_name(i) + " = " + to_string(q_.vertex(i)) + " is not dominant");
  catalog_ = spherical_root_catalog(r_);
  sp_lattice_ = perp_simple_roots(r_, xi_);
  for (std::size_t a = 0; a < r_.num_simple(); ++a) {
    bool zero = true;
    for (const auto& v : q_.vertices()) zero = zero && v[a] == 0;
    if (zero) sp_.push_back(a);
  }
  for (std::size_t i = 0; i < r_.num_simple(); ++i)
    coroot_local_.push_back(xi_.restrict_functional(r_.coroot(i)));
}

bool Instance::in_sp(std::size_t a) const { return std::find(sp_.begin(), sp_.end(), a) != sp_.end(); }

QVec Instance::sigma_local(const SphericalRoot& s) const {
  auto c = local(sigma_weight(s));
  if (!c) throw DomainError(root_name(s) + " is not in the span of the lattice");
  return *c;
}

std::string Instance::sigma_name(const std::vector<SphericalRoot>& sigma) const {
  std::string out = "{";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) out += ", ";
    out += root_name(sigma[i]);
  }
  return out + "}";
}

std::optional<std::size_t> simple_index(const SphericalRoot& s) {
  auto sup = s.support();
  if (sup.size() == 1 && s.coeffs[sup[0]] == 1) return sup[0];
  return std::nullopt;
}

std::optional<std::size_t> half_simple_index(const SphericalRoot& s) {
  auto sup = s.support();
  if (sup.size() == 1 && s.coeffs[sup[0]] == 2) return sup[0];
  return std::nullopt;
}

Verdict lattice_compatible(const RootSystem& r, const LunaSTable& luna, const Sublattice& lat,
                           const std::vector<std::size_t>& sp_of_lattice, const SphericalRoot& sigma,
                           const std::string& prefix) {
  std::string name = format_spherical_root(r, sigma.coeffs);
  QVec w = r.weight_of(sigma.coeffs);
  while (w.size() < lat.ambient()) w.push_back(0);
  if (!lat.is_primitive_element(w)) {
    auto c = lat.coords(w);
    std::string why;
    if (!c) why = "outside the span of the lattice";
    else if (!is_integral(*c)) why = "lattice coordinates " + to_string(*c);
    else why = "lattice coordinates " + to_string(*c) + " have a common factor";
    return Verdict::fail(prefix + ".primitive", name + " is not primitive in lattice: " + why);
  }
  try {
    if (!luna.check(r, sp_of_lattice, sigma))
      return Verdict::fail(prefix + ".luna_s", "(S^perp(lattice), " + name + ") violates axiom (S)");
  } catch (const UnsupportedError& e) {
    return Verdict::unsupported(prefix + ".luna_s", e.what());
  }
  if (sigma.row == "A1xA1" || sigma.row == "half_A1xA1") {
    std::size_t a = sigma.order[0], b = sigma.order[1];
    for (const auto& row : lat.basis())
      if (row[a] != row[b])
        return Verdict::fail(prefix + ".orthogonal_pair",
                             "basis vector " + to_string(row) + " pairs " + to_string(row[a]) + " with " +
                                 r.root_name(a) + "^vee but " + to_string(row[b]) + " with " +
                                 r.root_name(b) + "^vee");
  }
  if (sigma.row == "2A1") {
    std::size_t a = sigma.order[0];
    for (const auto& row : lat.basis())
      if (!is_integral(row[a] / 2))
        return Verdict::fail(prefix + ".even_pairing", "basis vector " + to_string(row) + " pairs " +
                                                           to_string(row[a]) + " with " + r.root_name(a) +
                                                           "^vee");
  }
  return Verdict::ok();
}

namespace {

// s_alpha(H_F) = H_G, tested on the reflected vertices of F.
bool mirror_of(const Instance& in, std::size_t alpha, std::size_t f, std::size_t g) {
  const auto& q = in.polytope();
  const Facet& G = q.facets()[g];
  const QVec& a = in.roots().simple_root(alpha);
  for (auto i : q.facets()[f].vertices) {
    QVec p = q.vertex(i);
    QVec image = p - p[alpha] * a;
    auto loc = in.local(image - q.omega());
    if (!loc) return false;
    if (dot(G.normal, *loc) + G.offset != 0) return false;
  }
  return true;
}

std::string describe_facet(const Instance& in, std::size_t k) {
  return in.facet_name(k) + " (normal " + to_string(in.polytope().facets()[k].normal) + ")";
}

AlphaPair build_A_unchecked(const Instance& in, std::size_t alpha) {
  QVec a = *in.local(in.roots().simple_root(alpha));
  const auto& facets = in.polytope().facets();
  for (std::size_t k = 0; k < facets.size(); ++k)
    if (dot(facets[k].normal, a) == 1) {
      AlphaPair p;
      p.alpha = alpha;
      p.facet = k;
      p.plus = facets[k].normal;
      p.minus = in.coroot_local(alpha) - p.plus;
      return p;
    }
  throw DomainError("no facet normal pairs to 1 with " + in.roots().root_name(alpha));
}

}  // namespace

Verdict q_compatible(const Instance& in, const SphericalRoot& sigma) {
  Verdict v = lattice_compatible(in.roots(), in.luna(), in.lattice(), in.sp_lattice(), sigma, "lattice");
  if (!v.passed()) return v;
  std::string name = in.root_name(sigma);
  try {
    if (!in.luna().check(in.roots(), in.sp(), sigma))
      return Verdict::fail("q.luna_s", "(S^perp(Q), " + name + ") violates axiom (S)");
  } catch (const UnsupportedError& e) {
    return Verdict::unsupported("q.luna_s", e.what());
  }
  const auto& q = in.polytope();
  QVec s = in.sigma_local(sigma);
  auto simple = simple_index(sigma);
  if (!simple) {
    for (std::size_t k = 0; k < q.facets().size(); ++k) {
      const Facet& f = q.facets()[k];
      Rational p = dot(f.normal, s);
      if (p <= 0) continue;
      bool found = false;
      for (std::size_t a = 0; a < in.roots().num_simple() && !found; ++a) {
        if (in.in_sp(a)) continue;
        bool vanish = true;
        for (auto i : f.vertices) vanish = vanish && q.vertex(i)[a] == 0;
        found = vanish;
      }
      if (!found)
        return Verdict::fail("q.facet_vanishing", describe_facet(in, k) + " pairs " + to_string(p) +
                                                      " with " + name +
                                                      " but no coroot outside S^perp(Q) vanishes on it");
    }
  } else {
    std::size_t a = *simple;
    std::vector<std::size_t> ones, positive;
    for (std::size_t k = 0; k < q.facets().size(); ++k) {
      Rational p = dot(q.facets()[k].normal, s);
      if (p == 1) ones.push_back(k);
      if (p > 0) positive.push_back(k);
    }
    if (ones.empty()) {
      std::string pairings;
      for (auto k : positive) pairings += " " + in.facet_name(k) + ":" + to_string(dot(q.facets()[k].normal, s));
      return Verdict::fail("q.mirror_facets", "no facet normal pairs to 1 with " + name +
                                                  (pairings.empty() ? "" : "; positive pairings" + pairings));
    }
    std::string witness;
    for (auto f : ones) {
      bool good = true;
      for (auto g : positive)
        if (g != f && !mirror_of(in, a, f, g)) {
          good = false;
          if (witness.empty())
            witness = describe_facet(in, g) + " pairs positively with " + name + " but is neither " +
                      in.facet_name(f) + " nor its mirror under s_" + name;
        }
      if (good) {
        witness.clear();
        break;
      }
    }
    if (!witness.empty()) return Verdict::fail("q.mirror_facets", witness);
  }
  if (sigma.row == "A1xA1" || sigma.row == "half_A1xA1") {
    std::size_t a = sigma.order[0], b = sigma.order[1];
    for (std::size_t i = 0; i < q.vertices().size(); ++i)
      if (q.vertex(i)[a] != q.vertex(i)[b])
        return Verdict::fail("q.orthogonal_pair_on_Q",
                             in.vertex_name(i) + " pairs " + to_string(q.vertex(i)[a]) + " with " +
                                 in.roots().root_name(a) + "^vee but " + to_string(q.vertex(i)[b]) + " with " +
                                 in.roots().root_name(b) + "^vee");
  }
  return Verdict::ok();
}

AlphaPair build_A(const Instance& in, std::size_t alpha) {
  SphericalRoot s;
  s.coeffs = unit(in.roots().num_simple(), alpha);
  auto found = find_spherical_root(in.catalog(), s.coeffs);
  if (!found) throw DomainError("simple root missing from the catalog");
  Verdict v = q_compatible(in, *found);
  if (!v.passed()) throw DomainError(in.roots().root_name(alpha) + " is not Q-compatible: " + v.witness);
  return build_A_unchecked(in, alpha);
}

Verdict q_admissible(const Instance& in, const std::vector<SphericalRoot>& sigma) {
  for (const auto& s : sigma) {
    Verdict v = q_compatible(in, s);
    if (!v.passed()) {
      v.trace.push_back(in.root_name(s) + " is not Q-compatible");
      return v;
    }
  }
  std::vector<AlphaPair> pairs;
  for (const auto& s : sigma)
    if (auto a = simple_index(s)) pairs.push_back(build_A_unchecked(in, *a));
  for (const auto& p : pairs) {
    std::string an = in.roots().root_name(p.alpha);
    for (int sign = 0; sign < 2; ++sign) {
      const QVec& rho = sign == 0 ? p.plus : p.minus;
      std::string dn = "D_" + an + (sign == 0 ? "^+" : "^-");
      for (const auto& s : sigma) {
        auto b = simple_index(s);
        if (b && *b == p.alpha) continue;
        Rational val = dot(rho, in.sigma_local(s));
        std::string where = "<rho(" + dn + "), " + in.root_name(s) + "> = " + to_string(val) + " with rho(" +
                            dn + ") = " + to_string(rho);
        if (val > 1) return Verdict::fail("q.pairing_bound", where);
        if (val == 1) {
          bool matched = false;
          if (b)
            for (const auto& o : pairs)
              if (o.alpha == *b && (o.plus == rho || o.minus == rho)) matched = true;
          if (!matched) return Verdict::fail("q.pairing_equality", where + " but no color of the other root shares it");
        }
      }
    }
  }
  return Verdict::ok();
}

QVec rho_sigma(const Instance& in, const std::vector<SphericalRoot>& sigma, std::size_t facet) {
  const QVec& rho = in.polytope().facets()[facet].normal;
  for (const auto& s : sigma)
    if (auto a = half_simple_index(s)) {
      auto al = in.local(in.roots().simple_root(*a));
      if (al && dot(rho, *al) > 0) return Rational(1, 2) * in.coroot_local(*a);
    }
  return rho;
}

Rational m_sigma(const Instance& in, const std::vector<SphericalRoot>& sigma, std::size_t facet, const QVec& p) {
  const auto& q = in.polytope();
  QVec r = rho_sigma(in, sigma, facet);
  return -dot(r, q.local(q.facets()[facet].vertices.front()) - q.local_of(p));
}

Cone valuation_cone(const Instance& in, const std::vector<SphericalRoot>& sigma) {
  std::vector<QVec> loc;
  for (const auto& s : sigma) loc.push_back(in.sigma_local(s));
  return valuation_cone(in.polytope().dim(), loc);
}

std::vector<std::size_t> orbit_vertices(const Instance& in, const std::vector<SphericalRoot>& sigma) {
  return orbit_vertices(in.polytope(), valuation_cone(in, sigma));
}

Verdict admissible(const Instance& in, const std::vector<SphericalRoot>& sigma) {
  Verdict v = q_admissible(in, sigma);
  if (!v.passed()) return v;
  const auto& q = in.polytope();
  auto ov = orbit_vertices(in, sigma);
  std::string names;
  for (auto i : ov) names += (names.empty() ? "" : ", ") + in.vertex_name(i);
  if (ov.empty()) return Verdict::fail("adm.orbit_vertex_lattice", "no orbit vertex");
  for (std::size_t k = 1; k < ov.size(); ++k) {
    QVec diff = q.vertex(ov[k]) - q.vertex(ov[0]);
    if (!in.lattice().member(diff)) {
      Verdict f = Verdict::fail("adm.orbit_vertex_lattice", in.vertex_name(ov[k]) + " - " + in.vertex_name(ov[0]) +
                                                                " = " + to_string(diff) + " is not in the lattice");
      f.trace.push_back("orbit vertices: " + names);
      return f;
    }
  }
  std::vector<std::size_t> relevant;
  for (std::size_t k = 0; k < q.facets().size(); ++k)
    for (const auto& s : sigma) {
      auto a = simple_index(s);
      if (!a) a = half_simple_index(s);
      if (!a) continue;
      auto al = in.local(in.roots().simple_root(*a));
      if (al && dot(q.facets()[k].normal, *al) > 0) {
        relevant.push_back(k);
        break;
      }
    }
  std::string why;
  for (auto i : ov) {
    if (!is_integral(q.vertex(i))) {
      why += (why.empty() ? "" : "; ") + in.vertex_name(i) + " = " + to_string(q.vertex(i)) + " is not a weight";
      continue;
    }
    bool good = true;
    for (auto k : relevant) {
      Rational m = m_sigma(in, sigma, k, q.vertex(i));
      if (!is_integral(m)) {
        why += (why.empty() ? "" : "; ") + std::string("m^Sigma_{") + in.facet_name(k) + "," + in.vertex_name(i) +
               "} = " + to_string(m);
        good = false;
        break;
      }
    }
    if (good) {
      Verdict ok;
      ok.trace.push_back("orbit vertices: " + names);
      return ok;
    }
  }
  Verdict f = Verdict::fail("adm.integrality", "no orbit vertex qualifies: " + why);
  f.trace.push_back("orbit vertices: " + names);
  return f;
}

}  // namespace spheromo
