#include "spheromo/linalg.hpp"
#include "spheromo/lp.hpp"
#include "spheromo/momentum.hpp"

#include <algorithm>

namespace spheromo {

Sublattice extended_lattice(const Sublattice& xi, const QVec& v) {
  if (!is_integral(v)) throw DomainError("orbit vertex " + to_string(v) + " is not a weight");
  std::vector<QVec> gens;
  for (const auto& b : xi.basis()) {
    QVec g = b;
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  QVec top = v;
  top.push_back(1);
  gens.push_back(std::move(top));
  return Sublattice(gens, xi.ambient() + 1);
}

Sublattice degree_zero_part(const Sublattice& ext) {
  std::size_t n = ext.ambient();
  if (n == 0) throw DomainError("extended lattice needs a degree coordinate");
  // move the degree column to the front so the echelon form isolates it
  QMat rows;
  for (const auto& b : ext.basis()) {
    QVec r{b[n - 1]};
    for (std::size_t i = 0; i + 1 < n; ++i) r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  QMat h = hermite_normal_form(rows, n);
  std::vector<QVec> out;
  for (const auto& r : h)
    if (r[0] == 0) out.push_back(QVec(r.begin() + 1, r.end()));
  return Sublattice(out, n - 1);
}

Monoid make_monoid(const RootSystem& r, const Sublattice& ext, const std::vector<QVec>& points) {
  if (ext.ambient() != r.rank() + 1) throw DomainError("extended lattice has the wrong ambient rank");
  Monoid m;
  m.ext = ext;
  m.q = RationalPolytope(degree_zero_part(ext), points);
  m.rays = dual_rays(ext, m.q);
  m.sp = perp_simple_roots(r, ext);
  return m;
}

namespace {

QVec lift(const QVec& w) {
  QVec x = w;
  x.push_back(0);
  return x;
}

QVec coroot_ext(const RootSystem& r, const Monoid& m, std::size_t a) {
  return m.ext.restrict_functional(unit(r.rank() + 1, a));
}

bool in_dual_cone(const Monoid& m, const QVec& rho) {
  for (const auto& v : m.q.vertices()) {
    QVec x = v;
    x.push_back(1);
    if (dot(rho, *m.ext.coords(x)) < 0) return false;
  }
  return true;
}

}  // namespace

Verdict monoid_compatible(const RootSystem& r, const LunaSTable& luna, const Monoid& m,
                          const SphericalRoot& sigma, MonoidPair* pair) {
  Verdict v = lattice_compatible(r, luna, m.ext, m.sp, sigma, "monoid.lattice");
  if (!v.passed()) return v;
  std::string name = format_spherical_root(r, sigma.coeffs);
  QVec s = *m.ext.coords(lift(r.weight_of(sigma.coeffs)));
  auto simple = simple_index(sigma);
  if (!simple) {
    for (const auto& ray : m.rays) {
      Rational p = dot(ray.generator, s);
      if (p <= 0) continue;
      bool found = false;
      for (std::size_t d = 0; d < r.num_simple() && !found; ++d) {
        if (std::find(m.sp.begin(), m.sp.end(), d) != m.sp.end()) continue;
        found = positively_proportional(coroot_ext(r, m, d), ray.generator);
      }
      if (!found)
        return Verdict::fail("monoid.cm1", "ray generator " + to_string(ray.generator) + " pairs " + to_string(p) +
                                               " with " + name + " and is not a multiple of a coroot");
    }
    return Verdict::ok();
  }
  std::size_t a = *simple;
  QVec av = coroot_ext(r, m, a);
  std::vector<QVec> pos;
  for (const auto& ray : m.rays)
    if (dot(ray.generator, s) > 0) pos.push_back(ray.generator);
  QVec rho1, rho2;
  if (pos.empty()) return Verdict::fail("monoid.cm2", "no ray generator pairs positively with " + name);
  if (pos.size() > 2) {
    std::string list;
    for (const auto& p : pos) list += " " + to_string(p);
    return Verdict::fail("monoid.cm2", std::to_string(pos.size()) + " ray generators pair positively with " + name +
                                           ":" + list);
  }
  rho1 = pos[0];
  if (dot(rho1, s) != 1)
    return Verdict::fail("monoid.cm2", "ray generator " + to_string(rho1) + " pairs " + to_string(dot(rho1, s)) +
                                           " with " + name);
  if (pos.size() == 2) {
    rho2 = pos[1];
    if (dot(rho2, s) != 1)
      return Verdict::fail("monoid.cm2", "ray generator " + to_string(rho2) + " pairs " +
                                             to_string(dot(rho2, s)) + " with " + name);
    if (rho1 + rho2 != av)
      return Verdict::fail("monoid.cm2", "ray generators " + to_string(rho1) + " and " + to_string(rho2) +
                                             " do not sum to " + name + "^vee = " + to_string(av));
  } else {
    rho2 = av - rho1;
    if (!in_dual_cone(m, rho2))
      return Verdict::fail("monoid.cm2", name + "^vee - " + to_string(rho1) + " = " + to_string(rho2) +
                                             " is negative on Gamma(Q)");
  }
  if (pair) *pair = {a, rho1, rho2};
  return Verdict::ok();
}

Verdict monoid_admissible(const RootSystem& r, const LunaSTable& luna, const Monoid& m,
                          const std::vector<SphericalRoot>& sigma) {
  std::vector<MonoidPair> pairs;
  for (const auto& s : sigma) {
    MonoidPair p;
    Verdict v = monoid_compatible(r, luna, m, s, &p);
    if (!v.passed()) {
      v.trace.push_back(format_spherical_root(r, s.coeffs) + " is not compatible with Gamma(Q)");
      return v;
    }
    if (simple_index(s)) pairs.push_back(p);
  }
  for (const auto& p : pairs) {
    std::string an = r.root_name(p.alpha);
    for (int sign = 0; sign < 2; ++sign) {
      const QVec& rho = sign == 0 ? p.rho1 : p.rho2;
      std::string dn = "D_" + an + (sign == 0 ? "^+" : "^-");
      for (const auto& s : sigma) {
        auto b = simple_index(s);
        if (b && *b == p.alpha) continue;
        QVec sx = *m.ext.coords(lift(r.weight_of(s.coeffs)));
        Rational val = dot(rho, sx);
        std::string where = "<rho(" + dn + "), " + format_spherical_root(r, s.coeffs) + "> = " + to_string(val) +
                            " with rho(" + dn + ") = " + to_string(rho);
        if (val > 1) return Verdict::fail("monoid.pairing_bound", where);
        if (val == 1) {
          bool matched = false;
          if (b)
            for (const auto& o : pairs)
              if (o.alpha == *b && (o.rho1 == rho || o.rho2 == rho)) matched = true;
          if (!matched)
            return Verdict::fail("monoid.pairing_equality", where + " but no color of the other root shares it");
        }
      }
    }
  }
  return Verdict::ok();
}

Verdict quadruple_check(const RootSystem& r, const LunaSTable& luna, const QuadrupleInput& quad,
                        const std::vector<SphericalRoot>& sigma) {
  const Sublattice& ext = quad.ext;
  if (ext.ambient() != r.rank() + 1) throw DomainError("extended lattice has the wrong ambient rank");
  if (quad.points.empty()) throw DomainError("polytope has no vertices");
  for (const auto& p : quad.points)
    if (p.size() != r.rank() || !r.dominant(p)) throw DomainError("polytope point " + to_string(p) + " is not dominant");
  for (const auto& p : quad.points) {
    QVec x = p;
    x.push_back(1);
    if (!ext.in_span(x))
      return Verdict::fail("quad.span", "(" + to_string(p) + ", 1) is outside the span of the extended lattice");
  }
  std::size_t d = affine_rank(quad.points);
  if (ext.rank() != d + 1)
    return Verdict::fail("quad.span", "rank of the extended lattice is " + std::to_string(ext.rank()) +
                                          " but dim Q + 1 = " + std::to_string(d + 1));
  Monoid m = make_monoid(r, ext, quad.points);

  std::vector<QVec> lambdas;
  for (const auto& l : quad.highest_weights) {
    if (std::find(m.q.vertices().begin(), m.q.vertices().end(), l) == m.q.vertices().end()) continue;
    QVec x = l;
    x.push_back(1);
    if (ext.member(x)) lambdas.push_back(l);
  }
  if (lambdas.empty())
    return Verdict::fail("quad.degree_one",
                         "no highest weight of V* is a vertex of Q of degree one in the extended lattice");

  for (std::size_t i = 0; i < m.q.vertices().size(); ++i) {
    const QVec& v = m.q.vertex(i);
    std::size_t nc = lambdas.size(), nd = sigma.size();
    LinearProgram lp(nc + nd);
    lp.set_all_nonnegative();
    QVec sum = zeros(nc + nd);
    for (std::size_t c = 0; c < nc; ++c) sum[c] = 1;
    lp.add(sum, Rel::eq, 1);
    for (std::size_t k = 0; k < r.rank(); ++k) {
      QVec row = zeros(nc + nd);
      for (std::size_t c = 0; c < nc; ++c) row[c] = lambdas[c][k];
      for (std::size_t j = 0; j < nd; ++j) row[nc + j] = -r.weight_of(sigma[j].coeffs)[k];
      lp.add(row, Rel::eq, v[k]);
    }
    if (lp.solve().status == LPStatus::infeasible)
      return Verdict::fail("quad.hull", "vertex " + to_string(v) +
                                            " is not in Conv(degree-one highest weights) - Q>=0 Sigma");
  }
  return monoid_admissible(r, luna, m, sigma);
}

}  // namespace spheromo
