#include "spheromo/polytope.hpp"

#include "spheromo/linalg.hpp"
#include "spheromo/lp.hpp"

#include <algorithm>
#include <set>

namespace spheromo {

namespace {

bool in_convex_hull(const std::vector<QVec>& pts, const QVec& x) {
  std::size_t k = pts.size();
  if (k == 0) return false;
  LinearProgram lp(k);
  lp.set_all_nonnegative();
  lp.add(QVec(k, Rational(1)), Rel::eq, 1);
  for (std::size_t d = 0; d < x.size(); ++d) {
    QVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = pts[i][d];
    lp.add(row, Rel::eq, x[d]);
  }
  return lp.solve().status != LPStatus::infeasible;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Facet> enumerate_facets(const std::vector<QVec>& pts) {
  std::vector<Facet> out;
  if (pts.empty()) return out;
  std::size_t r = pts.front().size();
  if (r == 0) return out;
  std::set<std::vector<std::size_t>> seen;
  for_each_subset(pts.size(), r, [&](const std::vector<std::size_t>& s) {
    QMat diffs;
    for (std::size_t i = 1; i < s.size(); ++i) diffs.push_back(pts[s[i]] - pts[s[0]]);
    if (rank(diffs, r) != r - 1) return;
    QVec n = nullspace(diffs, r).front();
    Rational c = dot(n, pts[s[0]]);
    bool ge = true, le = true;
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational val = dot(n, pts[i]);
      if (val < c) ge = false;
      if (val > c) le = false;
      if (val == c) tight.push_back(i);
    }
    if (!ge && !le) return;
    if (!seen.insert(tight).second) return;
    QVec normal = primitive(ge ? n : -n);
    Facet f;
    f.offset = -dot(normal, pts[tight.front()]);
    f.normal = std::move(normal);
    f.vertices = std::move(tight);
    out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  return out;
}

RationalPolytope::RationalPolytope(const Sublattice& lattice, const std::vector<QVec>& points)
    : lattice_(lattice) {
  if (points.empty()) throw DomainError("polytope has no vertices");
  std::vector<QVec> uniq;
  for (const auto& p : points) {
    if (p.size() != lattice.ambient()) throw DomainError("vertex has wrong number of coordinates");
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  }
  std::vector<QVec> loc;
  for (const auto& p : uniq) {
    auto c = lattice.coords(p - uniq.front());
    if (!c) throw DomainError("point " + to_string(p) + " is not in omega + Xi_Q");
    loc.push_back(*c);
  }
  if (affine_rank(loc) != lattice.rank())
    throw DomainError("(Q1) violated: Q - omega does not span Xi_Q");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    std::vector<QVec> others;
    for (std::size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(loc[j]);
    if (!in_convex_hull(others, loc[i])) keep.push_back(i);
  }
  for (auto i : keep) vertices_.push_back(uniq[i]);
  for (const auto& p : vertices_) local_.push_back(*lattice.coords(p - vertices_.front()));
  facets_ = enumerate_facets(local_);

  std::set<std::vector<std::size_t>> sets;
  std::vector<std::size_t> all(vertices_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  sets.insert(all);
  std::vector<std::vector<std::size_t>> frontier;
  for (const auto& f : facets_)
    if (sets.insert(f.vertices).second) frontier.push_back(f.vertices);
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& a : frontier)
      for (const auto& f : facets_) {
        std::vector<std::size_t> inter;
        std::set_intersection(a.begin(), a.end(), f.vertices.begin(), f.vertices.end(),
                              std::back_inserter(inter));
        if (!inter.empty() && sets.insert(inter).second) next.push_back(inter);
      }
    frontier = std::move(next);
  }
  for (const auto& s : sets) {
    Face face;
    face.vertices = s;
    for (std::size_t k = 0; k < facets_.size(); ++k)
      if (std::includes(facets_[k].vertices.begin(), facets_[k].vertices.end(), s.begin(), s.end()))
        face.facets.push_back(k);
    std::vector<QVec> pts;
    for (auto i : s) pts.push_back(local_[i]);
    face.dim = affine_rank(pts);
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
}

QVec RationalPolytope::local_of(const QVec& p) const {
  auto c = lattice_.coords(p - omega());
  if (!c) throw DomainError("point " + to_string(p) + " is off the affine span of Q");
  return *c;
}

bool RationalPolytope::contains(const QVec& p) const {
  auto c = lattice_.coords(p - omega());
  if (!c) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, *c) + f.offset < 0) return false;
  return true;
}

Rational RationalPolytope::offset_at(const Facet& f, const QVec& v) const {
  return -dot(f.normal, local_[f.vertices.front()] - local_of(v));
}

std::size_t RationalPolytope::find_face(const std::vector<std::size_t>& verts) const {
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertices == verts) return i;
  return npos;
}

std::size_t RationalPolytope::vertex_face(std::size_t vertex) const { return find_face({vertex}); }

Cone normal_cone(const RationalPolytope& q, const Face& f) {
  std::vector<QVec> gens;
  for (auto k : f.facets) gens.push_back(q.facets()[k].normal);
  return Cone(q.dim(), std::move(gens));
}

Cone valuation_cone(std::size_t dim, const std::vector<QVec>& sigmas_local) {
  std::vector<QVec> ineqs;
  for (const auto& s : sigmas_local) ineqs.push_back(-s);
  return Cone::from_inequalities(dim, std::move(ineqs));
}

std::vector<std::size_t> orbit_faces(const RationalPolytope& q, const Cone& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.faces().size(); ++i)
    if (relint_meets(normal_cone(q, q.faces()[i]), v)) out.push_back(i);
  return out;
}

std::vector<std::size_t> orbit_vertices(const RationalPolytope& q, const Cone& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < q.vertices().size(); ++i)
    if (relint_meets(normal_cone(q, q.faces()[q.vertex_face(i)]), v)) out.push_back(i);
  return out;
}

std::vector<DualRay> dual_rays(const Sublattice& ext, const RationalPolytope& q) {
  if (ext.ambient() != q.lattice().ambient() + 1)
    throw DomainError("extended lattice has the wrong ambient rank");
  std::vector<QVec> gens;
  for (const auto& v : q.vertices()) {
    QVec lifted = v;
    lifted.push_back(1);
    auto c = ext.coords(lifted);
    if (!c) throw DomainError("Q x {1} is not in the span of the extended lattice");
    gens.push_back(*c);
  }
  std::size_t d = ext.rank();
  std::vector<QVec> dual = cone_generators_from_inequalities(d, gens);
  if (!nullspace(gens, d).empty())
    throw DomainError("extended lattice is larger than the cone over Q");
  std::vector<DualRay> out;
  for (const auto& g : dual) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (dot(g, gens[i]) == 0) tight.push_back(i);
    std::size_t facet = RationalPolytope::npos;
    for (std::size_t k = 0; k < q.facets().size(); ++k)
      if (q.facets()[k].vertices == tight) facet = k;
    // A point polytope has one dual ray and no facets.
    if (facet == RationalPolytope::npos && q.dim() > 0)
      throw DomainError("dual ray without a matching facet");
    out.push_back({g, facet});
  }
  std::sort(out.begin(), out.end(), [](const DualRay& a, const DualRay& b) { return a.facet < b.facet; });
  return out;
}

}  // namespace spheromo
