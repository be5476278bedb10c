#include "spheromo/cone.hpp"

#include "spheromo/linalg.hpp"
#include "spheromo/lp.hpp"

#include <algorithm>
#include <set>

namespace spheromo {

namespace {

void push_unique(std::vector<QVec>& out, const QVec& v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

// Calls f on every k-subset of {0..n-1} (as sorted index vectors).
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<QVec> nonzero(const std::vector<QVec>& gens) {
  std::vector<QVec> out;
  for (const auto& g : gens)
    if (!is_zero(g)) out.push_back(g);
  return out;
}

}  // namespace

std::vector<QVec> cone_generators_from_inequalities(std::size_t dim,
                                                    const std::vector<QVec>& normals) {
  std::vector<QVec> rows = nonzero(normals);
  QMat lin = nullspace(rows, dim);
  std::size_t k = dim - lin.size();
  std::vector<QVec> rays;
  if (k > 0) {
    for_each_subset(rows.size(), k - 1, [&](const std::vector<std::size_t>& s) {
      QMat m = lin;
      for (auto i : s) m.push_back(rows[i]);
      if (rank(m, dim) != dim - 1) return;
      QVec y = nullspace(m, dim).front();
      for (const QVec& cand : {y, -y}) {
        bool ok = true;
        for (const auto& a : rows) ok = ok && dot(a, cand) >= 0;
        if (ok) push_unique(rays, primitive(cand));
      }
    });
  }
  std::sort(rays.begin(), rays.end());
  for (const auto& l : lin) {
    QVec p = primitive(l);
    rays.push_back(p);
    rays.push_back(-p);
  }
  return rays;
}

Cone::Cone(std::size_t dim, std::vector<QVec> generators) : dim_(dim), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.size() != dim_) throw DomainError("cone generator has wrong dimension");
}

Cone Cone::from_inequalities(std::size_t dim, std::vector<QVec> normals) {
  for (const auto& a : normals)
    if (a.size() != dim) throw DomainError("cone inequality has wrong dimension");
  Cone c(dim, cone_generators_from_inequalities(dim, normals));
  c.ineqs_ = std::move(normals);
  return c;
}

Cone Cone::whole_space(std::size_t dim) { return from_inequalities(dim, {}); }

std::vector<QVec> Cone::inequalities() const {
  if (ineqs_) return *ineqs_;
  return cone_generators_from_inequalities(dim_, gens_);
}

Cone Cone::dual() const {
  Cone d(dim_, inequalities());
  d.ineqs_ = gens_;
  return d;
}

std::size_t Cone::dim() const { return rank(gens_, dim_); }

bool Cone::pointed() const {
  std::vector<QVec> g = nonzero(gens_);
  if (g.empty()) return true;
  LinearProgram lp(g.size());
  lp.set_all_nonnegative();
  for (std::size_t d = 0; d < dim_; ++d) {
    QVec row(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) row[i] = g[i][d];
    lp.add(row, Rel::eq, 0);
  }
  lp.add(QVec(g.size(), Rational(1)), Rel::eq, 1);
  return lp.solve().status == LPStatus::infeasible;
}

std::vector<QVec> Cone::lineality_basis() const {
  return nullspace(inequalities(), dim_);
}

std::vector<QVec> Cone::rays() const {
  if (!pointed()) throw DomainError("extremal rays requested for a cone containing a line");
  std::vector<QVec> cand;
  for (const auto& g : nonzero(gens_)) push_unique(cand, primitive(g));
  std::vector<QVec> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<QVec> others;
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (j != i) others.push_back(cand[j]);
    if (!in_cone(others, cand[i])) out.push_back(cand[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Cone::contains(const QVec& x) const {
  if (x.size() != dim_) throw DomainError("dimension mismatch in cone membership");
  return in_cone(gens_, x);
}

std::vector<std::vector<QVec>> Cone::faces() const {
  std::vector<QVec> r = rays();
  std::vector<QVec> h = inequalities();
  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> all(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) all[i] = i;
  found.insert(all);
  std::vector<std::vector<std::size_t>> frontier;
  for (const auto& a : h) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (dot(a, r[i]) == 0) tight.push_back(i);
    if (found.insert(tight).second) frontier.push_back(tight);
  }
  std::vector<std::vector<std::size_t>> facets = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& f : frontier)
      for (const auto& g : facets) {
        std::vector<std::size_t> inter;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(inter));
        if (found.insert(inter).second) next.push_back(inter);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<QVec>> out;
  for (const auto& s : found) {
    std::vector<QVec> face;
    for (auto i : s) face.push_back(r[i]);
    out.push_back(std::move(face));
  }
  return out;
}

bool relint_meets(const Cone& c, const Cone& v) {
  if (c.ambient_dim() != v.ambient_dim()) throw DomainError("dimension mismatch in relint test");
  const auto& g = c.generators();
  if (g.empty()) return true;  // relint({0}) = {0} lies in every cone
  std::size_t k = g.size();
  // variables: c_0..c_{k-1}, t
  LinearProgram lp(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    lp.set_nonnegative(i);
    QVec row = zeros(k + 1);
    row[i] = 1;
    row[k] = -1;
    lp.add(row, Rel::ge, 0);
  }
  QVec cap = zeros(k + 1);
  cap[k] = 1;
  lp.add(cap, Rel::le, 1);
  for (const auto& a : v.inequalities()) {
    QVec row = zeros(k + 1);
    for (std::size_t i = 0; i < k; ++i) row[i] = dot(a, g[i]);
    lp.add(row, Rel::ge, 0);
  }
  lp.set_objective(cap);
  LPResult res = lp.solve();
  return res.status == LPStatus::optimal && res.value > 0;
}

bool relints_meet_in(const Cone& a, const Cone& b, const Cone& v) {
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  std::size_t na = ga.size(), nb = gb.size(), n = na + nb + 1, dim = a.ambient_dim();
  LinearProgram lp(n);
  QVec cap = zeros(n);
  cap[n - 1] = 1;
  lp.add(cap, Rel::le, 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    lp.set_nonnegative(i);
    QVec row = zeros(n);
    row[i] = 1;
    row[n - 1] = -1;
    lp.add(row, Rel::ge, 0);
  }
  for (std::size_t d = 0; d < dim; ++d) {
    QVec row = zeros(n);
    for (std::size_t i = 0; i < na; ++i) row[i] = ga[i][d];
    for (std::size_t j = 0; j < nb; ++j) row[na + j] = -gb[j][d];
    lp.add(row, Rel::eq, 0);
  }
  for (const auto& h : v.inequalities()) {
    QVec row = zeros(n);
    for (std::size_t i = 0; i < na; ++i) row[i] = dot(h, ga[i]);
    lp.add(row, Rel::ge, 0);
  }
  lp.set_objective(cap);
  LPResult res = lp.solve();
  return res.status == LPStatus::optimal && res.value > 0;
}

bool same_cone(const Cone& a, const Cone& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

}  // namespace spheromo
