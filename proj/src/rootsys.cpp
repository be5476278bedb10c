#include "spheromo/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace spheromo {

namespace {

QMat chain(int n) {
  QMat a(n, QVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

bool legal_rank(char type, int n) {
  switch (type) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;  // C2 is the same root system as B2
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

void validate_cartan(const QMat& a) {
  std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_integral(a[i][j])) throw InputError("pairing matrix has a non-integral entry");
      if (i == j && a[i][j] != 2) throw InputError("pairing matrix must have diagonal 2");
      if (i != j && a[i][j] > 0) throw InputError("pairing matrix has a positive off-diagonal entry");
      if (i != j && (a[i][j] == 0) != (a[j][i] == 0))
        throw InputError("pairing matrix is not symmetrizable (zero pattern)");
    }
}

}  // namespace

QMat bourbaki_cartan(char type, int n) {
  if (!legal_rank(type, n))
    throw InputError(std::string("illegal rank ") + std::to_string(n) + " for type " + type);
  QMat a = chain(n);
  switch (type) {
    case 'A': break;
    case 'B':
      a[n - 1][n - 2] = -2;
      break;
    case 'C':
      a[n - 2][n - 1] = -2;
      break;
    case 'D':
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case 'E': {
      a = QMat(n, QVec(n, Rational(0)));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      a[2][1] = -2;
      break;
    case 'G':
      a[0][1] = -3;
      break;
  }
  return a;
}

RootSystem::RootSystem(const RootSystemSpec& spec) {
  if (spec.torus_rank < 0) throw InputError("negative torus rank");
  if (spec.custom) {
    if (!spec.components.empty() || spec.torus_rank != 0)
      throw InputError("custom root data cannot be combined with components or torus_rank");
    const auto& c = *spec.custom;
    rank_ = c.lattice_rank;
    std::size_t n = c.simple_roots.size();
    if (n > rank_) throw InputError("more simple roots than the weight lattice rank");
    for (const auto& r : c.simple_roots) {
      if (r.size() != rank_) throw InputError("custom simple root has wrong length");
      if (!is_integral(r)) throw InputError("custom simple root has non-integral entries");
    }
    cartan_.assign(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cartan_[i][j] = c.simple_roots[j][i];
    validate_cartan(cartan_);
    if (c.cartan && *c.cartan != cartan_)
      throw InputError("custom pairing matrix disagrees with the simple roots");
    simple_ = c.simple_roots;
    for (std::size_t i = 0; i < n; ++i) names_.push_back("alpha" + std::to_string(i + 1));
  } else {
    std::size_t n = 0;
    for (const auto& comp : spec.components) n += static_cast<std::size_t>(std::max(comp.rank, 0));
    rank_ = n + static_cast<std::size_t>(spec.torus_rank);
    cartan_.assign(n, QVec(n, Rational(0)));
    std::size_t off = 0, idx = 0;
    for (const auto& comp : spec.components) {
      QMat a = bourbaki_cartan(comp.type, comp.rank);
      for (int i = 0; i < comp.rank; ++i) {
        for (int j = 0; j < comp.rank; ++j) cartan_[off + i][off + j] = a[i][j];
        names_.push_back("alpha" + std::to_string(i + 1) + std::string(idx, '\''));
      }
      off += comp.rank;
      ++idx;
    }
    for (std::size_t j = 0; j < n; ++j) {
      QVec col = zeros(rank_);
      for (std::size_t i = 0; i < n; ++i) col[i] = cartan_[i][j];
      simple_.push_back(std::move(col));
    }
  }
  finish();
}

void RootSystem::finish() {
  std::size_t n = simple_.size();
  // components
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (std::size_t j = 0; j < n; ++j)
        if (!seen[j] && cartan_[i][j] != 0) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    components_.push_back(std::move(comp));
  }

  // positive roots by alpha-strings
  std::set<QVec> all;
  std::vector<QVec> level;
  for (std::size_t i = 0; i < n; ++i) {
    QVec e = unit(n, i);
    all.insert(e);
    level.push_back(e);
  }
  positive_ = level;
  while (!level.empty()) {
    std::vector<QVec> next;
    for (const auto& beta : level)
      for (std::size_t i = 0; i < n; ++i) {
        if (beta == unit(n, i)) continue;
        Rational p = 0;
        QVec down = beta;
        for (;;) {
          down[i] -= 1;
          if (!all.count(down)) break;
          p += 1;
        }
        Rational pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan_[i][j];
        if (p - pairing > 0) {
          QVec up = beta;
          up[i] += 1;
          if (all.insert(up).second) next.push_back(up);
        }
      }
    std::sort(next.begin(), next.end());
    for (const auto& r : next) positive_.push_back(r);
    if (positive_.size() > 10000) throw InputError("pairing matrix is not of finite type");
    level = std::move(next);
  }
}

Rational RootSystem::pair(std::size_t i, const QVec& lambda) const {
  if (i >= simple_.size()) throw InputError("simple root index out of range");
  if (lambda.size() != rank_) throw DomainError("weight has wrong length");
  return lambda[i];
}

QVec RootSystem::reflect(std::size_t i, const QVec& lambda) const {
  return lambda - pair(i, lambda) * simple_root(i);
}

QVec RootSystem::weight_of(const QVec& coeffs) const {
  QVec w = zeros(rank_);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) w = w + coeffs[i] * simple_[i];
  return w;
}

QVec RootSystem::two_rho(const std::vector<std::size_t>& subset) const {
  QVec sum = zeros(simple_.size());
  for (const auto& r : positive_) {
    bool inside = true;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0 && std::find(subset.begin(), subset.end(), i) == subset.end()) inside = false;
    if (inside) sum = sum + r;
  }
  return weight_of(sum);
}

QVec RootSystem::two_rho() const {
  std::vector<std::size_t> all(simple_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return two_rho(all);
}

bool RootSystem::dominant(const QVec& lambda) const {
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if (lambda[i] < 0) return false;
  return true;
}

bool RootSystem::strictly_dominant(const QVec& lambda) const {
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if (lambda[i] <= 0) return false;
  return true;
}

std::string RootSystem::root_name(std::size_t i) const { return names_.at(i); }

std::optional<std::size_t> RootSystem::root_index(const std::string& name) const {
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if (names_[i] == name) return i;
  // global numbering is accepted too: alpha2 of A1xA1 is alpha1'
  for (std::size_t i = 0; i < simple_.size(); ++i)
    if ("alpha" + std::to_string(i + 1) == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------- catalog

namespace {

struct Row {
  std::string tag;
  char type;  // 'X' for the A1 x A1 rows
  int min_n, max_n;  // max_n = 0: unbounded
  std::function<QVec(int)> coeffs;
};

QVec constant(int n, Rational c) { return QVec(n, c); }

const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
      {"A", 'A', 1, 0, [](int n) { return constant(n, 1); }},
      {"2A1", 'A', 1, 1, [](int) { return QVec{2}; }},
      {"A1xA1", 'X', 2, 2, [](int) { return QVec{1, 1}; }},
      {"half_A1xA1", 'X', 2, 2, [](int) { return QVec{Rational(1, 2), Rational(1, 2)}; }},
      {"A3", 'A', 3, 3, [](int) { return QVec{1, 2, 1}; }},
      {"half_A3", 'A', 3, 3, [](int) { return QVec{Rational(1, 2), 1, Rational(1, 2)}; }},
      {"B", 'B', 2, 0, [](int n) { return constant(n, 1); }},
      {"2B", 'B', 2, 0, [](int n) { return constant(n, 2); }},
      {"B3", 'B', 3, 3, [](int) { return QVec{1, 2, 3}; }},
      {"half_B3", 'B', 3, 3, [](int) { return QVec{Rational(1, 2), 1, Rational(3, 2)}; }},
      {"C", 'C', 3, 0,
       [](int n) {
         QVec c(n, Rational(2));
         c.front() = c.back() = 1;
         return c;
       }},
      {"D", 'D', 4, 0,
       [](int n) {
         QVec c(n, Rational(2));
         c[n - 2] = c[n - 1] = 1;
         return c;
       }},
      {"half_D", 'D', 4, 0,
       [](int n) {
         QVec c(n, Rational(1));
         c[n - 2] = c[n - 1] = Rational(1, 2);
         return c;
       }},
      {"F4", 'F', 4, 4, [](int) { return QVec{1, 2, 3, 2}; }},
      {"G2_11", 'G', 2, 2, [](int) { return QVec{1, 1}; }},
      {"G2_21", 'G', 2, 2, [](int) { return QVec{2, 1}; }},
      {"G2_42", 'G', 2, 2, [](int) { return QVec{4, 2}; }},
  };
  return table;
}

QMat row_cartan(const Row& row, int n) {
  if (row.type == 'X') return {{2, 0}, {0, 2}};
  return bourbaki_cartan(row.type, n);
}

// All bijections pi: local -> subset with a_{pi(i)pi(j)} = c_{ij}.
void match(const RootSystem& r, const std::vector<std::size_t>& subset, const QMat& c,
           std::vector<std::size_t>& pi, std::vector<bool>& used,
           std::vector<std::vector<std::size_t>>& out) {
  std::size_t k = pi.size();
  if (k == subset.size()) {
    out.push_back(pi);
    return;
  }
  for (std::size_t t = 0; t < subset.size(); ++t) {
    if (used[t]) continue;
    std::size_t g = subset[t];
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j)
      ok = r.cartan(g, pi[j]) == c[k][j] && r.cartan(pi[j], g) == c[j][k];
    if (!ok) continue;
    used[t] = true;
    pi.push_back(g);
    match(r, subset, c, pi, used, out);
    pi.pop_back();
    used[t] = false;
  }
}

bool connected(const RootSystem& r, const std::vector<std::size_t>& s) {
  std::vector<bool> seen(s.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < s.size(); ++j)
      if (!seen[j] && r.cartan(s[i], s[j]) != 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
  }
  return count == s.size();
}

}  // namespace

std::vector<std::size_t> SphericalRoot::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) s.push_back(i);
  return s;
}

bool spherical_root_less(const SphericalRoot& a, const SphericalRoot& b) {
  auto sa = a.support(), sb = b.support();
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  if (sa != sb) return sa < sb;
  return a.coeffs < b.coeffs;
}

std::vector<SphericalRoot> spherical_root_catalog(const RootSystem& r) {
  std::size_t n = r.num_simple();
  if (n > 24) throw DomainError("catalog enumeration limited to 24 simple roots");
  std::vector<SphericalRoot> out;
  std::set<QVec> seen;
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) subset.push_back(i);
    int k = static_cast<int>(subset.size());
    bool conn = connected(r, subset);
    if (!conn && k != 2) continue;
    for (const auto& row : rows()) {
      if (k < row.min_n || (row.max_n != 0 && k > row.max_n)) continue;
      if ((row.type == 'X') == conn) continue;
      QMat c = row_cartan(row, k);
      std::vector<std::vector<std::size_t>> isos;
      std::vector<std::size_t> pi;
      std::vector<bool> used(subset.size(), false);
      match(r, subset, c, pi, used, isos);
      QVec local = row.coeffs(k);
      for (const auto& iso : isos) {
        SphericalRoot s;
        s.coeffs = zeros(n);
        for (int i = 0; i < k; ++i) s.coeffs[iso[i]] = local[i];
        if (!seen.insert(s.coeffs).second) continue;
        s.row = row.tag;
        s.order = iso;
        out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end(), spherical_root_less);
  return out;
}

std::optional<SphericalRoot> find_spherical_root(const std::vector<SphericalRoot>& catalog,
                                                 const QVec& coeffs) {
  for (const auto& s : catalog)
    if (s.coeffs == coeffs) return s;
  return std::nullopt;
}

std::vector<SphericalRoot> spherically_closed(const RootSystem&, const std::vector<SphericalRoot>& sigma,
                                              const std::vector<std::size_t>& sp) {
  static const std::map<std::string, std::string> doubled = {
      {"B", "2B"},         {"G2_21", "G2_42"}, {"half_A1xA1", "A1xA1"},
      {"half_A3", "A3"},   {"half_B3", "B3"},  {"half_D", "D"},
  };
  auto in_sp = [&](std::size_t i) { return std::find(sp.begin(), sp.end(), i) != sp.end(); };
  std::vector<SphericalRoot> out;
  for (const auto& s : sigma) {
    bool twice = false;
    if (s.row == "B" && s.order.size() >= 2) {
      twice = true;
      for (std::size_t k = 1; k < s.order.size(); ++k) twice = twice && in_sp(s.order[k]);
    }
    if (s.row == "G2_21") twice = true;
    if (!is_integral(s.coeffs)) twice = true;
    if (!twice) {
      out.push_back(s);
      continue;
    }
    SphericalRoot d = s;
    d.coeffs = Rational(2) * s.coeffs;
    auto it = doubled.find(s.row);
    if (it != doubled.end()) d.row = it->second;
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), spherical_root_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_spherical_root(const RootSystem& r, const QVec& coeffs) {
  if (is_zero(coeffs)) return "0";
  QVec prim = primitive(coeffs);
  std::size_t first = 0;
  while (prim[first] == 0) ++first;
  Rational factor = coeffs[first] / prim[first];
  std::string body;
  std::size_t terms = 0;
  for (std::size_t i = 0; i < prim.size(); ++i) {
    if (prim[i] == 0) continue;
    if (terms++ > 0) body += prim[i] > 0 ? "+" : "-";
    else if (prim[i] < 0) body += "-";
    Rational a = abs(prim[i]);
    if (a != 1) body += to_string(a);
    body += r.root_name(i);
  }
  if (factor == 1) return body;
  if (terms == 1 && prim[first] == 1) return to_string(factor) + body;
  return to_string(factor) + "(" + body + ")";
}

}  // namespace spheromo
