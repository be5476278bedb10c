#include "spheromo/lattice.hpp"

#include "spheromo/linalg.hpp"

namespace spheromo {

namespace {

using ZMat = std::vector<std::vector<Integer>>;

Integer to_integer(const Rational& q) {
  if (!is_integral(q)) throw InputError("lattice generator has non-integral entry " + to_string(q));
  return numerator_of(q);
}

}  // namespace

QMat hermite_normal_form(const QMat& rows, std::size_t cols) {
  ZMat m;
  for (const auto& r : rows) {
    std::vector<Integer> zr(cols);
    for (std::size_t c = 0; c < cols; ++c) zr[c] = to_integer(r[c]);
    m.push_back(std::move(zr));
  }
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < m.size(); ++c) {
    // Euclid down the column until a single nonzero entry remains at `top`.
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t r = top; r < m.size(); ++r)
        if (m[r][c] != 0 && (best == m.size() || abs(m[r][c]) < abs(m[best][c]))) best = r;
      if (best == m.size()) break;
      std::swap(m[top], m[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < m.size(); ++r) {
        if (m[r][c] == 0) continue;
        Integer q = m[r][c] / m[top][c];
        for (std::size_t k = 0; k < cols; ++k) m[r][k] -= q * m[top][k];
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[top][c] == 0) continue;
    if (m[top][c] < 0)
      for (auto& x : m[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      // floor division so the entries above the pivot land in [0, pivot)
      Integer q = m[r][c] / m[top][c];
      if (m[r][c] - q * m[top][c] < 0) q -= 1;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= q * m[top][k];
    }
    ++top;
  }
  QMat out;
  for (std::size_t r = 0; r < top; ++r) {
    QVec row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = Rational(m[r][c]);
    out.push_back(std::move(row));
  }
  return out;
}

Sublattice::Sublattice(const std::vector<QVec>& generators, std::size_t ambient)
    : ambient_(ambient) {
  for (const auto& g : generators) {
    if (g.size() != ambient) throw InputError("lattice generator has wrong length");
    for (const auto& x : g) to_integer(x);
  }
  if (spheromo::rank(generators, ambient) == generators.size())
    basis_ = generators;
  else
    basis_ = hermite_normal_form(generators, ambient);
}

Sublattice Sublattice::full(std::size_t ambient) {
  QMat id;
  for (std::size_t i = 0; i < ambient; ++i) id.push_back(unit(ambient, i));
  return Sublattice(id, ambient);
}

std::optional<QVec> Sublattice::coords(const QVec& x) const {
  if (x.size() != ambient_) throw DomainError("rank mismatch in lattice coordinates");
  if (basis_.empty()) {
    if (is_zero(x)) return QVec{};
    return std::nullopt;
  }
  return solve(transpose(basis_, ambient_), x, basis_.size());
}

bool Sublattice::member(const QVec& x) const {
  auto c = coords(x);
  return c && is_integral(*c);
}

bool Sublattice::is_primitive_element(const QVec& x) const {
  auto c = coords(x);
  if (!c || !is_integral(*c) || is_zero(*c)) return false;
  Integer g = 0;
  for (const auto& v : *c) g = gcd(g, numerator_of(v));
  return g == 1;
}

QVec Sublattice::embed(const QVec& c) const {
  QVec x = zeros(ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) x = x + c[i] * basis_[i];
  return x;
}

QVec Sublattice::restrict_functional(const QVec& f) const {
  QVec r(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) r[i] = dot(f, basis_[i]);
  return r;
}

bool is_primitive_dual(const QVec& rho) {
  if (!is_integral(rho) || is_zero(rho)) return false;
  Integer g = 0;
  for (const auto& v : rho) g = gcd(g, numerator_of(v));
  return g == 1;
}

bool span_check(const Sublattice& lat, const std::vector<QVec>& vectors) {
  for (const auto& v : vectors)
    if (!lat.in_span(v)) return false;
  return spheromo::rank(vectors, lat.ambient()) == lat.rank();
}

}  // namespace spheromo
