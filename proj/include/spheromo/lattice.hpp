#pragma once

#include "spheromo/core.hpp"

#include <optional>

namespace spheromo {

// A sublattice of Z^ambient given by integral generators. Independent
// generators are kept verbatim as the basis (so dual coordinates match the
// caller's convention); dependent ones are replaced by their Hermite normal form.
class Sublattice {
 public:
  Sublattice() = default;
  Sublattice(const std::vector<QVec>& generators, std::size_t ambient);

  static Sublattice full(std::size_t ambient);

  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const QMat& basis() const { return basis_; }

  // Coordinates of x in the basis, if x lies in the rational span.
  std::optional<QVec> coords(const QVec& x) const;
  bool in_span(const QVec& x) const { return coords(x).has_value(); }
  bool member(const QVec& x) const;
  // x in the lattice and not a proper multiple k*y (k >= 2) of a lattice vector.
  bool is_primitive_element(const QVec& x) const;

  QVec embed(const QVec& c) const;
  // Values of an ambient functional on the basis vectors.
  QVec restrict_functional(const QVec& f) const;

 private:
  std::size_t ambient_ = 0;
  QMat basis_;
};

// Row-style Hermite normal form of an integral matrix; zero rows dropped.
QMat hermite_normal_form(const QMat& rows, std::size_t cols);

// Integral with coprime entries (nonzero).
bool is_primitive_dual(const QVec& rho);

// Do the vectors span the rational span of the lattice?
bool span_check(const Sublattice& lat, const std::vector<QVec>& vectors);

}  // namespace spheromo
