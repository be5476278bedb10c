#pragma once

#include "spheromo/core.hpp"

#include <optional>

namespace spheromo {

// Finitely generated rational cone in Q^dim. When built from inequalities
// {y : <a, y> >= 0} the description is kept alongside the computed generators.
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t dim, std::vector<QVec> generators);
  static Cone from_inequalities(std::size_t dim, std::vector<QVec> normals);
  static Cone whole_space(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<QVec>& generators() const { return gens_; }
  // Inward normals a with C = {y : <a,y> >= 0 for all a}.
  std::vector<QVec> inequalities() const;

  Cone dual() const;
  std::size_t dim() const;  // dimension of the linear span
  bool pointed() const;
  std::vector<QVec> lineality_basis() const;
  // Primitive generators of the extremal rays of a pointed cone, sorted.
  std::vector<QVec> rays() const;
  bool contains(const QVec& x) const;
  // Faces of a pointed cone, each as the sorted list of its extremal rays
  // ({0} has an empty list; the cone itself is included).
  std::vector<std::vector<QVec>> faces() const;

 private:
  std::size_t dim_ = 0;
  std::vector<QVec> gens_;
  std::optional<std::vector<QVec>> ineqs_;
};

// relint(C) meets V, decided by maximizing a common slack over strictly
// positive combinations of C's generators subject to V's inequalities.
bool relint_meets(const Cone& c, const Cone& v);

// relint(a) ∩ relint(b) ∩ v nonempty.
bool relints_meet_in(const Cone& a, const Cone& b, const Cone& v);

// Same set of points (mutual generator containment).
bool same_cone(const Cone& a, const Cone& b);

// Dual cone generators of {y : <a,y> >= 0}: extremal rays of the pointed part
// plus +/- a lineality basis. Exhaustive over tight-row subsets.
std::vector<QVec> cone_generators_from_inequalities(std::size_t dim, const std::vector<QVec>& normals);

}  // namespace spheromo
