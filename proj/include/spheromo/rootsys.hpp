#pragma once

#include "spheromo/core.hpp"

#include <optional>
#include <string>

namespace spheromo {

struct ComponentSpec {
  char type = 'A';
  int rank = 1;
};

// Nonstandard reductive data: simple roots given directly in weight
// coordinates. The first simple_roots.size() coordinates are the fundamental
// weights, the rest torus characters.
struct CustomBlock {
  std::size_t lattice_rank = 0;
  QMat simple_roots;
  std::optional<QMat> cartan;  // must agree with simple_roots when given
};

struct RootSystemSpec {
  std::vector<ComponentSpec> components;
  int torus_rank = 0;
  std::optional<CustomBlock> custom;
};

class RootSystem {
 public:
  RootSystem() = default;
  explicit RootSystem(const RootSystemSpec& spec);

  std::size_t rank() const { return rank_; }  // rank of the weight lattice
  std::size_t num_simple() const { return simple_.size(); }
  const QVec& simple_root(std::size_t i) const { return simple_.at(i); }
  const QMat& simple_roots() const { return simple_; }
  // a_ij = <alpha_i^vee, alpha_j>
  const Rational& cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const QMat& cartan_matrix() const { return cartan_; }

  QVec coroot(std::size_t i) const { return unit(rank_, i); }
  Rational pair(std::size_t i, const QVec& lambda) const;
  QVec reflect(std::size_t i, const QVec& lambda) const;
  // sum_i c_i alpha_i as a weight
  QVec weight_of(const QVec& coeffs) const;
  // Positive roots as coefficient vectors over the simple roots, by height.
  const std::vector<QVec>& positive_roots() const { return positive_; }
  // 2 rho of the subsystem generated by the given simple roots, as a weight.
  QVec two_rho(const std::vector<std::size_t>& subset) const;
  QVec two_rho() const;
  bool dominant(const QVec& lambda) const;
  bool strictly_dominant(const QVec& lambda) const;
  bool orthogonal(std::size_t i, std::size_t j) const { return i != j && cartan_[i][j] == 0; }

  // Connected components of the Dynkin diagram, each a sorted index list.
  const std::vector<std::vector<std::size_t>>& diagram_components() const { return components_; }
  // Name of simple root i: "alpha<k>" with primes for later components
  // when the group was given by components.
  std::string root_name(std::size_t i) const;
  std::optional<std::size_t> root_index(const std::string& name) const;

 private:
  void finish();

  std::size_t rank_ = 0;
  QMat simple_;
  QMat cartan_;
  std::vector<QVec> positive_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::string> names_;
};

// Bourbaki Cartan matrix for a single simple type; throws InputError on an
// illegal rank.
QMat bourbaki_cartan(char type, int rank);

struct SphericalRoot {
  QVec coeffs;                      // over the simple roots, nonnegative
  std::string row;                  // row tag of the catalog
  std::vector<std::size_t> order;   // order[k] = global index of the row's alpha_{k+1}
  std::vector<std::size_t> support() const;
  bool operator==(const SphericalRoot& o) const { return coeffs == o.coeffs; }
};

// Sort key used everywhere: support size, support, then coefficients.
bool spherical_root_less(const SphericalRoot& a, const SphericalRoot& b);

// All instantiations of the rows over subsets of simple roots, deduplicated
// by coefficients and sorted.
std::vector<SphericalRoot> spherical_root_catalog(const RootSystem& r);

// Catalog entry with these coefficients, if any.
std::optional<SphericalRoot> find_spherical_root(const std::vector<SphericalRoot>& catalog,
                                                 const QVec& coeffs);

// Replace sigma by 2 sigma for the three spherically-closed rules.
std::vector<SphericalRoot> spherically_closed(const RootSystem& r, const std::vector<SphericalRoot>& sigma,
                                              const std::vector<std::size_t>& sp);

// "alpha1", "2alpha1", "1/2(alpha1+alpha2)", "alpha1+2alpha2+alpha3".
std::string format_spherical_root(const RootSystem& r, const QVec& coeffs);

}  // namespace spheromo
