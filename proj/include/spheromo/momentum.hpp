#pragma once

#include "spheromo/luna.hpp"
#include "spheromo/polytope.hpp"
#include "spheromo/rootsys.hpp"

#include <memory>
#include <string>

namespace spheromo {

enum class Status { pass, fail, unsupported };

const char* status_name(Status s);

// Outcome of a predicate. A failure names the axiom that broke and a witness
// that can be re-evaluated by hand.
struct Verdict {
  Status status = Status::pass;
  std::string axiom;
  std::string witness;
  std::vector<std::string> trace;

  bool passed() const { return status == Status::pass; }
  static Verdict ok() { return {}; }
  static Verdict fail(std::string axiom, std::string witness);
  static Verdict unsupported(std::string axiom, std::string witness);
};

// The pair (Xi, Q) together with the group data every predicate needs.
class Instance {
 public:
  Instance(RootSystem r, Sublattice xi, const std::vector<QVec>& points,
           std::shared_ptr<const LunaSTable> luna);

  const RootSystem& roots() const { return r_; }
  const Sublattice& lattice() const { return xi_; }
  const RationalPolytope& polytope() const { return q_; }
  const std::vector<SphericalRoot>& catalog() const { return catalog_; }
  const LunaSTable& luna() const { return *luna_; }
  std::shared_ptr<const LunaSTable> luna_ptr() const { return luna_; }

  // S^perp(Xi) and S^perp(Q) as sorted simple-root indices.
  const std::vector<std::size_t>& sp_lattice() const { return sp_lattice_; }
  const std::vector<std::size_t>& sp() const { return sp_; }
  bool in_sp(std::size_t a) const;

  // alpha_i^vee restricted to Xi, in the dual basis.
  const QVec& coroot_local(std::size_t i) const { return coroot_local_[i]; }
  // Coordinates of a weight in the basis of Xi (nullopt if outside Xi_Q).
  std::optional<QVec> local(const QVec& weight) const { return xi_.coords(weight); }
  QVec sigma_weight(const SphericalRoot& s) const { return r_.weight_of(s.coeffs); }
  // sigma in Xi coordinates; throws DomainError if sigma is not in Xi_Q.
  QVec sigma_local(const SphericalRoot& s) const;

  std::string vertex_name(std::size_t i) const { return "v" + std::to_string(i + 1); }
  std::string facet_name(std::size_t k) const { return "F" + std::to_string(k + 1); }
  std::string root_name(const SphericalRoot& s) const { return format_spherical_root(r_, s.coeffs); }
  std::string sigma_name(const std::vector<SphericalRoot>& sigma) const;

 private:
  RootSystem r_;
  Sublattice xi_;
  RationalPolytope q_;
  std::shared_ptr<const LunaSTable> luna_;
  std::vector<SphericalRoot> catalog_;
  std::vector<std::size_t> sp_lattice_, sp_;
  std::vector<QVec> coroot_local_;
};

// alpha for a simple spherical root, nullopt otherwise.
std::optional<std::size_t> simple_index(const SphericalRoot& s);
// alpha with 2 alpha = s, nullopt otherwise.
std::optional<std::size_t> half_simple_index(const SphericalRoot& s);

// Compatibility with a lattice L given inside an ambient of rank(Lambda)
// (+1 for extended lattices): primitivity, axiom (S) for S^perp(L), and the
// two pairing rules. sp_of_lattice is S^perp(L). Axiom ids are prefixed.
Verdict lattice_compatible(const RootSystem& r, const LunaSTable& luna, const Sublattice& lat,
                           const std::vector<std::size_t>& sp_of_lattice, const SphericalRoot& sigma,
                           const std::string& prefix = "lattice");
std::vector<std::size_t> perp_simple_roots(const RootSystem& r, const Sublattice& lat);

Verdict q_compatible(const Instance& in, const SphericalRoot& sigma);

struct AlphaPair {
  std::size_t alpha = 0;
  std::size_t facet = 0;  // F with rho(D+) = rho_F
  QVec plus, minus;       // rho(D_alpha^+), rho(D_alpha^-), in Xi coordinates
};

// Lexicographically least facet with <rho_F, alpha> = 1. Throws DomainError
// when alpha is not Q-compatible.
AlphaPair build_A(const Instance& in, std::size_t alpha);

Verdict q_admissible(const Instance& in, const std::vector<SphericalRoot>& sigma);

// m^Sigma_{F,p} for facet index k and a point p of Q (ambient coordinates).
Rational m_sigma(const Instance& in, const std::vector<SphericalRoot>& sigma, std::size_t facet,
                 const QVec& p);
// rho^Sigma_F
QVec rho_sigma(const Instance& in, const std::vector<SphericalRoot>& sigma, std::size_t facet);

Cone valuation_cone(const Instance& in, const std::vector<SphericalRoot>& sigma);
std::vector<std::size_t> orbit_vertices(const Instance& in, const std::vector<SphericalRoot>& sigma);

Verdict admissible(const Instance& in, const std::vector<SphericalRoot>& sigma);

// ------------------------------------------------------------- monoid level

// (Xi x 0) + Z(v, 1); v must be a weight.
Sublattice extended_lattice(const Sublattice& xi, const QVec& v);
// {lambda : (lambda, 0) in ext}
Sublattice degree_zero_part(const Sublattice& ext);

// Gamma(Q) = Q_{>=0}(Q x 1) ∩ ext with its dual ray generators.
struct Monoid {
  Sublattice ext;
  RationalPolytope q;  // Q in its own lattice degree_zero_part(ext)
  std::vector<DualRay> rays;
  std::vector<std::size_t> sp;  // S^perp(ext)
};

Monoid make_monoid(const RootSystem& r, const Sublattice& ext, const std::vector<QVec>& points);

struct MonoidPair {
  std::size_t alpha = 0;
  QVec rho1, rho2;  // in coordinates dual to ext's basis
};

Verdict monoid_compatible(const RootSystem& r, const LunaSTable& luna, const Monoid& m,
                          const SphericalRoot& sigma, MonoidPair* pair = nullptr);
Verdict monoid_admissible(const RootSystem& r, const LunaSTable& luna, const Monoid& m,
                          const std::vector<SphericalRoot>& sigma);

struct QuadrupleInput {
  Sublattice ext;                      // ambient rank(Lambda) + 1
  std::vector<QVec> highest_weights;   // of V*
  std::vector<QVec> points;            // Q
};

Verdict quadruple_check(const RootSystem& r, const LunaSTable& luna, const QuadrupleInput& quad,
                        const std::vector<SphericalRoot>& sigma);

// ------------------------------------------------------------- reflexive

enum class ReflexiveLevel { q_reflexive, reflexive };

// 2 rho - 2 rho_{S^perp(Q)}
QVec anticanonical_weight(const Instance& in);

Verdict reflexive_check(const Instance& in, const std::vector<SphericalRoot>& sigma, ReflexiveLevel level);

// ------------------------------------------------------------- enumeration

enum class Level { q_admissible, admissible, smooth, q_reflexive, reflexive, kaehler };

const char* level_name(Level l);
std::optional<Level> parse_level(const std::string& s);

struct Candidate {
  std::vector<SphericalRoot> sigma;
  Verdict verdict;
};

struct Enumeration {
  std::vector<SphericalRoot> compatible;   // Q-compatible catalog roots
  std::vector<std::pair<SphericalRoot, Verdict>> unsupported;  // roots whose check hit missing data
  std::vector<Candidate> passing;          // sorted
  std::vector<Candidate> undecided;        // level predicate unsupported
};

class SocleRegistry;

// Evaluates a level predicate on one Sigma. The registry is needed for the
// smooth and kaehler levels.
Verdict check_level(const Instance& in, const std::vector<SphericalRoot>& sigma, Level level,
                    const SocleRegistry* registry);

Enumeration enumerate_sigma(const Instance& in, Level level, const SocleRegistry* registry,
                            unsigned jobs = 1);

bool sigma_less(const std::vector<SphericalRoot>& a, const std::vector<SphericalRoot>& b);

}  // namespace spheromo
