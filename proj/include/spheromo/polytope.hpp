#pragma once

#include "spheromo/cone.hpp"
#include "spheromo/lattice.hpp"

namespace spheromo {

struct Facet {
  QVec normal;                   // rho_F, primitive in Hom(Xi, Z), inward
  Rational offset;               // m_{F,omega}
  std::vector<std::size_t> vertices;
};

struct Face {
  std::vector<std::size_t> vertices;  // sorted vertex indices
  std::vector<std::size_t> facets;    // facets containing the face
  std::size_t dim = 0;
};

// Rational polytope Q in omega + Xi_Q, stored by its ambient vertices (weight
// coordinates) and their coordinates relative to omega in the basis of Xi.
class RationalPolytope {
 public:
  RationalPolytope() = default;
  // Duplicates and non-extreme points are dropped; omega is the first
  // remaining vertex. Throws DomainError when Q - omega does not span Xi_Q.
  RationalPolytope(const Sublattice& lattice, const std::vector<QVec>& points);

  const Sublattice& lattice() const { return lattice_; }
  std::size_t dim() const { return lattice_.rank(); }
  const std::vector<QVec>& vertices() const { return vertices_; }
  const QVec& vertex(std::size_t i) const { return vertices_[i]; }
  const QVec& local(std::size_t i) const { return local_[i]; }
  const QVec& omega() const { return vertices_.front(); }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }

  // Coordinates of p - omega in the basis of Xi; throws if p is off the affine span.
  QVec local_of(const QVec& p) const;
  bool contains(const QVec& p) const;
  // m_{F,v} = -<rho_F, F - v>
  Rational offset_at(const Facet& f, const QVec& v) const;
  // Index of the face with exactly this vertex set, or npos.
  std::size_t find_face(const std::vector<std::size_t>& verts) const;
  std::size_t vertex_face(std::size_t vertex) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Sublattice lattice_;
  std::vector<QVec> vertices_;
  std::vector<QVec> local_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
};

// C(F): generated by the normals of the facets containing F.
Cone normal_cone(const RationalPolytope& q, const Face& f);

// V = {nu : <nu, sigma> <= 0 for all sigma}, sigmas in lattice coordinates.
Cone valuation_cone(std::size_t dim, const std::vector<QVec>& sigmas_local);

// Indices (into q.faces()) of faces whose normal cone's relint meets V.
std::vector<std::size_t> orbit_faces(const RationalPolytope& q, const Cone& v);
std::vector<std::size_t> orbit_vertices(const RationalPolytope& q, const Cone& v);

// Facets of a full-dimensional point set by testing every hyperplane through
// dim-many affinely independent points. Shared by the polytope constructor.
std::vector<Facet> enumerate_facets(const std::vector<QVec>& local_points);

struct DualRay {
  QVec generator;      // primitive, in coordinates dual to the extended lattice basis
  std::size_t facet;   // facet of Q it corresponds to
};

// Extremal rays of the dual of Q_{>=0}(Q x {1}) inside Hom(ext, Z), where ext
// is a lattice in Lambda x Z (ambient = weight rank + 1) containing Q x {1}
// in its span.
std::vector<DualRay> dual_rays(const Sublattice& ext, const RationalPolytope& q);

}  // namespace spheromo
