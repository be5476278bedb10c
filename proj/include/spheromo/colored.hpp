#pragma once

#include "spheromo/momentum.hpp"

#include <map>

namespace spheromo {

// ------------------------------------------------------------- colors

struct Color {
  std::string name;                    // "D_alpha2^+", "D_alpha1", "D_alpha1=D_alpha3"
  QVec rho;                            // in the dual basis of Xi
  Rational n;                          // n_D for the table's reference point
  std::vector<std::size_t> moved_by;   // sorted simple-root indices
  bool in_A = false;                   // comes from some A(alpha)
};

struct ColorTable {
  QVec w;                              // reference point (ambient coordinates)
  std::vector<Color> colors;
  // colors moved by each simple root
  std::vector<std::vector<std::size_t>> moved;
  // (alpha, sign) -> color index for alpha in Sigma ∩ S; sign 0 is D^+
  std::map<std::pair<std::size_t, int>, std::size_t> a_colors;
};

// Lexicographically least orbit vertex (ambient coordinates).
QVec default_reference_point(const Instance& in, const std::vector<SphericalRoot>& sigma);

// Sigma must be Q-admissible. w defaults to default_reference_point.
ColorTable color_table(const Instance& in, const std::vector<SphericalRoot>& sigma,
                       std::optional<QVec> w = std::nullopt);

// ------------------------------------------------------------- colored fan

struct ColoredCone {
  std::size_t face = 0;              // index into polytope().faces(); npos for hand-built cones
  Cone cone;
  std::vector<std::size_t> colors;   // sorted color indices
};

struct ColoredFan {
  std::vector<ColoredCone> cones;
};

// D(F) = {D : <rho(D), p - w> + n_D = 0 on F}
std::vector<std::size_t> colors_of_face(const Instance& in, const ColorTable& t, const Face& f);

ColoredFan colored_fan(const Instance& in, const std::vector<SphericalRoot>& sigma, const ColorTable& t);

// (CC1), (CC2), (SCC), (CF1), (CF2) and completeness over V.
Verdict validate_colored_fan(const ColorTable& t, const ColoredFan& fan, const Cone& v);

// ------------------------------------------------------------- smoothness

class SocleRegistry;

struct OrbitVertexData {
  std::size_t vertex = 0;
  std::vector<std::size_t> s;        // S(v)
  std::vector<std::size_t> d;        // D(v), color indices
  std::vector<QVec> b;               // B(v), primitive ray generators
};

OrbitVertexData orbit_vertex_data(const Instance& in, const ColorTable& t, std::size_t vertex);

struct LocalizedSocle {
  std::vector<std::size_t> s;                // S(v)
  std::vector<std::size_t> s_sp;             // S(v) ∩ S^perp(Q)
  std::vector<SphericalRoot> sigma;          // Sigma^sc ∩ ZS(v)
  std::vector<std::size_t> abar;             // colors of A(alpha), alpha in S(v) ∩ Sigma^sc
  std::vector<std::size_t> dbar;             // colors of D(v) moved by S(v)
  std::vector<QVec> extras;                  // rho of B(v) ∪ (D(v) \ Dbar), B first
  std::vector<std::string> extra_names;
  // rho-bar: pairings with each element of sigma, per dbar color and per extra
  std::vector<QVec> dbar_pairings;
  std::vector<QVec> extra_pairings;
};

LocalizedSocle localized_socle(const Instance& in, const std::vector<SphericalRoot>& sigma, const ColorTable& t,
                               const OrbitVertexData& data);

// Dynkin type of the subdiagram on the given simple roots, e.g. "A1xA1", "B3", "" for none.
std::string diagram_type(const RootSystem& r, const std::vector<std::size_t>& subset);

class SocleRegistry {
 public:
  struct Entry {
    std::string name;
    std::string s_type;                   // type of S(v)
    std::string sp_type;                  // type of S(v) ∩ S^perp(Q)
    std::vector<std::string> sigma_rows;  // sorted row tags of Sigma^sc ∩ ZS(v)
    std::size_t abar = 0;                 // |Abar|
    bool any_pairings = false;            // rho-bar unconstrained (rank-zero Sigma part)
    // sorted multisets of rho-bar pairings, each "a" or "a,b" for several roots
    std::vector<std::string> dbar;
    std::vector<std::string> extras;
  };

  static SocleRegistry load(const std::string& path);
  static SocleRegistry parse(const std::string& text, const std::string& origin = "<string>");

  const std::string& version() const { return version_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // pass, fail (pairing mismatch on a known key) or unsupported (no key).
  Verdict match(const RootSystem& r, const LocalizedSocle& soc, const std::string& where) const;

 private:
  std::string version_;
  std::vector<Entry> entries_;
};

enum class SmoothLevel { algebraic, real };

// Algebraic level requires an admissible triple, real level a Q-admissible one.
Verdict smooth_check(const Instance& in, const std::vector<SphericalRoot>& sigma, const SocleRegistry& registry,
                     SmoothLevel level = SmoothLevel::algebraic);

// All Sigma with (Xi, P, Sigma) a smooth R-momentum triple, plus undecided ones.
Enumeration kaehler_check(const Instance& in, const SocleRegistry& registry, unsigned jobs = 1);

// ------------------------------------------------------------- reflective polytopes

bool is_simple_polytope(const RationalPolytope& q);
Verdict reflective_check(const Instance& in);
Verdict woodward_facet_condition(const Instance& in);

}  // namespace spheromo
