#pragma once

#include "spheromo/momentum.hpp"

#include <json.hpp>

#include <map>
#include <memory>

namespace spheromo {

// A spherical root as written in a document: an alias such as
// "1/2(alpha1+alpha1')" or an explicit coefficient map.
struct SigmaSpec {
  std::string alias;
  std::map<std::string, Rational> coeffs;
};

struct QuadrupleSpec {
  QMat lattice;           // generators of the extended lattice, length rank(Lambda) + 1
  QMat highest_weights;   // of V*
};

struct InputDocument {
  RootSystemSpec group;
  std::string lattice_keyword;     // "weight", "root" or "" when rows are given
  QMat lattice;
  QMat polytope;
  std::optional<std::vector<SigmaSpec>> sigma;
  std::optional<QuadrupleSpec> quadruple;
};

enum class DocFormat { json, toml };

// Throws InputError with a location for syntax errors and the key path for
// schema errors. Unknown keys and floating-point numbers are rejected.
InputDocument parse_document(const std::string& text, DocFormat format, const std::string& origin = "<input>");
InputDocument load_document(const std::string& path);

// Canonical JSON form; parse(serialize(d)) == d.
nlohmann::ordered_json to_json(const InputDocument& d);
std::string serialize(const InputDocument& d);

// "alpha1", "2alpha1", "alpha1+alpha3", "1/2(alpha1+alpha1')". The result must
// be in the catalog.
SphericalRoot parse_spherical_root(const RootSystem& r, const std::vector<SphericalRoot>& catalog,
                                   const std::string& alias);

struct Problem {
  std::shared_ptr<Instance> instance;
  std::optional<std::vector<SphericalRoot>> sigma;   // sorted
  std::optional<QuadrupleInput> quadruple;
};

Problem build_problem(const InputDocument& d, std::shared_ptr<const LunaSTable> luna);

}  // namespace spheromo
