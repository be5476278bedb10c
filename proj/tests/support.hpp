#pragma once

#include "spheromo/colored.hpp"
#include "spheromo/input.hpp"

#include <memory>
#include <string>

namespace spheromo::test {

inline std::shared_ptr<const LunaSTable> luna() {
  static auto p = std::make_shared<const LunaSTable>(LunaSTable::load(SPHEROMO_DATA "/luna_s.toml"));
  return p;
}

inline const SocleRegistry& socles() {
  static SocleRegistry reg = SocleRegistry::load(SPHEROMO_DATA "/socles.toml");
  return reg;
}

inline Problem fixture(const std::string& name) {
  return build_problem(load_document(std::string(SPHEROMO_FIXTURES) + "/" + name), luna());
}

inline Problem from_json(const std::string& text) {
  return build_problem(parse_document(text, DocFormat::json), luna());
}

inline RootSystem group(std::vector<ComponentSpec> comps, int torus = 0) {
  return RootSystem(RootSystemSpec{std::move(comps), torus, std::nullopt});
}

inline RootSystem gl2() {
  return RootSystem(RootSystemSpec{{}, 0, CustomBlock{2, {{2, -1}}, std::nullopt}});
}

inline SphericalRoot root(const Instance& in, const std::string& alias) {
  return parse_spherical_root(in.roots(), in.catalog(), alias);
}

inline std::vector<SphericalRoot> sigma(const Instance& in, std::initializer_list<const char*> names) {
  std::vector<SphericalRoot> out;
  for (const char* n : names) out.push_back(root(in, n));
  std::sort(out.begin(), out.end(), spherical_root_less);
  return out;
}

}  // namespace spheromo::test
