#pragma once

#include "spheromo/rootsys.hpp"

#include <map>
#include <string>

namespace spheromo {

// Per-row families of subsets Sp ∩ supp(sigma) allowed by axiom (S).
// Subsets are written in row-local Bourbaki numbering, e.g. "2..n-1" or "1,3";
// "" is the empty set. Rows missing from the file are unsupported.
class LunaSTable {
 public:
  static LunaSTable load(const std::string& path);
  static LunaSTable parse(const std::string& text, const std::string& origin = "<string>");

  const std::string& version() const { return version_; }
  bool has_row(const std::string& tag) const { return rows_.count(tag) != 0; }

  // Axiom (S) for (Sp, sigma): the zero-pairing base rule, then the row lookup.
  // Throws UnsupportedError("unsupported row ...") when the row is absent.
  bool check(const RootSystem& r, const std::vector<std::size_t>& sp, const SphericalRoot& sigma) const;

 private:
  std::string version_;
  std::map<std::string, std::vector<std::string>> rows_;
};

// Expand a subset spec for a row of rank n into sorted 1-based local indices.
std::vector<int> expand_subset_spec(const std::string& spec, int n);

}  // namespace spheromo
