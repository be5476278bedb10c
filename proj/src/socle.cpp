#include "spheromo/colored.hpp"

#include <toml.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spheromo {

namespace {

std::string component_type(const RootSystem& r, const std::vector<std::size_t>& comp) {
  std::size_t n = comp.size();
  std::string rank = std::to_string(n);
  std::vector<std::size_t> degree(n, 0);
  int triple = 0, doubles = 0;
  std::size_t dbl_short = 0, dbl_long = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || r.cartan(comp[i], comp[j]) == 0) continue;
      ++degree[i];
      if (i > j) continue;
      Rational m = r.cartan(comp[i], comp[j]) * r.cartan(comp[j], comp[i]);
      if (m == 3) ++triple;
      if (m == 2) {
        ++doubles;
        // <alpha_i^vee, alpha_j> = -2 makes alpha_i the short root
        bool i_short = r.cartan(comp[i], comp[j]) == -2;
        dbl_short = i_short ? i : j;
        dbl_long = i_short ? j : i;
      }
      if (m > 3) return "?" + rank;
    }
  std::size_t edges = 0, maxdeg = 0;
  for (auto d : degree) {
    edges += d;
    maxdeg = std::max(maxdeg, d);
  }
  if (edges / 2 != n - 1) return "?" + rank;  // not a tree
  if (triple) return n == 2 ? "G2" : "?" + rank;
  if (doubles > 1) return "?" + rank;
  if (doubles == 1) {
    if (maxdeg > 2) return "?" + rank;
    if (n == 2) return "B2";
    if (degree[dbl_short] == 1) return "B" + rank;
    if (degree[dbl_long] == 1) return "C" + rank;
    if (n == 4) return "F4";
    return "?" + rank;
  }
  if (maxdeg <= 2) return "A" + rank;
  if (maxdeg > 3) return "?" + rank;
  std::size_t branch = 0;
  int branches = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (degree[i] == 3) {
      branch = i;
      ++branches;
    }
  if (branches != 1) return "?" + rank;
  std::vector<std::size_t> arms;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == branch || r.cartan(comp[branch], comp[j]) == 0) continue;
    std::size_t len = 1, prev = branch, cur = j;
    for (bool more = true; more;) {
      more = false;
      for (std::size_t k = 0; k < n; ++k)
        if (k != prev && k != cur && r.cartan(comp[cur], comp[k]) != 0) {
          prev = cur;
          cur = k;
          ++len;
          more = true;
          break;
        }
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + rank;
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + rank;
  return "?" + rank;
}

std::string pairing_key(const QVec& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
  return s;
}

std::vector<std::string> pairing_keys(const std::vector<QVec>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(pairing_key(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> string_array(const toml::table& t, const char* key, const std::string& where) {
  std::vector<std::string> out;
  auto node = t[key];
  if (!node) return out;
  auto arr = node.as_array();
  if (!arr) throw InputError(where + ": '" + key + "' must be an array of strings");
  for (const auto& el : *arr) {
    auto s = el.value<std::string>();
    if (!s) throw InputError(where + ": '" + key + "' must be an array of strings");
    out.push_back(*s);
  }
  return out;
}

// Entries of `need` missing from `have` (multisets, both sorted).
std::vector<std::string> multiset_minus(const std::vector<std::string>& have, const std::vector<std::string>& need) {
  std::vector<std::string> out;
  std::set_difference(have.begin(), have.end(), need.begin(), need.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string diagram_type(const RootSystem& r, const std::vector<std::size_t>& subset) {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(subset.size(), false);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(subset[i]);
      for (std::size_t j = 0; j < subset.size(); ++j)
        if (!seen[j] && r.cartan(subset[i], subset[j]) != 0) {
          seen[j] = true;
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::vector<std::string> names;
  for (const auto& c : comps) names.push_back(component_type(r, c));
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : "x") + n;
  return out;
}

LocalizedSocle localized_socle(const Instance& in, const std::vector<SphericalRoot>& sigma, const ColorTable& t,
                               const OrbitVertexData& data) {
  const auto& r = in.roots();
  LocalizedSocle soc;
  soc.s = data.s;
  for (auto a : data.s)
    if (in.in_sp(a)) soc.s_sp.push_back(a);
  auto in_s = [&](std::size_t a) { return std::find(data.s.begin(), data.s.end(), a) != data.s.end(); };
  for (const auto& s : spherically_closed(r, sigma, in.sp())) {
    bool inside = true;
    for (auto a : s.support()) inside = inside && in_s(a);
    if (inside) soc.sigma.push_back(s);
  }
  for (const auto& s : soc.sigma)
    if (auto a = simple_index(s))
      for (int sign = 0; sign < 2; ++sign) {
        auto it = t.a_colors.find({*a, sign});
        if (it != t.a_colors.end() && std::find(soc.abar.begin(), soc.abar.end(), it->second) == soc.abar.end())
          soc.abar.push_back(it->second);
      }
  std::sort(soc.abar.begin(), soc.abar.end());
  std::vector<std::size_t> rest;
  for (auto d : data.d) {
    bool moved = false;
    for (auto a : t.colors[d].moved_by) moved = moved || in_s(a);
    (moved ? soc.dbar : rest).push_back(d);
  }
  std::vector<QVec> locals;
  for (const auto& s : soc.sigma) locals.push_back(in.sigma_local(s));
  auto restrict = [&](const QVec& rho) {
    QVec p;
    for (const auto& l : locals) p.push_back(dot(rho, l));
    return p;
  };
  for (auto d : soc.dbar) soc.dbar_pairings.push_back(restrict(t.colors[d].rho));
  for (const auto& b : data.b) {
    soc.extras.push_back(b);
    soc.extra_names.push_back(to_string(b));
  }
  for (auto d : rest) {
    soc.extras.push_back(t.colors[d].rho);
    soc.extra_names.push_back(t.colors[d].name);
  }
  for (const auto& e : soc.extras) soc.extra_pairings.push_back(restrict(e));
  return soc;
}

SocleRegistry SocleRegistry::parse(const std::string& text, const std::string& origin) {
  toml::table doc;
  try {
    doc = toml::parse(text, origin);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << origin << ":" << e.source().begin.line << ":" << e.source().begin.column << ": " << e.description();
    throw InputError(msg.str());
  }
  SocleRegistry reg;
  auto version = doc["version"].value<std::string>();
  if (!version) throw InputError(origin + ": missing version");
  reg.version_ = *version;
  auto arr = doc["socle"].as_array();
  if (!arr) return reg;
  for (const auto& node : *arr) {
    auto tab = node.as_table();
    if (!tab) throw InputError(origin + ": [[socle]] entries must be tables");
    Entry e;
    auto name = (*tab)["name"].value<std::string>();
    if (!name) throw InputError(origin + ": socle entry without name");
    e.name = *name;
    std::string where = origin + ": socle " + e.name;
    for (const auto& [key, _] : *tab) {
      static const std::vector<std::string> known = {"name", "s_type", "sp_type", "sigma", "abar",
                                                     "any_pairings", "dbar", "extras"};
      if (std::find(known.begin(), known.end(), std::string(key.str())) == known.end())
        throw InputError(where + ": unknown key '" + std::string(key.str()) + "'");
    }
    e.s_type = (*tab)["s_type"].value_or(std::string());
    e.sp_type = (*tab)["sp_type"].value_or(std::string());
    e.sigma_rows = string_array(*tab, "sigma", where);
    std::sort(e.sigma_rows.begin(), e.sigma_rows.end());
    e.abar = static_cast<std::size_t>((*tab)["abar"].value_or(int64_t{0}));
    e.any_pairings = (*tab)["any_pairings"].value_or(false);
    for (const auto& s : string_array(*tab, "dbar", where)) e.dbar.push_back(s);
    for (const auto& s : string_array(*tab, "extras", where)) e.extras.push_back(s);
    std::sort(e.dbar.begin(), e.dbar.end());
    std::sort(e.extras.begin(), e.extras.end());
    reg.entries_.push_back(std::move(e));
  }
  return reg;
}

SocleRegistry SocleRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

Verdict SocleRegistry::match(const RootSystem& r, const LocalizedSocle& soc, const std::string& where) const {
  std::string s_type = diagram_type(r, soc.s);
  std::string sp_type = diagram_type(r, soc.s_sp);
  std::vector<std::string> rows;
  for (const auto& s : soc.sigma) rows.push_back(s.row);
  std::sort(rows.begin(), rows.end());
  std::string key = "S(v) type '" + s_type + "', S^perp part '" + sp_type + "', Sigma^sc part [";
  for (std::size_t i = 0; i < rows.size(); ++i) key += (i ? "," : "") + rows[i];
  key += "], |Abar| = " + std::to_string(soc.abar.size());

  auto dbar = pairing_keys(soc.dbar_pairings);
  auto extras = pairing_keys(soc.extra_pairings);
  std::optional<Verdict> unsupported, failed;
  bool any = false;
  for (const auto& e : entries_) {
    if (e.s_type != s_type || e.sp_type != sp_type || e.sigma_rows != rows || e.abar != soc.abar.size()) continue;
    any = true;
    if (e.any_pairings) return Verdict::ok();
    auto extra_d = multiset_minus(dbar, e.dbar), missing_d = multiset_minus(e.dbar, dbar);
    auto extra_x = multiset_minus(extras, e.extras), missing_x = multiset_minus(e.extras, extras);
    if (extra_d.empty() && missing_d.empty() && extra_x.empty() && missing_x.empty()) return Verdict::ok();
    if (extra_d.empty() && missing_d.empty() && missing_x.empty()) {
      if (!unsupported)
        unsupported = Verdict::unsupported("smooth.socle", "socle at " + where + " extends entry " + e.name +
                                                                " by further factors; not transcribed");
      continue;
    }
    if (!failed) {
      std::string bad = !extra_d.empty() ? extra_d.front() : !extra_x.empty() ? extra_x.front() : "(missing " +
                        (!missing_d.empty() ? missing_d.front() : missing_x.front()) + ")";
      failed = Verdict::fail("smooth.socle", "socle mismatch at " + where + ", pairing " + bad);
      failed->trace.push_back("closest registry entry: " + e.name + " for " + key);
    }
  }
  if (!any) return Verdict::unsupported("smooth.socle", "no socle registry entry for " + key + " at " + where);
  if (unsupported) return *unsupported;
  return *failed;
}

}  // namespace spheromo
