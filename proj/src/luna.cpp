#include "spheromo/luna.hpp"

#include <toml.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spheromo {

namespace {

int bound(std::string s, int n) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw InputError("empty bound in subset spec");
  if (s[0] == 'n') {
    if (s.size() == 1) return n;
    if (s[1] != '-' && s[1] != '+') throw InputError("bad bound '" + s + "' in subset spec");
    int k = std::stoi(s.substr(2));
    return s[1] == '-' ? n - k : n + k;
  }
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw InputError("bad bound '" + s + "' in subset spec");
  return v;
}

}  // namespace

std::vector<int> expand_subset_spec(const std::string& spec, int n) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(' ') == std::string::npos) continue;
    auto dots = tok.find("..");
    int a, b;
    if (dots == std::string::npos) {
      a = b = bound(tok, n);
    } else {
      a = bound(tok.substr(0, dots), n);
      b = bound(tok.substr(dots + 2), n);
    }
    for (int i = a; i <= b; ++i) {
      if (i < 1 || i > n) throw InputError("subset spec '" + spec + "' leaves the row");
      out.push_back(i);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LunaSTable LunaSTable::parse(const std::string& text, const std::string& origin) {
  toml::table doc;
  try {
    doc = toml::parse(text, origin);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << origin << ":" << e.source().begin.line << ":" << e.source().begin.column << ": "
        << e.description();
    throw InputError(msg.str());
  }
  LunaSTable t;
  auto version = doc["version"].value<std::string>();
  if (!version) throw InputError(origin + ": missing version");
  t.version_ = *version;
  if (auto rows = doc["rows"].as_table()) {
    for (const auto& [key, node] : *rows) {
      auto entry = node.as_table();
      if (!entry) throw InputError(origin + ": row " + std::string(key.str()) + " is not a table");
      auto arr = (*entry)["permitted"].as_array();
      if (!arr) throw InputError(origin + ": row " + std::string(key.str()) + " lacks 'permitted'");
      std::vector<std::string> specs;
      for (const auto& el : *arr) {
        auto s = el.value<std::string>();
        if (!s) throw InputError(origin + ": permitted entries must be strings");
        specs.push_back(*s);
      }
      t.rows_[std::string(key.str())] = std::move(specs);
    }
  }
  return t;
}

LunaSTable LunaSTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

bool LunaSTable::check(const RootSystem& r, const std::vector<std::size_t>& sp,
                       const SphericalRoot& sigma) const {
  QVec w = r.weight_of(sigma.coeffs);
  for (auto a : sp)
    if (r.pair(a, w) != 0) return false;
  auto it = rows_.find(sigma.row);
  if (it == rows_.end()) throw UnsupportedError("unsupported row " + sigma.row + " in axiom (S) table");
  int n = static_cast<int>(sigma.order.size());
  std::vector<int> actual;
  for (int k = 0; k < n; ++k)
    if (std::find(sp.begin(), sp.end(), sigma.order[k]) != sp.end()) actual.push_back(k + 1);
  bool found = false;
  for (const auto& spec : it->second) {
    std::vector<int> allowed = expand_subset_spec(spec, n);
    for (int k : allowed)
      if (r.pair(sigma.order[k - 1], w) != 0)
        throw DomainError("axiom (S) table row " + sigma.row + " permits alpha with nonzero pairing");
    if (allowed == actual) found = true;
  }
  return found;
}

}  // namespace spheromo
