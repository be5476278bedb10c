#include "spheromo/input.hpp"

#include <toml.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace spheromo {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

json from_toml(const toml::node& node, const std::string& path) {
  if (auto t = node.as_table()) {
    json out = json::object();
    for (const auto& [k, v] : *t) out[std::string(k.str())] = from_toml(v, path + "." + std::string(k.str()));
    return out;
  }
  if (auto a = node.as_array()) {
    json out = json::array();
    for (std::size_t i = 0; i < a->size(); ++i) out.push_back(from_toml((*a)[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }
  if (auto s = node.as_string()) return s->get();
  if (auto i = node.as_integer()) return i->get();
  if (auto b = node.as_boolean()) return b->get();
  if (node.is_floating_point())
    throw InputError(path + ": floating-point value not accepted, write \"p/q\"");
  throw InputError(path + ": unsupported value type");
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw InputError(path + ": expected a table");
  for (const auto& [k, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || k == a;
    if (!ok) throw InputError(path + ": unknown key '" + k + "'");
  }
}

Rational rational_of(const json& v, const std::string& path) {
  if (v.is_number_float()) throw InputError(path + ": floating-point value not accepted, write \"p/q\"");
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError(path + ": expected a rational (integer or \"p/q\" string)");
}

QVec vector_of(const json& v, const std::string& path) {
  if (!v.is_array()) throw InputError(path + ": expected an array");
  QVec out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_of(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

QMat matrix_of(const json& v, const std::string& path) {
  if (!v.is_array()) throw InputError(path + ": expected an array of rows");
  QMat out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(vector_of(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

ComponentSpec component_of(const std::string& s, const std::string& path) {
  if (s.size() < 2 || !std::isupper(static_cast<unsigned char>(s[0])) ||
      !std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InputError(path + ": malformed component '" + s + "'");
  ComponentSpec c;
  c.type = s[0];
  c.rank = std::stoi(s.substr(1));
  return c;
}

// "A2", "A1xA1", "A2xT1", "T2"
RootSystemSpec group_shorthand(const std::string& s, const std::string& path) {
  RootSystemSpec spec;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (!tok.empty() && tok[0] == 'T') {
      spec.torus_rank += component_of(tok, path).rank;
      continue;
    }
    spec.components.push_back(component_of(tok, path));
  }
  return spec;
}

RootSystemSpec group_of(const json& g, const std::string& path) {
  if (g.is_string()) return group_shorthand(g.get<std::string>(), path);
  check_keys(g, path, {"components", "torus_rank", "custom"});
  RootSystemSpec spec;
  if (g.contains("components")) {
    const json& cs = g["components"];
    if (!cs.is_array()) throw InputError(path + ".components: expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string p = path + ".components[" + std::to_string(i) + "]";
      if (cs[i].is_string()) {
        spec.components.push_back(component_of(cs[i].get<std::string>(), p));
      } else {
        check_keys(cs[i], p, {"type", "rank"});
        if (!cs[i].contains("type") || !cs[i]["type"].is_string() || cs[i]["type"].get<std::string>().size() != 1)
          throw InputError(p + ".type: expected a one-letter Dynkin type");
        if (!cs[i].contains("rank") || !cs[i]["rank"].is_number_integer())
          throw InputError(p + ".rank: expected an integer");
        spec.components.push_back({cs[i]["type"].get<std::string>()[0], cs[i]["rank"].get<int>()});
      }
    }
  }
  if (g.contains("torus_rank")) {
    if (!g["torus_rank"].is_number_integer()) throw InputError(path + ".torus_rank: expected an integer");
    spec.torus_rank = g["torus_rank"].get<int>();
  }
  if (g.contains("custom")) {
    const json& c = g["custom"];
    std::string p = path + ".custom";
    check_keys(c, p, {"lattice_rank", "simple_roots", "cartan"});
    CustomBlock b;
    if (!c.contains("lattice_rank") || !c["lattice_rank"].is_number_integer() || c["lattice_rank"].get<int>() < 0)
      throw InputError(p + ".lattice_rank: expected a nonnegative integer");
    b.lattice_rank = c["lattice_rank"].get<std::size_t>();
    if (c.contains("simple_roots")) b.simple_roots = matrix_of(c["simple_roots"], p + ".simple_roots");
    if (c.contains("cartan")) b.cartan = matrix_of(c["cartan"], p + ".cartan");
    spec.custom = b;
  }
  return spec;
}

InputDocument document_of(const json& doc) {
  check_keys(doc, "document", {"group", "lattice", "polytope", "sigma", "quadruple"});
  InputDocument d;
  if (!doc.contains("group")) throw InputError("document: missing 'group'");
  d.group = group_of(doc["group"], "group");
  if (!doc.contains("lattice")) {
    d.lattice_keyword = "weight";
  } else if (doc["lattice"].is_string()) {
    d.lattice_keyword = doc["lattice"].get<std::string>();
    if (d.lattice_keyword != "weight" && d.lattice_keyword != "root")
      throw InputError("lattice: expected \"weight\", \"root\" or a list of basis rows");
  } else {
    d.lattice = matrix_of(doc["lattice"], "lattice");
  }
  if (!doc.contains("polytope")) throw InputError("document: missing 'polytope'");
  d.polytope = matrix_of(doc["polytope"], "polytope");
  if (doc.contains("sigma")) {
    const json& s = doc["sigma"];
    if (!s.is_array()) throw InputError("sigma: expected an array");
    std::vector<SigmaSpec> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::string p = "sigma[" + std::to_string(i) + "]";
      SigmaSpec spec;
      if (s[i].is_string()) {
        spec.alias = s[i].get<std::string>();
      } else if (s[i].is_object()) {
        for (const auto& [k, v] : s[i].items()) spec.coeffs[k] = rational_of(v, p + "." + k);
      } else {
        throw InputError(p + ": expected an alias string or a coefficient table");
      }
      out.push_back(std::move(spec));
    }
    d.sigma = std::move(out);
  }
  if (doc.contains("quadruple")) {
    const json& q = doc["quadruple"];
    check_keys(q, "quadruple", {"lattice", "highest_weights"});
    if (!q.contains("lattice") || !q.contains("highest_weights"))
      throw InputError("quadruple: needs 'lattice' and 'highest_weights'");
    d.quadruple = QuadrupleSpec{matrix_of(q["lattice"], "quadruple.lattice"),
                                matrix_of(q["highest_weights"], "quadruple.highest_weights")};
  }
  return d;
}

ojson rationals_json(const QVec& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ojson matrix_json(const QMat& m) {
  ojson a = ojson::array();
  for (const auto& row : m) a.push_back(rationals_json(row));
  return a;
}

}  // namespace

InputDocument parse_document(const std::string& text, DocFormat format, const std::string& origin) {
  json doc;
  if (format == DocFormat::toml) {
    try {
      doc = from_toml(toml::parse(text, origin), "document");
    } catch (const toml::parse_error& e) {
      std::ostringstream msg;
      msg << origin << ":" << e.source().begin.line << ":" << e.source().begin.column << ": " << e.description();
      throw InputError(msg.str());
    }
  } else {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      // nlohmann reports the byte offset; turn it into line:column
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
    }
  }
  try {
    return document_of(doc);
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  bool toml = path.size() >= 5 && path.substr(path.size() - 5) == ".toml";
  return parse_document(ss.str(), toml ? DocFormat::toml : DocFormat::json, path);
}

ojson to_json(const InputDocument& d) {
  ojson out;
  ojson g;
  if (d.group.custom) {
    ojson c;
    c["lattice_rank"] = d.group.custom->lattice_rank;
    c["simple_roots"] = matrix_json(d.group.custom->simple_roots);
    if (d.group.custom->cartan) c["cartan"] = matrix_json(*d.group.custom->cartan);
    g["custom"] = c;
  } else {
    ojson cs = ojson::array();
    for (const auto& c : d.group.components) cs.push_back(std::string(1, c.type) + std::to_string(c.rank));
    g["components"] = cs;
    g["torus_rank"] = d.group.torus_rank;
  }
  out["group"] = g;
  if (!d.lattice_keyword.empty())
    out["lattice"] = d.lattice_keyword;
  else
    out["lattice"] = matrix_json(d.lattice);
  out["polytope"] = matrix_json(d.polytope);
  if (d.sigma) {
    ojson s = ojson::array();
    for (const auto& spec : *d.sigma) {
      if (!spec.alias.empty()) {
        s.push_back(spec.alias);
      } else {
        ojson m = ojson::object();
        for (const auto& [k, v] : spec.coeffs) m[k] = to_string(v);
        s.push_back(m);
      }
    }
    out["sigma"] = s;
  }
  if (d.quadruple) {
    ojson q;
    q["lattice"] = matrix_json(d.quadruple->lattice);
    q["highest_weights"] = matrix_json(d.quadruple->highest_weights);
    out["quadruple"] = q;
  }
  return out;
}

std::string serialize(const InputDocument& d) { return to_json(d).dump(2) + "\n"; }

SphericalRoot parse_spherical_root(const RootSystem& r, const std::vector<SphericalRoot>& catalog,
                                   const std::string& alias) {
  std::string s;
  for (char c : alias)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bad = [&](const std::string& why) { return InputError("spherical root '" + alias + "': " + why); };
  Rational factor = 1;
  std::string body = s;
  if (auto open = s.find('('); open != std::string::npos) {
    if (s.back() != ')') throw bad("unbalanced parentheses");
    factor = open == 0 ? Rational(1) : parse_rational(s.substr(0, open));
    body = s.substr(open + 1, s.size() - open - 2);
  }
  QVec coeffs = zeros(r.num_simple());
  std::stringstream ss(body);
  std::string term;
  while (std::getline(ss, term, '+')) {
    auto at = term.find("alpha");
    if (at == std::string::npos) throw bad("term '" + term + "' names no simple root");
    Rational c = at == 0 ? Rational(1) : parse_rational(term.substr(0, at));
    auto idx = r.root_index(term.substr(at));
    if (!idx) throw bad("unknown simple root '" + term.substr(at) + "'");
    coeffs[*idx] += c;
  }
  coeffs = factor * coeffs;
  auto found = find_spherical_root(catalog, coeffs);
  if (!found) throw bad("not a spherical root of the group");
  return *found;
}

Problem build_problem(const InputDocument& d, std::shared_ptr<const LunaSTable> luna) {
  RootSystem r(d.group);
  std::size_t n = r.rank();
  auto check_len = [&](const QVec& v, std::size_t len, const std::string& what) {
    if (v.size() != len)
      throw InputError(what + " " + to_string(v) + " has length " + std::to_string(v.size()) + ", expected " +
                       std::to_string(len));
  };
  Sublattice xi;
  if (d.lattice_keyword == "weight") {
    xi = Sublattice::full(n);
  } else if (d.lattice_keyword == "root") {
    xi = Sublattice(r.simple_roots(), n);
  } else {
    for (const auto& row : d.lattice) {
      check_len(row, n, "lattice row");
      if (!is_integral(row)) throw InputError("lattice row " + to_string(row) + " is not integral");
    }
    xi = Sublattice(d.lattice, n);
  }
  for (const auto& p : d.polytope) {
    check_len(p, n, "polytope vertex");
    if (!r.dominant(p)) throw InputError("polytope vertex " + to_string(p) + " is not dominant");
  }
  if (d.polytope.empty()) throw InputError("polytope: no vertices");
  Problem pb;
  pb.instance = std::make_shared<Instance>(r, xi, d.polytope, std::move(luna));
  const Instance& in = *pb.instance;
  if (d.sigma) {
    std::vector<SphericalRoot> sigma;
    for (const auto& spec : *d.sigma) {
      if (!spec.alias.empty()) {
        sigma.push_back(parse_spherical_root(in.roots(), in.catalog(), spec.alias));
        continue;
      }
      QVec coeffs = zeros(in.roots().num_simple());
      for (const auto& [k, v] : spec.coeffs) {
        auto idx = in.roots().root_index(k);
        if (!idx) throw InputError("sigma: unknown simple root '" + k + "'");
        coeffs[*idx] = v;
      }
      auto found = find_spherical_root(in.catalog(), coeffs);
      if (!found) throw InputError("sigma: " + format_spherical_root(in.roots(), coeffs) + " is not a spherical root");
      sigma.push_back(*found);
    }
    std::sort(sigma.begin(), sigma.end(), spherical_root_less);
    if (std::adjacent_find(sigma.begin(), sigma.end()) != sigma.end()) throw InputError("sigma: repeated root");
    pb.sigma = std::move(sigma);
  }
  if (d.quadruple) {
    for (const auto& row : d.quadruple->lattice) {
      check_len(row, n + 1, "extended lattice row");
      if (!is_integral(row)) throw InputError("extended lattice row " + to_string(row) + " is not integral");
    }
    for (const auto& h : d.quadruple->highest_weights) {
      check_len(h, n, "highest weight");
      if (!r.dominant(h)) throw InputError("highest weight " + to_string(h) + " is not dominant");
    }
    pb.quadruple = QuadrupleInput{Sublattice(d.quadruple->lattice, n + 1), d.quadruple->highest_weights, d.polytope};
  }
  return pb;
}

}  // namespace spheromo
