#include "spheromo/report.hpp"

#include <sstream>

namespace spheromo {

namespace {

std::string face_label(const Instance& in, const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.vertices.size(); ++i) s += (i ? ", " : "") + in.vertex_name(f.vertices[i]);
  return s + "}";
}

Report vectors(const std::vector<QVec>& vs) {
  Report a = Report::array();
  for (const auto& v : vs) a.push_back(to_string(v));
  return a;
}

bool scalar(const Report& r) { return !r.is_object() && !r.is_array(); }

// short arrays of scalars go on one line
bool inline_array(const Report& v) {
  if (!v.is_array()) return false;
  std::size_t len = 0;
  for (const auto& x : v) {
    if (!scalar(x)) return false;
    len += x.is_string() ? x.get<std::string>().size() + 2 : x.dump().size() + 2;
  }
  return len <= 72;
}

std::string scalar_text(const Report& r) {
  if (r.is_string()) return r.get<std::string>();
  return r.dump();
}

void render_text(const Report& r, int indent, std::ostream& out) {
  std::string pad(indent, ' ');
  if (r.is_object()) {
    for (const auto& [k, v] : r.items()) {
      if (scalar(v)) {
        out << pad << k << ": " << scalar_text(v) << "\n";
      } else if (v.empty()) {
        out << pad << k << ": " << (v.is_array() ? "[]" : "{}") << "\n";
      } else if (inline_array(v)) {
        out << pad << k << ": [";
        bool first = true;
        for (const auto& x : v) {
          out << (first ? "" : "; ") << scalar_text(x);
          first = false;
        }
        out << "]\n";
      } else {
        out << pad << k << ":\n";
        render_text(v, indent + 2, out);
      }
    }
  } else if (r.is_array()) {
    for (const auto& x : r) {
      if (scalar(x)) {
        out << pad << "- " << scalar_text(x) << "\n";
      } else {
        std::ostringstream inner;
        render_text(x, indent + 2, inner);
        std::string s = inner.str();
        // put the first line on the dash
        out << pad << "- " << s.substr(indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(r) << "\n";
  }
}

}  // namespace

Report sigma_json(const Instance& in, const std::vector<SphericalRoot>& sigma) {
  Report a = Report::array();
  for (const auto& s : sigma) a.push_back(in.root_name(s));
  return a;
}

Report verdict_json(const Verdict& v, bool certificate) {
  Report out;
  out["status"] = status_name(v.status);
  if (v.status != Status::pass) {
    out["axiom"] = v.axiom;
    out["witness"] = v.witness;
  }
  if (certificate) {
    Report t = Report::array();
    for (const auto& line : v.trace) t.push_back(line);
    out["trace"] = t;
  }
  return out;
}

Report enumeration_json(const Instance& in, const Enumeration& e, bool certificate) {
  Report out;
  out["compatible_roots"] = sigma_json(in, e.compatible);
  Report unsupported = Report::array();
  for (const auto& [s, v] : e.unsupported) {
    Report u;
    u["root"] = in.root_name(s);
    u["verdict"] = verdict_json(v, certificate);
    unsupported.push_back(u);
  }
  out["unsupported_roots"] = unsupported;
  Report passing = Report::array();
  for (const auto& c : e.passing) {
    Report p;
    p["sigma"] = sigma_json(in, c.sigma);
    p["verdict"] = verdict_json(c.verdict, certificate);
    passing.push_back(p);
  }
  out["count"] = e.passing.size();
  out["passing"] = passing;
  Report undecided = Report::array();
  for (const auto& c : e.undecided) {
    Report p;
    p["sigma"] = sigma_json(in, c.sigma);
    p["verdict"] = verdict_json(c.verdict, certificate);
    undecided.push_back(p);
  }
  out["undecided"] = undecided;
  out["complete"] = e.unsupported.empty() && e.undecided.empty();
  return out;
}

Report facets_json(const Instance& in) {
  const auto& q = in.polytope();
  Report out;
  Report verts = Report::array();
  for (std::size_t i = 0; i < q.vertices().size(); ++i) {
    Report v;
    v["name"] = in.vertex_name(i);
    v["weight"] = to_string(q.vertex(i));
    v["local"] = to_string(q.local(i));
    verts.push_back(v);
  }
  out["omega"] = to_string(q.omega());
  out["lattice_basis"] = vectors(in.lattice().basis());
  out["vertices"] = verts;
  Report facets = Report::array();
  for (std::size_t k = 0; k < q.facets().size(); ++k) {
    const Facet& f = q.facets()[k];
    Report j;
    j["name"] = in.facet_name(k);
    j["normal"] = to_string(f.normal);
    j["offset"] = to_string(f.offset);
    Report vs = Report::array();
    for (auto i : f.vertices) vs.push_back(in.vertex_name(i));
    j["vertices"] = vs;
    facets.push_back(j);
  }
  out["facets"] = facets;
  return out;
}

Report orbit_faces_json(const Instance& in, const std::vector<SphericalRoot>& sigma) {
  const auto& q = in.polytope();
  Report out;
  out["sigma"] = sigma_json(in, sigma);
  Report faces = Report::array();
  for (auto k : orbit_faces(q, valuation_cone(in, sigma))) {
    const Face& f = q.faces()[k];
    Report j;
    j["face"] = face_label(in, f);
    j["dim"] = f.dim;
    j["normal_cone_rays"] = vectors(normal_cone(q, f).rays());
    faces.push_back(j);
  }
  out["orbit_faces"] = faces;
  Report ov = Report::array();
  for (auto i : orbit_vertices(in, sigma)) ov.push_back(in.vertex_name(i));
  out["orbit_vertices"] = ov;
  return out;
}

Report colors_json(const Instance& in, const ColorTable& t) {
  Report out;
  out["reference_point"] = to_string(t.w);
  Report cs = Report::array();
  for (const auto& c : t.colors) {
    Report j;
    j["name"] = c.name;
    j["rho"] = to_string(c.rho);
    j["n"] = to_string(c.n);
    Report m = Report::array();
    for (auto a : c.moved_by) m.push_back(in.roots().root_name(a));
    j["moved_by"] = m;
    cs.push_back(j);
  }
  out["colors"] = cs;
  return out;
}

Report colored_fan_json(const Instance& in, const ColorTable& t, const ColoredFan& fan, const Verdict& valid) {
  Report out;
  Report cones = Report::array();
  for (const auto& c : fan.cones) {
    Report j;
    j["face"] = c.face == RationalPolytope::npos ? std::string("-") : face_label(in, in.polytope().faces()[c.face]);
    j["rays"] = vectors(c.cone.rays());
    Report cols = Report::array();
    for (auto d : c.colors) cols.push_back(t.colors[d].name);
    j["colors"] = cols;
    cones.push_back(j);
  }
  out["cones"] = cones;
  out["validation"] = verdict_json(valid, false);
  return out;
}

std::string render(const Report& r, ReportFormat f) {
  if (f == ReportFormat::json) return r.dump(2) + "\n";
  std::ostringstream out;
  render_text(r, 0, out);
  return out.str();
}

}  // namespace spheromo
