#include "spheromo/cli.hpp"

#include "spheromo/input.hpp"
#include "spheromo/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

#ifndef SPHEROMO_DEFAULT_DATA_DIR
#define SPHEROMO_DEFAULT_DATA_DIR "data"
#endif

namespace spheromo {

namespace {

struct Options {
  std::string input;
  std::string level;
  std::string show;
  std::string format = "text";
  std::string data_dir;
  unsigned jobs = 1;
  bool certificate = false;
};

struct Data {
  std::shared_ptr<const LunaSTable> luna;
  std::shared_ptr<const SocleRegistry> socles;
};

std::string data_dir(const Options& o) {
  if (!o.data_dir.empty()) return o.data_dir;
  if (const char* env = std::getenv("SPHEROMO_DATA"); env && *env) return env;
  return SPHEROMO_DEFAULT_DATA_DIR;
}

Data load_data(const Options& o) {
  std::string dir = data_dir(o);
  return {std::make_shared<const LunaSTable>(LunaSTable::load(dir + "/luna_s.toml")),
          std::make_shared<const SocleRegistry>(SocleRegistry::load(dir + "/socles.toml"))};
}

Report header(const std::string& command, const Options& o, const Data& data) {
  Report r;
  r["command"] = command;
  r["input"] = o.input;
  Report d;
  d["luna_s"] = data.luna->version();
  d["socles"] = data.socles->version();
  r["data"] = d;
  return r;
}

void merge(Report& r, const Report& extra) {
  for (const auto& [k, v] : extra.items()) r[k] = v;
}

int exit_of(Status s) { return s == Status::pass ? 0 : s == Status::fail ? 1 : 3; }

int exit_of(const Enumeration& e) {
  if (!e.unsupported.empty() || !e.undecided.empty()) return 3;
  return e.passing.empty() ? 1 : 0;
}

Level need_level(const std::string& s, bool allow_kaehler) {
  auto l = parse_level(s);
  if (!l || (!allow_kaehler && *l == Level::kaehler))
    throw InputError("unknown level '" + s + "' (q-admissible, admissible, smooth, q-reflexive, reflexive)");
  return *l;
}

int cmd_check(const Options& o, const Data& data, Report& r) {
  Level level = need_level(o.level, true);
  Problem pb = build_problem(load_document(o.input), data.luna);
  if (!pb.sigma) throw InputError(o.input + ": check needs a 'sigma' list");
  r["level"] = level_name(level);
  r["sigma"] = sigma_json(*pb.instance, *pb.sigma);
  Verdict v;
  try {
    v = check_level(*pb.instance, *pb.sigma, level, data.socles.get());
  } catch (const UnsupportedError& e) {
    v = Verdict::unsupported("data", e.what());
  }
  merge(r, verdict_json(v, o.certificate));
  return exit_of(v.status);
}

int cmd_enumerate(const Options& o, const Data& data, Report& r, bool kaehler) {
  Level level = kaehler ? Level::kaehler : need_level(o.level, false);
  Problem pb = build_problem(load_document(o.input), data.luna);
  if (pb.sigma) throw InputError(o.input + ": " + (kaehler ? "kaehler" : "enumerate") + " takes a pair without 'sigma'");
  Enumeration e = kaehler ? kaehler_check(*pb.instance, *data.socles, o.jobs)
                          : enumerate_sigma(*pb.instance, level, data.socles.get(), o.jobs);
  r["level"] = level_name(level);
  if (kaehler) {
    bool complete = e.unsupported.empty() && e.undecided.empty();
    r["summary"] = !e.passing.empty() ? "Kählerizable, " + std::to_string(e.passing.size()) + " complex structure" +
                                            (e.passing.size() == 1 ? "" : "s")
                   : complete ? std::string("not Kählerizable")
                              : std::string("undecided");
  }
  merge(r, enumeration_json(*pb.instance, e, o.certificate));
  return exit_of(e);
}

int cmd_quadruple(const Options& o, const Data& data, Report& r) {
  Problem pb = build_problem(load_document(o.input), data.luna);
  if (!pb.quadruple) throw InputError(o.input + ": quadruple needs a 'quadruple' block");
  const Instance& in = *pb.instance;
  std::vector<std::vector<SphericalRoot>> candidates;
  if (pb.sigma) {
    candidates.push_back(*pb.sigma);
  } else {
    const auto& cat = in.catalog();
    if (cat.size() > 16) throw InputError("catalog has " + std::to_string(cat.size()) + " roots; give 'sigma'");
    for (std::size_t mask = 0; mask < (std::size_t(1) << cat.size()); ++mask) {
      std::vector<SphericalRoot> s;
      for (std::size_t i = 0; i < cat.size(); ++i)
        if (mask & (std::size_t(1) << i)) s.push_back(cat[i]);
      candidates.push_back(s);
    }
    std::sort(candidates.begin(), candidates.end(), sigma_less);
  }
  Report results = Report::array();
  std::size_t passed = 0, undecided = 0;
  for (const auto& s : candidates) {
    Verdict v;
    try {
      v = quadruple_check(in.roots(), in.luna(), *pb.quadruple, s);
    } catch (const UnsupportedError& e) {
      v = Verdict::unsupported("data", e.what());
    }
    passed += v.status == Status::pass;
    undecided += v.status == Status::unsupported;
    Report j;
    j["sigma"] = sigma_json(in, s);
    j["verdict"] = verdict_json(v, o.certificate);
    results.push_back(j);
  }
  r["candidates"] = candidates.size();
  r["passing"] = passed;
  r["undecided"] = undecided;
  r["results"] = results;
  return passed ? 0 : undecided ? 3 : 1;
}

int cmd_inspect(const Options& o, const Data& data, Report& r) {
  Problem pb = build_problem(load_document(o.input), data.luna);
  const Instance& in = *pb.instance;
  std::vector<SphericalRoot> sigma = pb.sigma.value_or(std::vector<SphericalRoot>{});
  r["show"] = o.show;
  if (o.show == "facets") {
    merge(r, facets_json(in));
    return 0;
  }
  if (o.show == "orbit-faces") {
    merge(r, orbit_faces_json(in, sigma));
    return 0;
  }
  r["sigma"] = sigma_json(in, sigma);
  Verdict qa = q_admissible(in, sigma);
  if (!qa.passed()) {
    merge(r, verdict_json(qa, o.certificate));
    return exit_of(qa.status);
  }
  ColorTable t = color_table(in, sigma);
  if (o.show == "colors") {
    merge(r, colors_json(in, t));
    return 0;
  }
  ColoredFan fan = colored_fan(in, sigma, t);
  Verdict valid = validate_colored_fan(t, fan, valuation_cone(in, sigma));
  merge(r, colored_fan_json(in, t, fan, valid));
  return exit_of(valid.status);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Momentum triples of spherical varieties: admissibility, smoothness, Fano and Kähler tests"};
  app.name("spheromo");
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--data-dir", o.data_dir, "directory with luna_s.toml and socles.toml (else $SPHEROMO_DATA)");
  app.add_option("--jobs", o.jobs, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_flag("--certificate", o.certificate, "print witnesses and traces");

  auto* check = app.add_subcommand("check", "evaluate one level predicate on (Xi, Q, Sigma)");
  check->add_option("input", o.input, "input document (.json or .toml)")->required();
  check->add_option("--level", o.level, "q-admissible, admissible, smooth, q-reflexive, reflexive or kaehler")
      ->required();
  auto* enumerate = app.add_subcommand("enumerate", "list every Sigma passing a level for (Xi, Q)");
  enumerate->add_option("input", o.input, "input document")->required();
  enumerate->add_option("--level", o.level, "q-admissible, admissible, smooth, q-reflexive or reflexive")
      ->required();
  auto* kaehler = app.add_subcommand("kaehler", "smooth R-momentum triples (compatible complex structures)");
  kaehler->add_option("input", o.input, "input document")->required();
  auto* quadruple = app.add_subcommand("quadruple", "momentum-quadruple test, for one Sigma or all of them");
  quadruple->add_option("input", o.input, "input document with a quadruple block")->required();
  auto* inspect = app.add_subcommand("inspect", "dump the computed combinatorial data");
  inspect->add_option("input", o.input, "input document")->required();
  inspect->add_option("--show", o.show, "facets, orbit-faces, colors or colored-fan")
      ->required()
      ->check(CLI::IsMember({"facets", "orbit-faces", "colors", "colored-fan"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Data data = load_data(o);
    std::string command = app.get_subcommands().front()->get_name();
    Report r = header(command, o, data);
    int code = 0;
    if (command == "check") code = cmd_check(o, data, r);
    if (command == "enumerate") code = cmd_enumerate(o, data, r, false);
    if (command == "kaehler") code = cmd_enumerate(o, data, r, true);
    if (command == "quadruple") code = cmd_quadruple(o, data, r);
    if (command == "inspect") code = cmd_inspect(o, data, r);
    r["exit_code"] = code;
    out << render(r, o.format == "json" ? ReportFormat::json : ReportFormat::text);
    return code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace spheromo
