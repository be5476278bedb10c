#pragma once

#include "spheromo/colored.hpp"

#include <json.hpp>

namespace spheromo {

using Report = nlohmann::ordered_json;

enum class ReportFormat { text, json };

Report sigma_json(const Instance& in, const std::vector<SphericalRoot>& sigma);
Report verdict_json(const Verdict& v, bool certificate);
Report enumeration_json(const Instance& in, const Enumeration& e, bool certificate);

// Combinatorial dumps for `inspect`.
Report facets_json(const Instance& in);
Report orbit_faces_json(const Instance& in, const std::vector<SphericalRoot>& sigma);
Report colors_json(const Instance& in, const ColorTable& t);
Report colored_fan_json(const Instance& in, const ColorTable& t, const ColoredFan& fan, const Verdict& valid);

// Same bytes for the same report.
std::string render(const Report& r, ReportFormat f);

}  // namespace spheromo
