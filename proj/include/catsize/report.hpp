#ifndef CATSIZE_REPORT_HPP
#define CATSIZE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "catsize/composites.hpp"
#include "catsize/estimators.hpp"

namespace catsize::cli {

// One rendered species line: contribution = count * shift_velocity / characteristic_velocity.
struct SpeciesRow {
  std::string name;
  double count = 0.0;
  double shift_velocity = 0.0;
  double characteristic_velocity = 0.0;
  double w_particles = 0.0;

  bool operator==(const SpeciesRow&) const = default;
};

// Flat, serialization-ready result of one scenario. JSON key order is part
// of the output contract: scenario, mode, species, total_w_particles,
// total_w_raw, w_cp?, classification, required_magnification?, w_natural?,
// overlap_abs?, notes, warnings.
struct Report {
  std::string scenario;
  std::string mode;
  std::vector<SpeciesRow> species;
  double total_w_particles = 0.0;
  double total_w_raw = 0.0;
  std::optional<comp::PairReport> w_cp;
  std::string classification = "not_applicable";
  std::optional<double> required_magnification;  // mesoscopic only
  std::optional<double> w_natural;               // exact scenarios only
  std::optional<double> overlap_abs;             // exact scenarios only
  std::vector<std::string> notes;
  std::vector<std::string> warnings;

  bool operator==(const Report&) const = default;
};

enum class RenderFormat { Table, Json };

RenderFormat parse_format(const std::string& name);  // InvalidValue on anything else

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& doc);

// Tables use 6 significant digits; JSON keeps full double precision and is
// byte-stable for equal reports. `render` covers one report, `render_many`
// a whole run (JSON array; tables separated by a rule).
std::string render(const Report& report, RenderFormat format);
std::string render_many(const std::vector<Report>& reports, RenderFormat format);

// Converts a finished estimator report plus naming context into the flat form.
Report flatten(const est::CatSizeReport& result, std::string scenario_name, std::string mode);

}  // namespace catsize::cli

#endif  // CATSIZE_REPORT_HPP
