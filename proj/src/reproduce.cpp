#include "catsize/reproduce.hpp"

#include <algorithm>
#include <cstdio>

#include "catsize/materials.hpp"

namespace catsize::cli {

namespace {

RigidBodyScenario lif_sphere(std::string name, double diameter_um, est::EstimateMode mode,
                             est::NucleonTreatment treatment) {
  RigidBodyScenario scenario;
  scenario.name = std::move(name);
  scenario.spec.material = est::lif_material();
  scenario.spec.geometry = est::SphereDiameter{diameter_um * 1e-4};
  scenario.spec.displacement = diameter_um * 1e-4;  // traverses its own diameter
  scenario.spec.duration = 1.0;
  scenario.spec.mode = mode;
  scenario.spec.nucleon_treatment = treatment;
  return scenario;
}

FluxQubitScenario cooper_pairs(std::string name, double n_electrons, double gap_ratio) {
  FluxQubitScenario scenario;
  scenario.name = std::move(name);
  scenario.n_electrons = n_electrons;
  scenario.gap_ratio = gap_ratio;
  // Symmetric double-supercurrent branches: COM angular momenta +-hbar/2.
  scenario.branch_a = comp::RingMode{0.5};
  scenario.branch_b = comp::RingMode{-0.5};
  return scenario;
}

const Report& by_name(const std::vector<Report>& reports, const std::string& name) {
  for (const Report& report : reports) {
    if (report.scenario == name) return report;
  }
  throw Error("no built-in report named '" + name + "'");
}

double species_w(const Report& report, const std::string& species) {
  for (const SpeciesRow& row : report.species) {
    if (row.name == species) return row.w_particles;
  }
  throw Error("report '" + report.scenario + "' has no species '" + species + "'");
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::vector<Scenario> builtin_scenarios() {
  using est::EstimateMode;
  using est::NucleonTreatment;
  std::vector<Scenario> scenarios;
  scenarios.push_back(lif_sphere("lif_5um_paper", 5.0, EstimateMode::Paper,
                                 NucleonTreatment::IntranuclearNucleons));
  scenarios.push_back(lif_sphere("lif_5um_first_principles", 5.0, EstimateMode::FirstPrinciples,
                                 NucleonTreatment::IntranuclearNucleons));
  scenarios.push_back(lif_sphere("lif_1p5um_paper", 1.5, EstimateMode::Paper,
                                 NucleonTreatment::IntranuclearNucleons));
  scenarios.push_back(lif_sphere("lif_1p5um_first_principles", 1.5,
                                 EstimateMode::FirstPrinciples,
                                 NucleonTreatment::IntranuclearNucleons));
  scenarios.push_back(lif_sphere("lif_5um_atomic_rms_paper", 5.0, EstimateMode::Paper,
                                 NucleonTreatment::AtomicRms));
  scenarios.push_back(lif_sphere("lif_5um_nucleus_composite_paper", 5.0, EstimateMode::Paper,
                                 NucleonTreatment::NucleusComposite));

  FluxQubitScenario qubit;
  qubit.name = "flux_qubit_configured";
  qubit.n_electrons = 1e9;
  qubit.velocity_ratio = 5e-6;
  scenarios.push_back(qubit);

  scenarios.push_back(cooper_pairs("cooper_pairs_n1e9", 1e9, 1e-3));
  scenarios.push_back(cooper_pairs("cooper_pairs_n1e10", 1e10, 1e-3));
  return scenarios;
}

ReproduceResult reproduce_paper() {
  ReproduceResult result;
  for (const Scenario& scenario : builtin_scenarios()) {
    result.reports.push_back(run_scenario(scenario));
  }

  const Report& paper_5um = by_name(result.reports, "lif_5um_paper");
  const Report& fp_5um = by_name(result.reports, "lif_5um_first_principles");
  const Report& paper_1p5 = by_name(result.reports, "lif_1p5um_paper");
  const Report& fp_1p5 = by_name(result.reports, "lif_1p5um_first_principles");
  const Report& atomic_rms = by_name(result.reports, "lif_5um_atomic_rms_paper");
  const Report& composite = by_name(result.reports, "lif_5um_nucleus_composite_paper");
  const Report& qubit = by_name(result.reports, "flux_qubit_configured");
  const Report& pairs_1e9 = by_name(result.reports, "cooper_pairs_n1e9");
  const Report& pairs_1e10 = by_name(result.reports, "cooper_pairs_n1e10");

  auto ratio = [](const Report& report) {
    return species_w(report, "nucleons") / species_w(report, "electrons");
  };

  result.comparison = {
      {"W_particles, 5 um LiF sphere, 1 s traversal", "~1600", paper_5um.total_w_particles,
       paper_5um.mode, paper_5um.scenario},
      {"W_particles, 5 um LiF sphere, 1 s traversal", "~1600", fp_5um.total_w_particles,
       fp_5um.mode, fp_5um.scenario},
      {"nucleon/electron contribution ratio", "~0.2", ratio(paper_5um), paper_5um.mode,
       paper_5um.scenario},
      {"nucleon/electron contribution ratio", "~0.2", ratio(fp_5um), fp_5um.mode,
       fp_5um.scenario},
      {"W_particles, 1.5 um LiF sphere, 1 s traversal", "< 3", paper_1p5.total_w_particles,
       paper_1p5.mode, paper_1p5.scenario},
      {"W_particles, 1.5 um LiF sphere, 1 s traversal", "< 3", fp_1p5.total_w_particles,
       fp_1p5.mode, fp_1p5.scenario},
      {"W_particles, 5 um sphere, nucleons at whole-atom v0", "-",
       atomic_rms.total_w_particles, atomic_rms.mode, atomic_rms.scenario},
      {"W_particles, 5 um sphere, electrons + composite nuclei", "~1e5",
       composite.total_w_particles, composite.mode, composite.scenario},
      {"flux qubit W, N=1e9, v/v0=5e-6", "~5000", qubit.total_w_particles, qubit.mode,
       qubit.scenario},
      {"Cooper-pair W_CP, N=1e9, gap_ratio=1e-3", "1e6-1e7", pairs_1e9.w_cp->w_cp,
       pairs_1e9.mode, pairs_1e9.scenario},
      {"Cooper-pair W_CP, N=1e10, gap_ratio=1e-3", "1e6-1e7", pairs_1e10.w_cp->w_cp,
       pairs_1e10.mode, pairs_1e10.scenario},
  };
  return result;
}

std::string render(const ReproduceResult& result, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::ordered_json doc;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const Report& report : result.reports) doc["reports"].push_back(to_json(report));
    doc["comparison"] = nlohmann::ordered_json::array();
    for (const ComparisonRow& row : result.comparison) {
      doc["comparison"].push_back({{"quantity", row.quantity},
                                   {"quoted_figure", row.quoted_figure},
                                   {"computed", row.computed},
                                   {"mode", row.mode},
                                   {"scenario", row.scenario}});
    }
    return doc.dump(2);
  }

  std::string out = render_many(result.reports, RenderFormat::Table);
  out += "\n" + std::string(64, '=') + "\n";
  out += "comparison with the published figures\n";

  const std::vector<std::string> headers = {"quantity", "quoted", "computed", "mode", "scenario"};
  std::vector<std::vector<std::string>> rows;
  for (const ComparisonRow& row : result.comparison) {
    rows.push_back({row.quantity, row.quoted_figure, fmt(row.computed), row.mode, row.scenario});
  }
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < headers.size(); ++c) {
    std::size_t w = headers[c].size();
    for (const auto& row : rows) w = std::max(w, row[c].size());
    widths.push_back(w);
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) line += "  ";
      line += cells[c] + std::string(widths[c] - cells[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  emit(headers);
  for (const auto& row : rows) emit(row);
  while (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

}  // namespace catsize::cli
