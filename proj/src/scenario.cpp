#include "catsize/scenario.hpp"

#include <cmath>
#include <initializer_list>
#include <set>

namespace catsize::cli {

namespace {

constexpr double kMicron = 1e-4;  // cm

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

// Every context lists the keys it understands; anything else is a typo the
// user should hear about rather than a silently ignored setting.
void reject_unknown(const toml::Value& table, const std::string& prefix,
                    std::initializer_list<const char*> allowed) {
  const std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, value] : table.as_table()) {
    if (known.count(key) == 0) {
      throw InvalidValue(join(prefix, key), "unrecognized field", value.line());
    }
  }
}

const toml::Value& require(const toml::Value& table, const std::string& prefix,
                           const std::string& key) {
  const toml::Value* v = table.find(key);
  if (v == nullptr) throw MissingField(join(prefix, key), table.line());
  return *v;
}

double as_number(const toml::Value& v, const std::string& path) {
  if (!v.is_number()) throw InvalidValue(path, "must be a number", v.line());
  const double out = v.as_number();
  if (!std::isfinite(out)) throw InvalidValue(path, "must be finite", v.line());
  return out;
}

double require_number(const toml::Value& table, const std::string& prefix,
                      const std::string& key) {
  return as_number(require(table, prefix, key), join(prefix, key));
}

std::string require_string(const toml::Value& table, const std::string& prefix,
                           const std::string& key) {
  const toml::Value& v = require(table, prefix, key);
  if (!v.is_string()) throw InvalidValue(join(prefix, key), "must be a string", v.line());
  return v.as_string();
}

std::optional<double> optional_number(const toml::Value& table, const std::string& prefix,
                                      const std::string& key) {
  const toml::Value* v = table.find(key);
  if (v == nullptr) return std::nullopt;
  return as_number(*v, join(prefix, key));
}

std::optional<std::string> optional_string(const toml::Value& table, const std::string& prefix,
                                           const std::string& key) {
  const toml::Value* v = table.find(key);
  if (v == nullptr) return std::nullopt;
  if (!v->is_string()) throw InvalidValue(join(prefix, key), "must be a string", v->line());
  return v->as_string();
}

std::optional<std::int64_t> optional_integer(const toml::Value& table, const std::string& prefix,
                                             const std::string& key) {
  const toml::Value* v = table.find(key);
  if (v == nullptr) return std::nullopt;
  if (!v->is_integer()) throw InvalidValue(join(prefix, key), "must be an integer", v->line());
  return v->as_integer();
}

int value_line(const toml::Value& table, const std::string& key) {
  const toml::Value* v = table.find(key);
  return v == nullptr ? table.line() : v->line();
}

// ---- rigid body ---------------------------------------------------------

est::Geometry parse_geometry(const toml::Value& root, const std::string& prefix) {
  const std::optional<double> sphere = optional_number(root, prefix, "sphere_diameter_um");
  const std::optional<double> cube = optional_number(root, prefix, "cube_side_um");
  if (sphere && cube) {
    throw InvalidValue(join(prefix, "cube_side_um"),
                       "give either sphere_diameter_um or cube_side_um, not both",
                       value_line(root, "cube_side_um"));
  }
  if (sphere) {
    if (*sphere <= 0.0) {
      throw InvalidValue(join(prefix, "sphere_diameter_um"), "must be positive",
                         value_line(root, "sphere_diameter_um"));
    }
    return est::SphereDiameter{*sphere * kMicron};
  }
  if (cube) {
    if (*cube <= 0.0) {
      throw InvalidValue(join(prefix, "cube_side_um"), "must be positive",
                         value_line(root, "cube_side_um"));
    }
    return est::CubeSide{*cube * kMicron};
  }
  throw MissingField(join(prefix, "sphere_diameter_um"), root.line());
}

void apply_criterion_overrides(const toml::Value& root, est::EstimatorConfig& config) {
  const toml::Value* criterion = root.find("criterion");
  if (criterion == nullptr) return;
  if (!criterion->is_table()) {
    throw InvalidValue("criterion", "must be a table", criterion->line());
  }
  reject_unknown(*criterion, "criterion",
                 {"min_resolvable_um", "max_observation_s", "magnification"});
  if (const auto v = optional_number(*criterion, "criterion", "min_resolvable_um")) {
    if (*v <= 0.0) {
      throw InvalidValue("criterion.min_resolvable_um", "must be positive",
                         value_line(*criterion, "min_resolvable_um"));
    }
    config.criterion.min_resolvable_length = *v * kMicron;
  }
  if (const auto v = optional_number(*criterion, "criterion", "max_observation_s")) {
    if (*v <= 0.0) {
      throw InvalidValue("criterion.max_observation_s", "must be positive",
                         value_line(*criterion, "max_observation_s"));
    }
    config.criterion.max_observation_time = *v;
  }
  if (const auto v = optional_number(*criterion, "criterion", "magnification")) {
    if (*v < 1.0) {
      throw InvalidValue("criterion.magnification", "must be at least 1",
                         value_line(*criterion, "magnification"));
    }
    config.available_magnification = *v;
  }
}

RigidBodyScenario parse_rigid_body(const toml::Value& root, const std::string& name,
                                   const est::MaterialRegistry& registry) {
  const std::string prefix = "rigid_body";
  reject_unknown(root, "",
                 {"schema", "kind", "name", "materials", "material", "sphere_diameter_um",
                  "cube_side_um", "displacement_um", "duration_s", "mode", "electron_count",
                  "nucleon_treatment", "criterion"});

  RigidBodyScenario scenario;
  scenario.name = name;

  const std::string material_name = require_string(root, prefix, "material");
  const est::Material* material = registry.find(material_name);
  if (material == nullptr) {
    throw InvalidValue(join(prefix, "material"), "unknown material '" + material_name + "'",
                       value_line(root, "material"));
  }
  scenario.spec.material = *material;
  scenario.spec.geometry = parse_geometry(root, prefix);

  const double displacement = require_number(root, prefix, "displacement_um");
  if (displacement < 0.0) {
    throw InvalidValue(join(prefix, "displacement_um"), "must be nonnegative",
                       value_line(root, "displacement_um"));
  }
  scenario.spec.displacement = displacement * kMicron;

  const double duration = require_number(root, prefix, "duration_s");
  if (duration <= 0.0) {
    throw InvalidValue(join(prefix, "duration_s"), "must be positive",
                       value_line(root, "duration_s"));
  }
  scenario.spec.duration = duration;

  const std::string mode = require_string(root, prefix, "mode");
  if (mode == "paper") {
    scenario.spec.mode = est::EstimateMode::Paper;
  } else if (mode == "first_principles") {
    scenario.spec.mode = est::EstimateMode::FirstPrinciples;
  } else {
    throw InvalidValue(join(prefix, "mode"), "must be \"paper\" or \"first_principles\"",
                       value_line(root, "mode"));
  }

  if (const auto count = optional_number(root, prefix, "electron_count")) {
    if (*count <= 0.0) {
      throw InvalidValue(join(prefix, "electron_count"), "must be positive",
                         value_line(root, "electron_count"));
    }
    if (scenario.spec.mode != est::EstimateMode::Paper) {
      throw InvalidValue(join(prefix, "electron_count"),
                         "electron count override requires mode = \"paper\"",
                         value_line(root, "electron_count"));
    }
    scenario.spec.electron_count_override = *count;
  }

  if (const auto treatment = optional_string(root, prefix, "nucleon_treatment")) {
    if (*treatment == "intranuclear") {
      scenario.spec.nucleon_treatment = est::NucleonTreatment::IntranuclearNucleons;
    } else if (*treatment == "atomic_rms") {
      scenario.spec.nucleon_treatment = est::NucleonTreatment::AtomicRms;
    } else if (*treatment == "nucleus_composite") {
      scenario.spec.nucleon_treatment = est::NucleonTreatment::NucleusComposite;
    } else {
      throw InvalidValue(join(prefix, "nucleon_treatment"),
                         "must be \"intranuclear\", \"atomic_rms\" or \"nucleus_composite\"",
                         value_line(root, "nucleon_treatment"));
    }
    if (scenario.spec.nucleon_treatment == est::NucleonTreatment::NucleusComposite &&
        scenario.spec.material.nuclei.empty()) {
      throw InvalidValue(join(prefix, "nucleon_treatment"),
                         "material '" + material_name + "' has no nucleus breakdown",
                         value_line(root, "nucleon_treatment"));
    }
  }

  apply_criterion_overrides(root, scenario.config);
  return scenario;
}

// ---- flux qubit ----------------------------------------------------------

comp::COMWavefunction parse_branch(const toml::Value& root, const std::string& path) {
  const toml::Value* branch = root.find(path);
  if (branch == nullptr) throw MissingField("flux_qubit." + path, root.line());
  if (!branch->is_table()) {
    throw InvalidValue("flux_qubit." + path, "must be a table", branch->line());
  }
  const std::string prefix = "flux_qubit." + path;
  const std::string model = require_string(*branch, prefix, "model");
  if (model == "ring") {
    reject_unknown(*branch, prefix, {"model", "angular_momentum"});
    return comp::RingMode{require_number(*branch, prefix, "angular_momentum")};
  }
  if (model == "gaussian") {
    reject_unknown(*branch, prefix, {"model", "center_cm", "mean_wavenumber_inv_cm", "width_cm"});
    comp::GaussianPacket packet;
    packet.center = require_number(*branch, prefix, "center_cm");
    packet.mean_wavenumber = require_number(*branch, prefix, "mean_wavenumber_inv_cm");
    packet.width = require_number(*branch, prefix, "width_cm");
    if (packet.width <= 0.0) {
      throw InvalidValue(join(prefix, "width_cm"), "must be positive",
                         value_line(*branch, "width_cm"));
    }
    return packet;
  }
  throw InvalidValue(join(prefix, "model"), "must be \"ring\" or \"gaussian\"",
                     value_line(*branch, "model"));
}

FluxQubitScenario parse_flux_qubit(const toml::Value& root, const std::string& name) {
  const std::string prefix = "flux_qubit";
  reject_unknown(root, "",
                 {"schema", "kind", "name", "materials", "n_electrons", "velocity_ratio",
                  "gap_ratio", "pairing", "branch_a", "branch_b"});

  FluxQubitScenario scenario;
  scenario.name = name;

  scenario.n_electrons = require_number(root, prefix, "n_electrons");
  if (scenario.n_electrons <= 0.0) {
    throw InvalidValue(join(prefix, "n_electrons"), "must be positive",
                       value_line(root, "n_electrons"));
  }

  scenario.velocity_ratio = optional_number(root, prefix, "velocity_ratio");
  if (scenario.velocity_ratio &&
      (*scenario.velocity_ratio < 0.0 || *scenario.velocity_ratio > 1.0)) {
    throw InvalidValue(join(prefix, "velocity_ratio"), "must be in [0,1]",
                       value_line(root, "velocity_ratio"));
  }

  scenario.gap_ratio = optional_number(root, prefix, "gap_ratio");
  if (scenario.gap_ratio && (*scenario.gap_ratio <= 0.0 || *scenario.gap_ratio >= 1.0)) {
    throw InvalidValue(join(prefix, "gap_ratio"), "must be in (0,1)",
                       value_line(root, "gap_ratio"));
  }

  if (!scenario.velocity_ratio && !scenario.gap_ratio) {
    throw MissingField(join(prefix, "velocity_ratio"), root.line());
  }

  const std::optional<std::string> pairing = optional_string(root, prefix, "pairing");
  if (pairing && !scenario.gap_ratio) {
    throw InvalidValue(join(prefix, "pairing"), "pairing requires gap_ratio",
                       value_line(root, "pairing"));
  }
  if (pairing && *pairing != "symmetric" && *pairing != "asymmetric") {
    throw InvalidValue(join(prefix, "pairing"), "must be \"symmetric\" or \"asymmetric\"",
                       value_line(root, "pairing"));
  }
  const bool asymmetric = pairing && *pairing == "asymmetric";
  if (asymmetric) {
    scenario.branch_a = parse_branch(root, "branch_a");
    scenario.branch_b = parse_branch(root, "branch_b");
  } else {
    // Symmetric double-supercurrent case: COM angular momenta +-hbar/2,
    // orthogonal branches. Branch tables are only meaningful when asymmetric.
    if (root.find("branch_a") != nullptr || root.find("branch_b") != nullptr) {
      throw InvalidValue(join(prefix, "branch_a"),
                         "branch tables require pairing = \"asymmetric\"",
                         value_line(root, "branch_a"));
    }
  }
  return scenario;
}

// ---- exact ---------------------------------------------------------------

fock::Complex parse_amplitude(const toml::Value& v, const std::string& path) {
  if (v.is_number()) return fock::Complex(v.as_number(), 0.0);
  if (v.is_array()) {
    const auto& parts = v.as_array();
    if (parts.size() != 2 || !parts[0].is_number() || !parts[1].is_number()) {
      throw InvalidValue(path, "must be a number or a [re, im] pair", v.line());
    }
    return fock::Complex(parts[0].as_number(), parts[1].as_number());
  }
  throw InvalidValue(path, "must be a number or a [re, im] pair", v.line());
}

fock::ManyBodyState parse_state(const toml::Value& table, const std::string& prefix,
                                bool allow_schema) {
  if (allow_schema) {
    reject_unknown(table, prefix, {"schema", "statistics", "num_modes", "max_occupancy", "term"});
  } else {
    reject_unknown(table, prefix, {"statistics", "num_modes", "max_occupancy", "term"});
  }

  fock::Statistics statistics = fock::Statistics::Fermionic;
  if (const auto s = optional_string(table, prefix, "statistics")) {
    if (*s == "fermionic") {
      statistics = fock::Statistics::Fermionic;
    } else if (*s == "bosonic") {
      statistics = fock::Statistics::Bosonic;
    } else {
      throw InvalidValue(join(prefix, "statistics"), "must be \"fermionic\" or \"bosonic\"",
                         value_line(table, "statistics"));
    }
  }

  const toml::Value& modes = require(table, prefix, "num_modes");
  if (!modes.is_integer() || modes.as_integer() < 1) {
    throw InvalidValue(join(prefix, "num_modes"), "must be a positive integer", modes.line());
  }
  const auto num_modes = static_cast<std::size_t>(modes.as_integer());

  int max_occupancy = 1;
  if (const auto occ = optional_integer(table, prefix, "max_occupancy")) {
    if (*occ < 1) {
      throw InvalidValue(join(prefix, "max_occupancy"), "must be a positive integer",
                         value_line(table, "max_occupancy"));
    }
    if (statistics == fock::Statistics::Fermionic && *occ != 1) {
      throw InvalidValue(join(prefix, "max_occupancy"), "must be 1 for fermionic modes",
                         value_line(table, "max_occupancy"));
    }
    max_occupancy = static_cast<int>(*occ);
  }
  const fock::ModeBasis basis(num_modes, statistics, max_occupancy);

  const toml::Value& terms = require(table, prefix, "term");
  if (!terms.is_array() || terms.as_array().empty()) {
    throw InvalidValue(join(prefix, "term"), "need at least one [[" + join(prefix, "term") + "]]",
                       terms.line());
  }

  fock::ManyBodyState::TermMap amplitudes;
  int index = 0;
  for (const toml::Value& term : terms.as_array()) {
    const std::string term_path = join(prefix, "term[" + std::to_string(index++) + "]");
    if (!term.is_table()) throw InvalidValue(term_path, "must be a table", term.line());
    reject_unknown(term, term_path, {"occupation", "amplitude"});

    const toml::Value& occ_value = require(term, term_path, "occupation");
    if (!occ_value.is_array()) {
      throw InvalidValue(term_path + ".occupation", "must be an array of integers",
                         occ_value.line());
    }
    fock::Occupation occupation;
    for (const toml::Value& entry : occ_value.as_array()) {
      if (!entry.is_integer()) {
        throw InvalidValue(term_path + ".occupation", "must be an array of integers",
                           occ_value.line());
      }
      occupation.push_back(static_cast<int>(entry.as_integer()));
    }
    try {
      basis.check_occupation(occupation);
    } catch (const Error& e) {
      throw InvalidValue(term_path + ".occupation", e.what(), occ_value.line());
    }

    const fock::Complex amplitude =
        parse_amplitude(require(term, term_path, "amplitude"), term_path + ".amplitude");
    amplitudes[occupation] += amplitude;  // repeated occupations accumulate
  }

  try {
    return fock::ManyBodyState::from_terms(basis, std::move(amplitudes));
  } catch (const Error& e) {
    throw InvalidValue(join(prefix, "term"), e.what(), terms.line());
  }
}

ExactScenario parse_exact(const toml::Value& root, const std::string& name) {
  reject_unknown(root, "", {"schema", "kind", "name", "materials", "state_a", "state_b"});

  const toml::Value* state_a = root.find("state_a");
  if (state_a == nullptr) throw MissingField("exact.state_a", root.line());
  if (!state_a->is_table()) throw InvalidValue("exact.state_a", "must be a table", state_a->line());
  const toml::Value* state_b = root.find("state_b");
  if (state_b == nullptr) throw MissingField("exact.state_b", root.line());
  if (!state_b->is_table()) throw InvalidValue("exact.state_b", "must be a table", state_b->line());

  fock::ManyBodyState a = parse_state(*state_a, "exact.state_a", false);
  fock::ManyBodyState b = parse_state(*state_b, "exact.state_b", false);
  if (!(a.basis() == b.basis())) {
    throw InvalidValue("exact.state_b", "mode basis differs from state_a", state_b->line());
  }
  return ExactScenario{name, std::move(a), std::move(b)};
}

void check_schema(const toml::Value& root) {
  const toml::Value* schema = root.find("schema");
  if (schema == nullptr) return;  // implied version 1
  if (!schema->is_integer() || schema->as_integer() != 1) {
    throw InvalidValue("schema", "this reader understands schema = 1 only", schema->line());
  }
}

}  // namespace

const std::string& scenario_name(const Scenario& scenario) {
  return std::visit([](const auto& s) -> const std::string& { return s.name; }, scenario);
}

Scenario parse_scenario(const std::string& text, const est::MaterialRegistry& registry) {
  const toml::Value root = toml::parse(text);
  check_schema(root);

  const toml::Value* kind = root.find("kind");
  if (kind == nullptr) {
    throw UnknownScenarioKind("scenario file does not say what kind it is; add kind = "
                              "\"rigid_body\", \"flux_qubit\" or \"exact\"");
  }
  if (!kind->is_string()) {
    throw UnknownScenarioKind("line " + std::to_string(kind->line()) +
                              ": 'kind' must be a string");
  }

  std::string name = kind->as_string();
  if (const auto n = optional_string(root, "", "name")) name = *n;

  est::MaterialRegistry local = registry;
  local.merge_from_value(root);

  if (kind->as_string() == "rigid_body") return parse_rigid_body(root, name, local);
  if (kind->as_string() == "flux_qubit") return parse_flux_qubit(root, name);
  if (kind->as_string() == "exact") return parse_exact(root, name);
  throw UnknownScenarioKind("line " + std::to_string(kind->line()) +
                            ": unknown scenario kind '" + kind->as_string() + "'");
}

Scenario parse_scenario(const std::string& text) {
  return parse_scenario(text, est::MaterialRegistry::from_environment());
}

fock::ManyBodyState parse_state_document(const std::string& text, const std::string& prefix) {
  const toml::Value root = toml::parse(text);
  check_schema(root);
  return parse_state(root, prefix, true);
}

ExactScenario exact_from_state_documents(const std::string& text_a, const std::string& text_b) {
  fock::ManyBodyState a = parse_state_document(text_a, "state_a");
  fock::ManyBodyState b = parse_state_document(text_b, "state_b");
  if (!(a.basis() == b.basis())) {
    throw InvalidValue("state_b", "mode basis differs from state_a");
  }
  return ExactScenario{"exact", std::move(a), std::move(b)};
}

namespace {

Report run_rigid_body(const RigidBodyScenario& scenario) {
  const est::CatSizeReport result = est::rigid_body_w(scenario.spec, scenario.config);
  return flatten(result, scenario.name, est::to_string(scenario.spec.mode));
}

Report run_flux_qubit(const FluxQubitScenario& scenario) {
  Report report;
  report.scenario = scenario.name;
  report.mode = "configured";

  if (scenario.velocity_ratio) {
    const est::CatSizeReport base =
        est::flux_qubit_w(scenario.n_electrons, *scenario.velocity_ratio);
    report = flatten(base, scenario.name, "configured");
  }

  if (scenario.gap_ratio) {
    const comp::CondensateSpec condensate{scenario.n_electrons, *scenario.gap_ratio};
    const double k = comp::com_overlap(scenario.branch_a, scenario.branch_b);
    const comp::PairReport pair = comp::w_cp(comp::condensate_pair_count(condensate), k);
    report.w_cp = pair;
    report.species.push_back(
        {"cooper_pairs", pair.n_pairs, 1.0 - pair.overlap_k, 1.0, pair.w_cp});
    report.total_w_particles += pair.w_cp;
    report.total_w_raw = 2.0 * report.total_w_particles;
    report.notes.push_back(
        "cooper_pairs row counts condensate pairs N_p = n_electrons * gap_ratio; its "
        "contribution is N_p * (1 - K) with K the modulus of the COM overlap");
    if (scenario.velocity_ratio) {
      report.notes.push_back(
          "electron-basis and pair-basis rows describe the same device under different "
          "groupings; the total adds them for reference only");
    }
  }
  return report;
}

Report run_exact(const ExactScenario& scenario) {
  Report report;
  report.scenario = scenario.name;
  report.mode = "exact";
  report.total_w_raw = fock::w_fixed_basis(scenario.state_a, scenario.state_b);
  report.total_w_particles = report.total_w_raw / 2.0;
  report.w_natural = fock::w_natural(scenario.state_a, scenario.state_b);
  report.overlap_abs = std::abs(fock::overlap(scenario.state_a, scenario.state_b));
  report.notes.push_back(
      "total_w_raw sums |<n_k>_A - <n_k>_B| over modes; total_w_particles halves it so "
      "that moving one particle counts as 1");
  report.notes.push_back(
      "w_natural is the trace norm of the one-body density matrix difference (basis-free, "
      ">= the fixed-basis value)");
  return report;
}

}  // namespace

Report run_scenario(const Scenario& scenario) {
  try {
    if (const auto* rigid = std::get_if<RigidBodyScenario>(&scenario)) {
      return run_rigid_body(*rigid);
    }
    if (const auto* qubit = std::get_if<FluxQubitScenario>(&scenario)) {
      return run_flux_qubit(*qubit);
    }
    return run_exact(std::get<ExactScenario>(scenario));
  } catch (const ScenarioError&) {
    throw;
  } catch (const Error& e) {
    throw Error("scenario '" + scenario_name(scenario) + "': " + e.what());
  }
}

}  // namespace catsize::cli
