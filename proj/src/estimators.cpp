#include "catsize/estimators.hpp"

#include <cmath>
#include <cstdio>

namespace catsize::est {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string format_quantity(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void check_species(const SpeciesPopulation& species) {
  if (species.characteristic_velocity <= 0.0) {
    throw NonpositiveV0("species '" + species.name + "': characteristic velocity must be positive");
  }
  if (species.count < 0.0) {
    throw Error("species '" + species.name + "': count must be nonnegative");
  }
  if (species.shift_velocity < 0.0) {
    throw Error("species '" + species.name + "': shift velocity must be nonnegative");
  }
}

}  // namespace

double volume(const Geometry& geometry) {
  if (const auto* sphere = std::get_if<SphereDiameter>(&geometry)) {
    if (sphere->value <= 0.0) throw Error("sphere diameter must be positive");
    return kPi / 6.0 * sphere->value * sphere->value * sphere->value;
  }
  const auto& cube = std::get<CubeSide>(geometry);
  if (cube.value <= 0.0) throw Error("cube side must be positive");
  return cube.value * cube.value * cube.value;
}

const char* to_string(NucleonTreatment treatment) {
  switch (treatment) {
    case NucleonTreatment::IntranuclearNucleons: return "intranuclear";
    case NucleonTreatment::AtomicRms: return "atomic_rms";
    case NucleonTreatment::NucleusComposite: return "nucleus_composite";
  }
  return "intranuclear";
}

const char* to_string(EstimateMode mode) {
  return mode == EstimateMode::Paper ? "paper" : "first_principles";
}

double contribution(const SpeciesPopulation& species) {
  check_species(species);
  return species.count * species.shift_velocity / species.characteristic_velocity;
}

double band_electron_v0(const Material& material, const PhysicalConstants& constants) {
  if (material.cell_dimension_a <= 0.0) {
    throw Error("material '" + material.name + "': unit cell dimension must be positive");
  }
  return constants.planck_h / (constants.electron_mass * material.cell_dimension_a);
}

Composition composition(const Material& material, const Geometry& geometry,
                        const PhysicalConstants& constants) {
  if (material.mass_density <= 0.0 || material.molar_mass <= 0.0) {
    throw Error("material '" + material.name + "': density and molar mass must be positive");
  }
  Composition out;
  out.formula_units =
      volume(geometry) * material.mass_density / material.molar_mass * constants.avogadro;
  out.electron_count = out.formula_units * material.electrons_per_formula_unit;
  out.nucleon_count = out.formula_units * material.nucleons_per_formula_unit;
  return out;
}

CatSizeReport rigid_body_w(const RigidBodySpec& spec, const EstimatorConfig& config) {
  if (spec.duration <= 0.0) throw NonpositiveDuration("traversal duration must be positive");
  if (spec.displacement < 0.0) throw Error("displacement must be nonnegative");

  const double shift_velocity = spec.displacement / spec.duration;
  const bool quoted_mode = spec.mode == EstimateMode::Paper || spec.electron_count_override;

  CatSizeReport report;
  const Composition derived = composition(spec.material, spec.geometry, config.constants);

  double electron_count = 0.0;
  double electron_v0 = 0.0;
  double nucleon_count = 0.0;
  if (quoted_mode) {
    const double reference_volume =
        volume(SphereDiameter{config.quoted.reference_diameter});
    const double scaled_reference =
        config.quoted.electron_count_reference * volume(spec.geometry) / reference_volume;
    electron_count = spec.electron_count_override.value_or(scaled_reference);
    electron_v0 = config.quoted.electron_v0;
    nucleon_count = config.quoted.nucleon_count_ratio * electron_count;
    report.notes.push_back(
        "mode=paper: electron count " + format_quantity(electron_count) +
        (spec.electron_count_override
             ? " set by explicit override"
             : " scaled from the quoted reference " +
                   format_quantity(config.quoted.electron_count_reference) + " at " +
                   format_quantity(config.quoted.reference_diameter) + " cm diameter") +
        ", electron v0 pinned to " + format_quantity(electron_v0) +
        " cm/s, nucleon/electron ratio " + format_quantity(config.quoted.nucleon_count_ratio));
    if (std::abs(electron_count - derived.electron_count) > 0.01 * derived.electron_count) {
      report.warnings.push_back(
          "pinned electron count " + format_quantity(electron_count) +
          " differs from the density-derived composition " +
          format_quantity(derived.electron_count) + " by a factor " +
          format_quantity(electron_count / derived.electron_count) +
          "; rerun in first_principles mode for the derived numbers");
    }
  } else {
    electron_count = derived.electron_count;
    electron_v0 = band_electron_v0(spec.material, config.constants);
    nucleon_count = derived.nucleon_count;
    report.notes.push_back("mode=first_principles: composition from material data (" +
                           format_quantity(derived.formula_units) +
                           " formula units), electron v0 = h/(m_e a) = " +
                           format_quantity(electron_v0) + " cm/s");
  }

  auto add_species = [&](SpeciesPopulation species) {
    SpeciesContribution entry{std::move(species), 0.0};
    entry.w_particles = contribution(entry.species);
    report.per_species.push_back(std::move(entry));
  };

  add_species({"electrons", electron_count, shift_velocity, electron_v0});

  switch (spec.nucleon_treatment) {
    case NucleonTreatment::IntranuclearNucleons:
      add_species({"nucleons", nucleon_count, shift_velocity,
                   config.intranuclear_v0_multiplier * electron_v0});
      report.notes.push_back("nucleon v0 = " + format_quantity(config.intranuclear_v0_multiplier) +
                             " x electron v0 (rms velocity of nucleons inside the nucleus)");
      break;
    case NucleonTreatment::AtomicRms:
      add_species({"nucleons", nucleon_count, shift_velocity,
                   config.atomic_rms_v0_multiplier * electron_v0});
      report.notes.push_back("nucleon v0 = " + format_quantity(config.atomic_rms_v0_multiplier) +
                             " x electron v0 (rms velocity of whole atoms)");
      break;
    case NucleonTreatment::NucleusComposite: {
      if (spec.material.nuclei.empty()) {
        throw Error("material '" + spec.material.name +
                    "' has no nucleus breakdown; nucleus_composite treatment needs one");
      }
      // Nuclei move with the body; their characteristic velocity is the
      // atomic rms one. Formula-unit count follows the electron count so
      // that the pinned and derived modes stay self-consistent.
      const double formula_units = electron_count / spec.material.electrons_per_formula_unit;
      const double nucleus_v0 = config.atomic_rms_v0_multiplier * electron_v0;
      for (const NucleusKind& nucleus : spec.material.nuclei) {
        add_species({nucleus.name, formula_units * nucleus.count_per_formula_unit,
                     shift_velocity, nucleus_v0});
      }
      report.notes.push_back("nucleons grouped into composite nuclei at v0 = " +
                             format_quantity(config.atomic_rms_v0_multiplier) + " x electron v0");
      break;
    }
  }

  for (const SpeciesContribution& entry : report.per_species) {
    report.total_w_particles += entry.w_particles;
  }
  report.total_w_raw = 2.0 * report.total_w_particles;
  report.classification = classify(spec.displacement, spec.duration,
                                   config.available_magnification, config.criterion);
  return report;
}

CatSizeReport flux_qubit_w(double n_electrons, double velocity_ratio) {
  if (n_electrons <= 0.0) throw Error("flux qubit electron count must be positive");
  if (velocity_ratio < 0.0 || velocity_ratio > 1.0) {
    throw RatioOutOfRange("velocity_ratio must be in [0, 1]");
  }

  CatSizeReport report;
  // Only the ratio v/v0 is specified for the circulating electrons, so the
  // species row stores the ratio directly with v0 normalized to 1.
  SpeciesContribution entry{{"electrons", n_electrons, velocity_ratio, 1.0}, 0.0};
  entry.w_particles = contribution(entry.species);
  report.per_species.push_back(std::move(entry));
  report.total_w_particles = report.per_species.front().w_particles;
  report.total_w_raw = 2.0 * report.total_w_particles;
  report.classification = std::nullopt;  // no spatial displacement to resolve
  report.notes.push_back("velocity_ratio " + format_quantity(velocity_ratio) +
                         " is a configured input (v/v0 as a single number); shift_velocity "
                         "holds the ratio and characteristic_velocity is normalized to 1");
  return report;
}

}  // namespace catsize::est
