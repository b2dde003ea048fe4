#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

#include "catsize/estimators.hpp"
#include "catsize/materials.hpp"

using namespace catsize;
using est::CatSizeReport;
using est::EstimateMode;
using est::EstimatorConfig;
using est::Material;
using est::NucleonTreatment;
using est::RigidBodySpec;
using est::SpeciesPopulation;

namespace {

RigidBodySpec lif_sphere(double diameter_cm, EstimateMode mode,
                         NucleonTreatment treatment = NucleonTreatment::IntranuclearNucleons) {
  RigidBodySpec spec;
  spec.material = est::lif_material();
  spec.geometry = est::SphereDiameter{diameter_cm};
  spec.displacement = diameter_cm;  // body traverses its own size
  spec.duration = 1.0;
  spec.mode = mode;
  spec.nucleon_treatment = treatment;
  return spec;
}

bool any_contains(const std::vector<std::string>& lines, const std::string& needle) {
  for (const std::string& line : lines) {
    if (line.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("estimators") {
  TEST_CASE("species contribution is count times velocity ratio") {
    CHECK(est::contribution({"electrons", 8e14, 5e-4, 3e8}) ==
          doctest::Approx(1333.3333333333333).epsilon(1e-14));
    CHECK(est::contribution({"electrons", 8e14, 0.0, 3e8}) == 0.0);
    CHECK(est::contribution({"electrons", 1e9, 5e-6, 1.0}) == 5000.0);
  }

  TEST_CASE("contribution is linear in count and shift velocity") {
    const SpeciesPopulation base{"x", 3e10, 2e-5, 7e6};
    const double w = est::contribution(base);
    SpeciesPopulation doubled = base;
    doubled.count *= 2.0;
    CHECK(est::contribution(doubled) == doctest::Approx(2.0 * w).epsilon(1e-14));
    SpeciesPopulation faster = base;
    faster.shift_velocity *= 3.0;
    CHECK(est::contribution(faster) == doctest::Approx(3.0 * w).epsilon(1e-14));
  }

  TEST_CASE("contribution guards") {
    CHECK_THROWS_AS(est::contribution({"x", 1.0, 1.0, 0.0}), NonpositiveV0);
    CHECK_THROWS_AS(est::contribution({"x", 1.0, 1.0, -1.0}), NonpositiveV0);
    CHECK_THROWS_AS(est::contribution({"x", -1.0, 1.0, 1.0}), Error);
    CHECK_THROWS_AS(est::contribution({"x", 1.0, -1.0, 1.0}), Error);
  }

  TEST_CASE("band electron velocity h/(m_e a)") {
    CHECK(est::band_electron_v0(est::lif_material()) ==
          doctest::Approx(1.8049367504842353e8).epsilon(1e-14));
    Material halved = est::lif_material();
    halved.cell_dimension_a /= 2.0;
    CHECK(est::band_electron_v0(halved) ==
          doctest::Approx(2.0 * est::band_electron_v0(est::lif_material())).epsilon(1e-14));
    // A cell of exactly h/m_e gives unit velocity.
    Material unit = est::lif_material();
    const est::PhysicalConstants constants;
    unit.cell_dimension_a = constants.planck_h / constants.electron_mass;
    CHECK(est::band_electron_v0(unit) == doctest::Approx(1.0).epsilon(1e-15));
    Material bad = est::lif_material();
    bad.cell_dimension_a = 0.0;
    CHECK_THROWS_AS(est::band_electron_v0(bad), Error);
  }

  TEST_CASE("composition of a 5 micron LiF sphere") {
    const est::Composition c =
        est::composition(est::lif_material(), est::SphereDiameter{5e-4});
    CHECK(c.formula_units == doctest::Approx(4.0039341663989375e12).epsilon(1e-13));
    CHECK(c.electron_count == doctest::Approx(4.804720999678725e13).epsilon(1e-13));
    CHECK(c.nucleon_count / c.electron_count ==
          doctest::Approx(26.0 / 12.0).epsilon(1e-14));
  }

  TEST_CASE("composition scales exactly with volume") {
    const est::Composition small =
        est::composition(est::lif_material(), est::SphereDiameter{5e-4});
    const est::Composition big =
        est::composition(est::lif_material(), est::SphereDiameter{1e-3});
    CHECK(big.electron_count == 8.0 * small.electron_count);

    // Cube with the same volume as the sphere carries identical counts.
    const double side = std::cbrt(est::volume(est::SphereDiameter{5e-4}));
    const est::Composition cube = est::composition(est::lif_material(), est::CubeSide{side});
    CHECK(cube.electron_count == doctest::Approx(small.electron_count).epsilon(1e-12));
  }

  TEST_CASE("geometry guards") {
    CHECK_THROWS_AS(est::volume(est::SphereDiameter{0.0}), Error);
    CHECK_THROWS_AS(est::volume(est::CubeSide{-1.0}), Error);
    Material bad = est::lif_material();
    bad.mass_density = 0.0;
    CHECK_THROWS_AS(est::composition(bad, est::SphereDiameter{5e-4}), Error);
  }

  TEST_CASE("rigid body, quoted-figures mode, 5 micron sphere") {
    const CatSizeReport r = est::rigid_body_w(lif_sphere(5e-4, EstimateMode::Paper));
    REQUIRE(r.per_species.size() == 2);
    CHECK(r.per_species[0].species.name == "electrons");
    CHECK(r.per_species[0].w_particles == doctest::Approx(1333.3333333333333).epsilon(1e-14));
    CHECK(r.per_species[1].species.name == "nucleons");
    CHECK(r.per_species[1].w_particles == doctest::Approx(293.33333333333337).epsilon(1e-14));
    CHECK(r.total_w_particles == doctest::Approx(1626.6666666666665).epsilon(1e-14));
    CHECK(r.total_w_raw == doctest::Approx(2.0 * 1626.6666666666665).epsilon(1e-14));
    CHECK(r.per_species[1].w_particles / r.per_species[0].w_particles ==
          doctest::Approx(0.22).epsilon(1e-14));
    REQUIRE(r.classification.has_value());
    CHECK(r.classification->category == DistinctnessCategory::Macroscopic);
    // Pinned counts disagree with the density-derived composition; say so.
    CHECK(any_contains(r.warnings, "differs from the density-derived composition"));
    CHECK(any_contains(r.warnings, "16.6503"));
    CHECK(any_contains(r.notes, "mode=paper"));
  }

  TEST_CASE("rigid body, first-principles mode, 5 micron sphere") {
    const CatSizeReport r = est::rigid_body_w(lif_sphere(5e-4, EstimateMode::FirstPrinciples));
    CHECK(r.total_w_particles == doctest::Approx(161.937638019009).epsilon(1e-13));
    CHECK(r.per_species[1].w_particles / r.per_species[0].w_particles ==
          doctest::Approx(26.0 / 12.0 / 10.0).epsilon(1e-13));
    CHECK(r.warnings.empty());
    CHECK(any_contains(r.notes, "mode=first_principles"));
    CHECK(any_contains(r.notes, "h/(m_e a)"));
  }

  TEST_CASE("rigid body, 1.5 micron sphere, both modes") {
    CHECK(est::rigid_body_w(lif_sphere(1.5e-4, EstimateMode::Paper)).total_w_particles ==
          doctest::Approx(13.175999999999995).epsilon(1e-13));
    const double fp =
        est::rigid_body_w(lif_sphere(1.5e-4, EstimateMode::FirstPrinciples)).total_w_particles;
    CHECK(fp == doctest::Approx(1.3116948679539722).epsilon(1e-13));
    CHECK(fp < 3.0);
  }

  TEST_CASE("atomic-rms nucleons dwarf everything else") {
    const CatSizeReport r =
        est::rigid_body_w(lif_sphere(5e-4, EstimateMode::Paper, NucleonTreatment::AtomicRms));
    CHECK(r.total_w_particles == doctest::Approx(2934666.6666666674).epsilon(1e-13));
    // 10x multiplier vs 1e-3 multiplier: nucleon term grows by 1e4.
    CHECK(r.per_species[1].w_particles / r.per_species[0].w_particles ==
          doctest::Approx(2200.0).epsilon(1e-12));
    CHECK(any_contains(r.notes, "rms velocity of whole atoms"));
  }

  TEST_CASE("composite nuclei, quoted-figures mode") {
    const CatSizeReport r = est::rigid_body_w(
        lif_sphere(5e-4, EstimateMode::Paper, NucleonTreatment::NucleusComposite));
    REQUIRE(r.per_species.size() == 3);  // electrons, Li, F
    CHECK(r.per_species[1].species.name == "Li");
    CHECK(r.per_species[1].species.count == doctest::Approx(66666666666666.664).epsilon(1e-14));
    CHECK(r.per_species[1].w_particles == doctest::Approx(111111.11111111111).epsilon(1e-13));
    CHECK(r.per_species[2].species.name == "F");
    CHECK(r.total_w_particles == doctest::Approx(223555.55555555556).epsilon(1e-13));
    CHECK(any_contains(r.notes, "composite nuclei"));

    Material stripped = est::lif_material();
    stripped.nuclei.clear();
    RigidBodySpec spec = lif_sphere(5e-4, EstimateMode::Paper, NucleonTreatment::NucleusComposite);
    spec.material = stripped;
    CHECK_THROWS_AS(est::rigid_body_w(spec), Error);
  }

  TEST_CASE("treatment ordering at fixed inputs") {
    const double intra =
        est::rigid_body_w(lif_sphere(5e-4, EstimateMode::Paper)).total_w_particles;
    const double rms =
        est::rigid_body_w(lif_sphere(5e-4, EstimateMode::Paper, NucleonTreatment::AtomicRms))
            .total_w_particles;
    const double composite =
        est::rigid_body_w(
            lif_sphere(5e-4, EstimateMode::Paper, NucleonTreatment::NucleusComposite))
            .total_w_particles;
    CHECK(rms > composite);
    CHECK(composite > intra);
  }

  TEST_CASE("self-traversal scales as the fourth power of the size") {
    for (const EstimateMode mode : {EstimateMode::Paper, EstimateMode::FirstPrinciples}) {
      const double w_full = est::rigid_body_w(lif_sphere(5e-4, mode)).total_w_particles;
      const double w_half = est::rigid_body_w(lif_sphere(2.5e-4, mode)).total_w_particles;
      CHECK(w_full / w_half == doctest::Approx(16.0).epsilon(1e-12));
    }
  }

  TEST_CASE("fixed displacement scales as the volume") {
    RigidBodySpec big = lif_sphere(5e-4, EstimateMode::FirstPrinciples);
    RigidBodySpec small = lif_sphere(2.5e-4, EstimateMode::FirstPrinciples);
    big.displacement = small.displacement = 1.5e-4;
    CHECK(est::rigid_body_w(big).total_w_particles /
              est::rigid_body_w(small).total_w_particles ==
          doctest::Approx(8.0).epsilon(1e-12));
  }

  TEST_CASE("totals are the species sums, raw doubles particles") {
    const CatSizeReport r = est::rigid_body_w(lif_sphere(5e-4, EstimateMode::FirstPrinciples));
    double sum = 0.0;
    for (const auto& entry : r.per_species) sum += entry.w_particles;
    CHECK(r.total_w_particles == sum);
    CHECK(r.total_w_raw == 2.0 * r.total_w_particles);
  }

  TEST_CASE("electron count override implies the quoted mode") {
    RigidBodySpec spec = lif_sphere(5e-4, EstimateMode::FirstPrinciples);
    spec.electron_count_override = 8e14;
    const CatSizeReport r = est::rigid_body_w(spec);
    CHECK(r.per_species[0].w_particles == doctest::Approx(1333.3333333333333).epsilon(1e-14));
    CHECK(any_contains(r.notes, "set by explicit override"));
  }

  TEST_CASE("rigid body guards") {
    RigidBodySpec spec = lif_sphere(5e-4, EstimateMode::Paper);
    spec.duration = 0.0;
    CHECK_THROWS_AS(est::rigid_body_w(spec), NonpositiveDuration);
    spec = lif_sphere(5e-4, EstimateMode::Paper);
    spec.displacement = -1.0;
    CHECK_THROWS_AS(est::rigid_body_w(spec), Error);
  }

  TEST_CASE("zero displacement is unresolvable but well defined") {
    RigidBodySpec spec = lif_sphere(5e-4, EstimateMode::Paper);
    spec.displacement = 0.0;
    const CatSizeReport r = est::rigid_body_w(spec);
    CHECK(r.total_w_particles == 0.0);
    REQUIRE(r.classification.has_value());
    CHECK(r.classification->category == DistinctnessCategory::Unresolvable);
  }

  TEST_CASE("flux qubit report") {
    const CatSizeReport r = est::flux_qubit_w(1e9, 5e-6);
    CHECK(r.total_w_particles == 5000.0);
    CHECK(r.total_w_raw == 10000.0);
    REQUIRE(r.per_species.size() == 1);
    CHECK(r.per_species[0].species.name == "electrons");
    CHECK_FALSE(r.classification.has_value());
    CHECK(any_contains(r.notes, "configured input"));

    CHECK(est::flux_qubit_w(1e9, 0.0).total_w_particles == 0.0);
    // Only the product matters.
    CHECK(est::flux_qubit_w(1e10, 5e-7).total_w_particles == 5000.0);

    CHECK_THROWS_AS(est::flux_qubit_w(0.0, 5e-6), Error);
    CHECK_THROWS_AS(est::flux_qubit_w(1e9, -0.1), RatioOutOfRange);
    CHECK_THROWS_AS(est::flux_qubit_w(1e9, 1.5), RatioOutOfRange);
  }

  TEST_CASE("builtin material registry") {
    const est::MaterialRegistry registry = est::MaterialRegistry::builtin();
    const Material& lif = registry.get("LiF");
    CHECK(lif.mass_density == 2.635);
    CHECK(lif.molar_mass == 25.939);
    CHECK(lif.electrons_per_formula_unit == 12);
    CHECK(lif.nucleons_per_formula_unit == 26);
    CHECK(lif.cell_dimension_a == 4.03e-8);
    REQUIRE(lif.nuclei.size() == 2);
    CHECK(lif.nuclei[0].name == "Li");
    CHECK(lif.nuclei[0].mass_number == 7);
    CHECK(lif.nuclei[1].name == "F");
    CHECK(lif.nuclei[1].mass_number == 19);
    CHECK(registry.find("unobtainium") == nullptr);
    CHECK_THROWS_AS(registry.get("unobtainium"), UnknownMaterial);
  }

  TEST_CASE("registry merge from a material table") {
    est::MaterialRegistry registry = est::MaterialRegistry::builtin();
    registry.merge_from_toml(R"(
[[materials]]
name = "NaCl"
mass_density_g_cm3 = 2.165
molar_mass_g_mol = 58.443
electrons_per_formula_unit = 28
nucleons_per_formula_unit = 58
cell_dimension_a_cm = 5.64e-8

[[materials.nucleus]]
name = "Na"
mass_number = 23
count_per_formula_unit = 1

[[materials.nucleus]]
name = "Cl"
mass_number = 35
count_per_formula_unit = 1
)");
    const Material& nacl = registry.get("NaCl");
    CHECK(nacl.molar_mass == 58.443);
    REQUIRE(nacl.nuclei.size() == 2);
    CHECK(nacl.nuclei[1].mass_number == 35);
    // The builtin entry survives the merge.
    CHECK(registry.find("LiF") != nullptr);
  }

  TEST_CASE("registry merge replaces same-name entries") {
    est::MaterialRegistry registry = est::MaterialRegistry::builtin();
    registry.merge_from_toml(R"(
[[materials]]
name = "LiF"
mass_density_g_cm3 = 3.0
molar_mass_g_mol = 25.939
electrons_per_formula_unit = 12
nucleons_per_formula_unit = 26
cell_dimension_a_cm = 4.03e-8
)");
    CHECK(registry.get("LiF").mass_density == 3.0);
    CHECK(registry.get("LiF").nuclei.empty());  // replacement, not merge
  }

  TEST_CASE("registry merge rejects malformed tables") {
    est::MaterialRegistry registry = est::MaterialRegistry::builtin();
    CHECK_THROWS_AS(registry.merge_from_toml("x = 1\n"), MissingField);
    CHECK_THROWS_AS(registry.merge_from_toml("[[materials]]\nname = \"X\"\n"), MissingField);
    CHECK_THROWS_AS(registry.merge_from_toml(R"(
[[materials]]
name = "X"
mass_density_g_cm3 = -1.0
molar_mass_g_mol = 1.0
electrons_per_formula_unit = 1
nucleons_per_formula_unit = 1
cell_dimension_a_cm = 1e-8
)"),
                    InvalidValue);
    // Nucleus mass numbers must add up to the per-formula-unit nucleon count.
    try {
      registry.merge_from_toml(R"(
[[materials]]
name = "X"
mass_density_g_cm3 = 1.0
molar_mass_g_mol = 1.0
electrons_per_formula_unit = 1
nucleons_per_formula_unit = 10
cell_dimension_a_cm = 1e-8

[[materials.nucleus]]
name = "A"
mass_number = 7
count_per_formula_unit = 1
)");
      FAIL("expected InvalidValue");
    } catch (const InvalidValue& e) {
      CHECK(std::string(e.what()).find("mass numbers sum to 7") != std::string::npos);
    }
  }

  TEST_CASE("environment variable extends the registry") {
    const std::string path = "/tmp/catsize_test_materials.toml";
    {
      std::ofstream out(path);
      out << "[[materials]]\n"
             "name = \"Cu\"\n"
             "mass_density_g_cm3 = 8.96\n"
             "molar_mass_g_mol = 63.546\n"
             "electrons_per_formula_unit = 29\n"
             "nucleons_per_formula_unit = 64\n"
             "cell_dimension_a_cm = 3.61e-8\n";
    }
    ::setenv("CATSIZE_MATERIALS", path.c_str(), 1);
    const est::MaterialRegistry registry = est::MaterialRegistry::from_environment();
    ::unsetenv("CATSIZE_MATERIALS");
    CHECK(registry.find("Cu") != nullptr);
    CHECK(registry.find("LiF") != nullptr);

    ::setenv("CATSIZE_MATERIALS", "/nonexistent/path.toml", 1);
    CHECK_THROWS_AS(est::MaterialRegistry::from_environment(), InvalidValue);
    ::unsetenv("CATSIZE_MATERIALS");
  }
}
