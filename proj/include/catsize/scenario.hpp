#ifndef CATSIZE_SCENARIO_HPP
#define CATSIZE_SCENARIO_HPP

#include <optional>
#include <string>
#include <variant>

#include "catsize/composites.hpp"
#include "catsize/estimators.hpp"
#include "catsize/fock.hpp"
#include "catsize/materials.hpp"
#include "catsize/report.hpp"

namespace catsize::cli {

// Fully validated scenario descriptions. Parsing either yields one of these
// with every nested invariant already checked, or throws a ScenarioError
// pointing at the offending line; nothing partially valid gets out.

struct RigidBodyScenario {
  std::string name;
  est::RigidBodySpec spec;       // material resolved, lengths in cm
  est::EstimatorConfig config;   // criterion overrides already applied
};

struct FluxQubitScenario {
  std::string name;
  double n_electrons = 0.0;
  // Electron-basis part: W = n_electrons * velocity_ratio.
  std::optional<double> velocity_ratio;
  // Pair-basis part: W_CP = N_p (1 - K) with N_p = n_electrons * gap_ratio.
  std::optional<double> gap_ratio;
  comp::COMWavefunction branch_a = comp::RingMode{0.5};
  comp::COMWavefunction branch_b = comp::RingMode{-0.5};
};

struct ExactScenario {
  std::string name;
  fock::ManyBodyState state_a;
  fock::ManyBodyState state_b;
};

using Scenario = std::variant<RigidBodyScenario, FluxQubitScenario, ExactScenario>;

const std::string& scenario_name(const Scenario& scenario);

// Parses and validates one scenario document. Material names resolve
// against `registry` plus any [[materials]] entries embedded in the
// document itself. The single-argument form uses the built-in table plus
// the optional CATSIZE_MATERIALS file.
Scenario parse_scenario(const std::string& text, const est::MaterialRegistry& registry);
Scenario parse_scenario(const std::string& text);

// Parses a standalone state document (statistics / num_modes /
// max_occupancy / [[term]]); `prefix` anchors error paths ("state_a", ...).
fock::ManyBodyState parse_state_document(const std::string& text, const std::string& prefix);

// Builds the exact-comparison scenario for two standalone state documents;
// both must describe the same mode basis.
ExactScenario exact_from_state_documents(const std::string& text_a, const std::string& text_b);

Report run_scenario(const Scenario& scenario);

}  // namespace catsize::cli

#endif  // CATSIZE_SCENARIO_HPP
