#ifndef CATSIZE_DISTINCTNESS_HPP
#define CATSIZE_DISTINCTNESS_HPP

#include <string>

#include "catsize/errors.hpp"

namespace catsize {

// Operational resolvability gate: a displacement counts as seen if it is at
// least min_resolvable_length and happens within max_observation_time.
struct ResolutionCriterion {
  double min_resolvable_length = 1.5e-4;  // cm, unaided human eye
  double max_observation_time = 1.0;      // s

  bool operator==(const ResolutionCriterion&) const = default;
};

enum class DistinctnessCategory { Macroscopic, Mesoscopic, Unresolvable };

struct Distinctness {
  DistinctnessCategory category = DistinctnessCategory::Unresolvable;
  // Meaningful for Mesoscopic only: the smallest magnification that would
  // bring the displacement up to the resolution limit (always > 1).
  double required_magnification = 1.0;

  bool resolvable() const { return category != DistinctnessCategory::Unresolvable; }
  bool operator==(const Distinctness&) const = default;
};

const char* to_string(DistinctnessCategory category);

// Classifies a displacement observed for `duration` with the given optical
// magnification available. Thresholds are closed: a displacement exactly at
// the resolution limit counts as resolved, and an observation lasting
// exactly the time window counts as within it. A duration beyond the window
// is Unresolvable outright; velocities are not rescaled.
Distinctness classify(double displacement, double duration, double available_magnification,
                      const ResolutionCriterion& criterion = {});

}  // namespace catsize

#endif  // CATSIZE_DISTINCTNESS_HPP
