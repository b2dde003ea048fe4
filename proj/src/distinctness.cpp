#include "catsize/distinctness.hpp"

namespace catsize {

const char* to_string(DistinctnessCategory category) {
  switch (category) {
    case DistinctnessCategory::Macroscopic: return "macroscopic";
    case DistinctnessCategory::Mesoscopic: return "mesoscopic";
    case DistinctnessCategory::Unresolvable: return "unresolvable";
  }
  return "unresolvable";
}

Distinctness classify(double displacement, double duration, double available_magnification,
                      const ResolutionCriterion& criterion) {
  if (duration <= 0.0) throw NonpositiveDuration("observation duration must be positive");
  if (displacement < 0.0) throw Error("displacement must be nonnegative");
  if (available_magnification < 1.0) {
    throw Error("available magnification must be at least 1");
  }

  if (duration > criterion.max_observation_time || displacement <= 0.0) {
    return {DistinctnessCategory::Unresolvable, 1.0};
  }
  if (displacement >= criterion.min_resolvable_length) {
    return {DistinctnessCategory::Macroscopic, 1.0};
  }
  // Same comparison the unaided branch would see after scaling by M, so
  // classify(d, t, M) resolves exactly when classify(d*M, t, 1) does.
  if (displacement * available_magnification >= criterion.min_resolvable_length) {
    return {DistinctnessCategory::Mesoscopic, criterion.min_resolvable_length / displacement};
  }
  return {DistinctnessCategory::Unresolvable, 1.0};
}

}  // namespace catsize
