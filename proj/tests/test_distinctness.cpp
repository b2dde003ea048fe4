#include <doctest.h>

#include <algorithm>
#include <random>

#include "catsize/distinctness.hpp"

using namespace catsize;

namespace {

int rank(DistinctnessCategory c) {
  switch (c) {
    case DistinctnessCategory::Macroscopic: return 2;
    case DistinctnessCategory::Mesoscopic: return 1;
    case DistinctnessCategory::Unresolvable: return 0;
  }
  return 0;
}

}  // namespace

TEST_SUITE("distinctness") {
  TEST_CASE("worked examples") {
    const Distinctness eye = classify(5e-4, 1.0, 1.0);
    CHECK(eye.category == DistinctnessCategory::Macroscopic);
    CHECK(eye.required_magnification == 1.0);

    CHECK(classify(0.0, 1.0, 1.0).category == DistinctnessCategory::Unresolvable);

    const Distinctness aided = classify(0.5e-4, 1.0, 10.0);
    CHECK(aided.category == DistinctnessCategory::Mesoscopic);
    CHECK(aided.required_magnification == doctest::Approx(3.0).epsilon(1e-12));
  }

  TEST_CASE("thresholds are closed") {
    const ResolutionCriterion c;
    CHECK(classify(c.min_resolvable_length, 1.0, 1.0).category ==
          DistinctnessCategory::Macroscopic);
    CHECK(classify(c.min_resolvable_length, c.max_observation_time, 1.0).resolvable());
    // Just under the length limit with no optics: unresolvable.
    CHECK(classify(c.min_resolvable_length * (1.0 - 1e-12), 1.0, 1.0).category ==
          DistinctnessCategory::Unresolvable);
    // Magnified displacement exactly at the limit counts.
    CHECK(classify(c.min_resolvable_length / 2.0, 1.0, 2.0).category ==
          DistinctnessCategory::Mesoscopic);
  }

  TEST_CASE("slow traversals fail outright no matter the distance") {
    CHECK(classify(100.0, 1.5, 1.0).category == DistinctnessCategory::Unresolvable);
    CHECK(classify(100.0, 1.5, 1e6).category == DistinctnessCategory::Unresolvable);
    // Exactly at the window still counts.
    CHECK(classify(100.0, 1.0, 1.0).category == DistinctnessCategory::Macroscopic);
  }

  TEST_CASE("custom criteria move both gates") {
    const ResolutionCriterion strict{1e-2, 0.5};
    CHECK(classify(5e-4, 0.4, 1.0, strict).category == DistinctnessCategory::Unresolvable);
    CHECK(classify(2e-2, 0.4, 1.0, strict).category == DistinctnessCategory::Macroscopic);
    CHECK(classify(5e-4, 0.6, 100.0, strict).category == DistinctnessCategory::Unresolvable);
    const Distinctness d = classify(5e-3, 0.5, 10.0, strict);
    CHECK(d.category == DistinctnessCategory::Mesoscopic);
    CHECK(d.required_magnification == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("required magnification restores the unaided threshold") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(1e-8, 1.4e-4);
    const ResolutionCriterion c;
    for (int trial = 0; trial < 200; ++trial) {
      const double d = dist(rng);
      const Distinctness out = classify(d, 1.0, 1e12);
      REQUIRE(out.category == DistinctnessCategory::Mesoscopic);
      CHECK(out.required_magnification > 1.0);
      CHECK(d * out.required_magnification >= c.min_resolvable_length * (1.0 - 1e-12));
      // d * (min/d) can round one ulp below min, so bracket the threshold.
      CHECK(classify(d, 1.0, out.required_magnification * (1.0 + 1e-9)).resolvable());
      CHECK_FALSE(classify(d, 1.0, std::max(1.0, out.required_magnification * (1.0 - 1e-9)))
                      .resolvable());
    }
  }

  TEST_CASE("more displacement never demotes the outcome") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> dist(0.0, 5e-4);
    std::uniform_real_distribution<double> mag(1.0, 50.0);
    for (int trial = 0; trial < 500; ++trial) {
      double lo = dist(rng);
      double hi = dist(rng);
      if (lo > hi) std::swap(lo, hi);
      const double m = mag(rng);
      CHECK(rank(classify(hi, 1.0, m).category) >= rank(classify(lo, 1.0, m).category));
    }
  }

  TEST_CASE("magnified and pre-scaled runs agree on resolvability") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dist(1e-9, 1e-3);
    std::uniform_real_distribution<double> mag(1.0, 1e4);
    for (int trial = 0; trial < 500; ++trial) {
      const double d = dist(rng);
      const double m = mag(rng);
      CHECK(classify(d, 1.0, m).resolvable() == classify(d * m, 1.0, 1.0).resolvable());
    }
  }

  TEST_CASE("input guards") {
    CHECK_THROWS_AS(classify(1e-4, 0.0, 1.0), NonpositiveDuration);
    CHECK_THROWS_AS(classify(1e-4, -1.0, 1.0), NonpositiveDuration);
    CHECK_THROWS_AS(classify(-1e-4, 1.0, 1.0), Error);
    CHECK_THROWS_AS(classify(1e-4, 1.0, 0.5), Error);
  }

  TEST_CASE("category names") {
    CHECK(std::string(to_string(DistinctnessCategory::Macroscopic)) == "macroscopic");
    CHECK(std::string(to_string(DistinctnessCategory::Mesoscopic)) == "mesoscopic");
    CHECK(std::string(to_string(DistinctnessCategory::Unresolvable)) == "unresolvable");
  }
}
