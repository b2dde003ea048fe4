#include "catsize/composites.hpp"

#include <cmath>

namespace catsize::comp {

namespace {

constexpr double kPi = 3.14159265358979323846;

double ring_overlap(const RingMode& a, const RingMode& b) {
  const double dl = a.angular_momentum - b.angular_momentum;
  if (dl == 0.0) return 1.0;
  // Exact zero at nonzero integer angular-momentum differences.
  if (dl == std::round(dl)) return 0.0;
  return std::abs(std::sin(kPi * dl) / (kPi * dl));
}

double gaussian_overlap(const GaussianPacket& a, const GaussianPacket& b) {
  if (a.width <= 0.0 || b.width <= 0.0) {
    throw Error("gaussian packet width must be positive");
  }
  if (a.width != b.width) {
    throw ModelMismatch("gaussian overlap supports equal widths only");
  }
  const double sigma = a.width;
  const double d = a.center - b.center;
  const double dk = a.mean_wavenumber - b.mean_wavenumber;
  return std::exp(-d * d / (8.0 * sigma * sigma)) * std::exp(-sigma * sigma * dk * dk / 2.0);
}

}  // namespace

double condensate_pair_count(const CondensateSpec& spec) {
  if (spec.n_electrons <= 0.0) throw Error("condensate electron count must be positive");
  if (spec.gap_ratio <= 0.0 || spec.gap_ratio >= 1.0) {
    throw GapRatioOutOfRange("gap_ratio must be in (0, 1)");
  }
  return spec.n_electrons * spec.gap_ratio;
}

double com_overlap(const COMWavefunction& a, const COMWavefunction& b) {
  if (const auto* ra = std::get_if<RingMode>(&a)) {
    const auto* rb = std::get_if<RingMode>(&b);
    if (rb == nullptr) throw ModelMismatch("cannot overlap a ring mode with a gaussian packet");
    return ring_overlap(*ra, *rb);
  }
  const auto& ga = std::get<GaussianPacket>(a);
  const auto* gb = std::get_if<GaussianPacket>(&b);
  if (gb == nullptr) throw ModelMismatch("cannot overlap a gaussian packet with a ring mode");
  return gaussian_overlap(ga, *gb);
}

PairReport w_cp(double n_pairs, double overlap_k) {
  if (n_pairs < 0.0) throw Error("pair count must be nonnegative");
  if (overlap_k < 0.0 || overlap_k > 1.0) {
    throw OverlapOutOfRange("overlap K must be in [0, 1]");
  }
  return {n_pairs, overlap_k, n_pairs * (1.0 - overlap_k)};
}

namespace {

std::vector<est::SpeciesPopulation> regroup_nuclei(
    const std::vector<est::SpeciesPopulation>& species, const Nuclei& grouping) {
  if (grouping.material.nuclei.empty()) {
    throw InapplicableGrouping("material '" + grouping.material.name +
                               "' has no nucleus breakdown");
  }
  if (grouping.nucleus_v0 <= 0.0) throw NonpositiveV0("nucleus v0 must be positive");

  std::vector<est::SpeciesPopulation> out;
  bool applied = false;
  for (const est::SpeciesPopulation& s : species) {
    if (s.name != "nucleons") {
      out.push_back(s);
      continue;
    }
    applied = true;
    const double formula_units = s.count / grouping.material.nucleons_per_formula_unit;
    for (const est::NucleusKind& nucleus : grouping.material.nuclei) {
      out.push_back({nucleus.name, formula_units * nucleus.count_per_formula_unit,
                     s.shift_velocity, grouping.nucleus_v0});
    }
  }
  if (!species.empty() && !applied) {
    throw InapplicableGrouping("no 'nucleons' species to regroup into nuclei");
  }
  return out;
}

std::vector<est::SpeciesPopulation> regroup_cooper_pairs(
    const std::vector<est::SpeciesPopulation>& species, const CooperPairs& grouping) {
  const double k = com_overlap(grouping.branch_a, grouping.branch_b);
  std::vector<est::SpeciesPopulation> out;
  bool applied = false;
  for (const est::SpeciesPopulation& s : species) {
    if (s.name != "electrons") {
      out.push_back(s);
      continue;
    }
    applied = true;
    // Pair count from the electron population actually present; the (1 - K)
    // suppression rides along as the velocity ratio so that contribution()
    // evaluates to N_p * (1 - K).
    const double n_pairs =
        condensate_pair_count({s.count, grouping.condensate.gap_ratio});
    out.push_back({"cooper_pairs", n_pairs, 1.0 - k, 1.0});
  }
  if (!species.empty() && !applied) {
    throw InapplicableGrouping("no 'electrons' species to regroup into cooper pairs");
  }
  return out;
}

}  // namespace

std::vector<est::SpeciesPopulation> regroup(const std::vector<est::SpeciesPopulation>& species,
                                            const Grouping& grouping) {
  if (std::holds_alternative<FreeNucleons>(grouping)) return species;
  if (const auto* nuclei = std::get_if<Nuclei>(&grouping)) {
    return regroup_nuclei(species, *nuclei);
  }
  return regroup_cooper_pairs(species, std::get<CooperPairs>(grouping));
}

}  // namespace catsize::comp
