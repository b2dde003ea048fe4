#ifndef CATSIZE_COMPOSITES_HPP
#define CATSIZE_COMPOSITES_HPP

#include <variant>
#include <vector>

#include "catsize/errors.hpp"
#include "catsize/estimators.hpp"

namespace catsize::comp {

// BCS condensate description: the pair count is the macroscopic eigenvalue
// of the two-particle reduced density matrix, approximately N * (gap / Fermi energy).
struct CondensateSpec {
  double n_electrons = 0.0;
  double gap_ratio = 0.0;  // gap / Fermi energy, in (0, 1)

  bool operator==(const CondensateSpec&) const = default;
};

// Stand-in models for the pair center-of-mass wavefunction. Both are
// explicitly models: a plane wave on a ring parameterized by (possibly
// non-integer) angular momentum, and a displaced Gaussian packet.
struct RingMode {
  double angular_momentum = 0.0;  // units of hbar

  bool operator==(const RingMode&) const = default;
};

struct GaussianPacket {
  double center = 0.0;           // cm
  double mean_wavenumber = 0.0;  // 1/cm
  double width = 0.0;            // cm, position-space standard deviation

  bool operator==(const GaussianPacket&) const = default;
};

using COMWavefunction = std::variant<RingMode, GaussianPacket>;

struct PairReport {
  double n_pairs = 0.0;
  double overlap_k = 0.0;  // in [0, 1]
  double w_cp = 0.0;       // n_pairs * (1 - overlap_k)

  bool operator==(const PairReport&) const = default;
};

double condensate_pair_count(const CondensateSpec& spec);

// |<a|b>| for two wavefunctions of the same model family. RingMode gives
// |sin(pi dl) / (pi dl)| (exactly 0 at nonzero integer dl, 1 at dl = 0);
// equal-width Gaussians give exp(-d^2/(8 s^2)) * exp(-s^2 dk^2 / 2).
double com_overlap(const COMWavefunction& a, const COMWavefunction& b);

PairReport w_cp(double n_pairs, double overlap_k);

// Regrouping descriptions. Nuclei folds species named "nucleons" into one
// species per nucleus kind of the material; CooperPairs replaces species
// named "electrons" by a condensate pair species whose (1 - K) suppression
// is carried as the velocity ratio.
struct FreeNucleons {};
struct Nuclei {
  est::Material material;
  double nucleus_v0 = 0.0;  // cm/s, the atomic-rms characteristic velocity
};
struct CooperPairs {
  CondensateSpec condensate;
  COMWavefunction branch_a;
  COMWavefunction branch_b;
};
using Grouping = std::variant<FreeNucleons, Nuclei, CooperPairs>;

std::vector<est::SpeciesPopulation> regroup(const std::vector<est::SpeciesPopulation>& species,
                                            const Grouping& grouping);

}  // namespace catsize::comp

#endif  // CATSIZE_COMPOSITES_HPP
