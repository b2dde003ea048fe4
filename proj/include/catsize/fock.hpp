#ifndef CATSIZE_FOCK_HPP
#define CATSIZE_FOCK_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "catsize/errors.hpp"

namespace catsize::fock {

using Complex = std::complex<double>;

// Occupation-number vector, one entry per mode, ordered by mode index.
using Occupation = std::vector<int>;

enum class Statistics { Fermionic, Bosonic };

// Finite set of single-particle modes with a fixed exchange statistics.
// Fermionic bases always have max_occupancy 1.
class ModeBasis {
 public:
  ModeBasis(std::size_t num_modes, Statistics statistics, int max_occupancy = 1);

  std::size_t num_modes() const { return num_modes_; }
  Statistics statistics() const { return statistics_; }
  int max_occupancy() const { return max_occupancy_; }

  bool operator==(const ModeBasis&) const = default;

  // Throws unless `occ` has one in-range entry per mode.
  void check_occupation(const Occupation& occ) const;

 private:
  std::size_t num_modes_;
  Statistics statistics_;
  int max_occupancy_;
};

// Normalized superposition of occupation-number basis states, stored as a
// sparse amplitude map. Immutable once constructed; construction always
// normalizes and rejects zero-norm input.
class ManyBodyState {
 public:
  using TermMap = std::map<Occupation, Complex>;

  const ModeBasis& basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  double norm_squared() const;

  // Normalizes `terms`; throws ZeroNorm if the norm is <= 1e-12.
  static ManyBodyState from_terms(const ModeBasis& basis, TermMap terms);

 private:
  ManyBodyState(ModeBasis basis, TermMap terms)
      : basis_(std::move(basis)), terms_(std::move(terms)) {}

  ModeBasis basis_;
  TermMap terms_;
};

// One-body reduced density matrix; entry (i, j) holds <a_i^dag a_j>.
// Hermiticity is checked at construction.
struct OneBodyRDM {
  explicit OneBodyRDM(Eigen::MatrixXcd m);

  double particle_number() const { return matrix.trace().real(); }

  Eigen::MatrixXcd matrix;
};

ManyBodyState basis_state(const ModeBasis& basis, const Occupation& occupations);

// Linear combination of states over a shared basis, renormalized.
ManyBodyState superpose(const std::vector<std::pair<Complex, ManyBodyState>>& terms);

// <n_k> as a direct weighted sum over stored amplitudes.
double occupation_expectation(const ManyBodyState& state, std::size_t mode);

// Built by applying a_i^dag a_j to each stored term, with the fermionic
// sign (-1)^(number of occupied modes below k) for operators on mode k.
OneBodyRDM one_body_rdm(const ManyBodyState& state);

// Cat size in the given mode basis: sum_k |<n_k>_A - <n_k>_B|.
// Raw convention; moving one particle to an orthogonal mode gives 2.
double w_fixed_basis(const ManyBodyState& a, const ManyBodyState& b);

// Basis-independent variant: trace norm of rdm(A) - rdm(B). Coincides with
// w_fixed_basis whenever both density matrices are diagonal in the given
// basis, and never falls below it.
double w_natural(const ManyBodyState& a, const ManyBodyState& b);

std::complex<double> overlap(const ManyBodyState& a, const ManyBodyState& b);

// Single Fock term occupying modes [shift, shift + num_particles) of a 1D
// fermionic band; the finite-size model of a filled band drifting rigidly.
ManyBodyState shifted_fermi_sea(std::size_t num_modes, std::size_t num_particles,
                                std::size_t shift);

// Applies one single-particle unitary to every mode: a_k^dag -> sum_j U_jk a_j^dag.
// Fermionic bases only; each term expands with determinant coefficients.
ManyBodyState rotate_modes(const ManyBodyState& state, const Eigen::MatrixXcd& unitary);

}  // namespace catsize::fock

#endif  // CATSIZE_FOCK_HPP
