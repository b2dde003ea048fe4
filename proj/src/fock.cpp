#include "catsize/fock.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace catsize::fock {

namespace {

constexpr double kNormTolerance = 1e-12;

// Result of applying a ladder operator to a single occupation vector:
// the new vector and the numeric factor (sign for fermions, sqrt factor
// for bosons). A zero factor means the operator annihilated the term.
struct LadderResult {
  Occupation occ;
  double factor = 0.0;
};

double fermionic_sign(const Occupation& occ, std::size_t mode) {
  int below = 0;
  for (std::size_t j = 0; j < mode; ++j) below += occ[j];
  return (below % 2 == 0) ? 1.0 : -1.0;
}

LadderResult annihilate(const Occupation& occ, std::size_t mode, Statistics statistics) {
  LadderResult out;
  if (occ[mode] == 0) return out;
  out.occ = occ;
  out.occ[mode] -= 1;
  out.factor = statistics == Statistics::Fermionic ? fermionic_sign(occ, mode)
                                                   : std::sqrt(static_cast<double>(occ[mode]));
  return out;
}

LadderResult create(const Occupation& occ, std::size_t mode, Statistics statistics,
                    int max_occupancy) {
  LadderResult out;
  if (occ[mode] >= max_occupancy) return out;  // leaves the truncated space
  out.occ = occ;
  out.occ[mode] += 1;
  out.factor = statistics == Statistics::Fermionic
                   ? fermionic_sign(occ, mode)
                   : std::sqrt(static_cast<double>(occ[mode] + 1));
  return out;
}

}  // namespace

ModeBasis::ModeBasis(std::size_t num_modes, Statistics statistics, int max_occupancy)
    : num_modes_(num_modes), statistics_(statistics), max_occupancy_(max_occupancy) {
  if (num_modes_ < 1) throw DimensionMismatch("mode basis needs at least one mode");
  if (statistics_ == Statistics::Fermionic) {
    max_occupancy_ = 1;
  } else if (max_occupancy_ < 1) {
    throw OccupancyViolation("bosonic max_occupancy must be at least 1");
  }
}

void ModeBasis::check_occupation(const Occupation& occ) const {
  if (occ.size() != num_modes_) {
    throw DimensionMismatch("occupation vector has " + std::to_string(occ.size()) +
                            " entries, basis has " + std::to_string(num_modes_) + " modes");
  }
  for (std::size_t k = 0; k < occ.size(); ++k) {
    if (occ[k] < 0 || occ[k] > max_occupancy_) {
      throw OccupancyViolation("occupation " + std::to_string(occ[k]) + " in mode " +
                               std::to_string(k) + " exceeds max occupancy " +
                               std::to_string(max_occupancy_));
    }
  }
}

double ManyBodyState::norm_squared() const {
  double out = 0.0;
  for (const auto& [occ, amp] : terms_) out += std::norm(amp);
  return out;
}

ManyBodyState ManyBodyState::from_terms(const ModeBasis& basis, TermMap terms) {
  for (const auto& [occ, amp] : terms) basis.check_occupation(occ);
  double norm2 = 0.0;
  for (const auto& [occ, amp] : terms) norm2 += std::norm(amp);
  double norm = std::sqrt(norm2);
  if (norm <= kNormTolerance) throw ZeroNorm("superposition has zero norm");
  TermMap normalized;
  for (auto& [occ, amp] : terms) {
    Complex scaled = amp / norm;
    if (std::abs(scaled) > 1e-15) normalized.emplace(occ, scaled);
  }
  return ManyBodyState(basis, std::move(normalized));
}

OneBodyRDM::OneBodyRDM(Eigen::MatrixXcd m) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols()) {
    throw DimensionMismatch("density matrix must be square");
  }
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw Error("density matrix is not hermitian");
  }
}

ManyBodyState basis_state(const ModeBasis& basis, const Occupation& occupations) {
  basis.check_occupation(occupations);
  ManyBodyState::TermMap terms;
  terms.emplace(occupations, Complex(1.0, 0.0));
  return ManyBodyState::from_terms(basis, std::move(terms));
}

ManyBodyState superpose(const std::vector<std::pair<Complex, ManyBodyState>>& terms) {
  if (terms.empty()) throw ZeroNorm("superpose needs at least one state");
  const ModeBasis& basis = terms.front().second.basis();
  ManyBodyState::TermMap combined;
  for (const auto& [amp, state] : terms) {
    if (!(state.basis() == basis)) {
      throw BasisMismatch("superpose requires a shared mode basis");
    }
    for (const auto& [occ, c] : state.terms()) combined[occ] += amp * c;
  }
  return ManyBodyState::from_terms(basis, std::move(combined));
}

double occupation_expectation(const ManyBodyState& state, std::size_t mode) {
  if (mode >= state.basis().num_modes()) {
    throw IndexOutOfRange("mode index " + std::to_string(mode) + " out of range");
  }
  double out = 0.0;
  for (const auto& [occ, amp] : state.terms()) out += std::norm(amp) * occ[mode];
  return out;
}

OneBodyRDM one_body_rdm(const ManyBodyState& state) {
  const auto n = state.basis().num_modes();
  const auto statistics = state.basis().statistics();
  const int max_occ = state.basis().max_occupancy();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (const auto& [occ, amp] : state.terms()) {
    for (std::size_t j = 0; j < n; ++j) {
      LadderResult lowered = annihilate(occ, j, statistics);
      if (lowered.factor == 0.0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        LadderResult raised = create(lowered.occ, i, statistics, max_occ);
        if (raised.factor == 0.0) continue;
        auto bra = state.terms().find(raised.occ);
        if (bra == state.terms().end()) continue;
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) +=
            std::conj(bra->second) * lowered.factor * raised.factor * amp;
      }
    }
  }
  return OneBodyRDM(std::move(m));
}

double w_fixed_basis(const ManyBodyState& a, const ManyBodyState& b) {
  if (!(a.basis() == b.basis())) {
    throw BasisMismatch("cat size comparison requires a shared mode basis");
  }
  double w = 0.0;
  for (std::size_t k = 0; k < a.basis().num_modes(); ++k) {
    w += std::abs(occupation_expectation(a, k) - occupation_expectation(b, k));
  }
  return w;
}

double w_natural(const ManyBodyState& a, const ManyBodyState& b) {
  if (!(a.basis() == b.basis())) {
    throw BasisMismatch("cat size comparison requires a shared mode basis");
  }
  Eigen::MatrixXcd delta = one_body_rdm(a).matrix - one_body_rdm(b).matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(delta, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

std::complex<double> overlap(const ManyBodyState& a, const ManyBodyState& b) {
  if (!(a.basis() == b.basis())) {
    throw BasisMismatch("overlap requires a shared mode basis");
  }
  Complex out(0.0, 0.0);
  for (const auto& [occ, amp] : a.terms()) {
    auto it = b.terms().find(occ);
    if (it != b.terms().end()) out += std::conj(amp) * it->second;
  }
  return out;
}

ManyBodyState shifted_fermi_sea(std::size_t num_modes, std::size_t num_particles,
                                std::size_t shift) {
  if (num_particles + shift > num_modes) {
    throw DimensionMismatch("shifted sea of " + std::to_string(num_particles) +
                            " particles at shift " + std::to_string(shift) +
                            " does not fit in " + std::to_string(num_modes) + " modes");
  }
  ModeBasis basis(num_modes, Statistics::Fermionic);
  Occupation occ(num_modes, 0);
  for (std::size_t k = shift; k < shift + num_particles; ++k) occ[k] = 1;
  return basis_state(basis, occ);
}

namespace {

// det of U restricted to the given rows and columns.
Complex submatrix_determinant(const Eigen::MatrixXcd& u, const std::vector<int>& rows,
                              const std::vector<int>& cols) {
  const auto p = static_cast<Eigen::Index>(rows.size());
  if (p == 0) return Complex(1.0, 0.0);
  Eigen::MatrixXcd sub(p, p);
  for (Eigen::Index r = 0; r < p; ++r) {
    for (Eigen::Index c = 0; c < p; ++c) sub(r, c) = u(rows[r], cols[c]);
  }
  return sub.determinant();
}

std::vector<int> occupied_modes(const Occupation& occ) {
  std::vector<int> out;
  for (std::size_t k = 0; k < occ.size(); ++k) {
    if (occ[k]) out.push_back(static_cast<int>(k));
  }
  return out;
}

}  // namespace

ManyBodyState rotate_modes(const ManyBodyState& state, const Eigen::MatrixXcd& unitary) {
  const auto n = static_cast<Eigen::Index>(state.basis().num_modes());
  if (state.basis().statistics() != Statistics::Fermionic) {
    throw UnsupportedStatistics("mode rotation is implemented for fermionic bases only");
  }
  if (unitary.rows() != n || unitary.cols() != n) {
    throw DimensionMismatch("rotation matrix does not match the number of modes");
  }
  if ((unitary.adjoint() * unitary - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() >
      1e-10) {
    throw NotUnitary("rotation matrix is not unitary");
  }

  ManyBodyState::TermMap rotated;
  for (const auto& [occ, amp] : state.terms()) {
    std::vector<int> cols = occupied_modes(occ);
    const std::size_t p = cols.size();
    // Every p-subset S of modes receives amplitude det(U[S, occ]) * amp.
    std::vector<int> rows(p);
    std::iota(rows.begin(), rows.end(), 0);
    if (p == 0) {
      rotated[occ] += amp;
      continue;
    }
    for (;;) {
      Occupation target(state.basis().num_modes(), 0);
      for (int r : rows) target[static_cast<std::size_t>(r)] = 1;
      rotated[target] += amp * submatrix_determinant(unitary, rows, cols);

      // next combination in lexicographic order
      int i = static_cast<int>(p) - 1;
      while (i >= 0 && rows[static_cast<std::size_t>(i)] ==
                           static_cast<int>(n) - static_cast<int>(p) + i) {
        --i;
      }
      if (i < 0) break;
      ++rows[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < p; ++j) {
        rows[j] = rows[j - 1] + 1;
      }
    }
  }
  return ManyBodyState::from_terms(state.basis(), std::move(rotated));
}

}  // namespace catsize::fock
