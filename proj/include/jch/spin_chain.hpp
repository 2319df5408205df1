#pragma once

#include <vector>

#include "jch/symmetry.hpp"

namespace jch {

/// Spin-1 matrices in the {+, 0, -} ordering, plus the two bond projections
/// appearing in the chain: S_x(1 - S_z^2) couples {+,-} to 0 on its column
/// side, S_x S_z^2 couples 0 to {+,-}.
struct Spin1Operators {
  Eigen::Matrix3d sx;
  Eigen::Matrix3d sz;
  Eigen::Matrix3d sx_to_zero() const;   // S_x (1 - S_z^2)
  Eigen::Matrix3d sx_to_pm() const;     // S_x S_z^2
};

Spin1Operators spin1_operators();

/// Chain site (j, polarization). Site 0 carries only {+, -}.
struct SpinSite {
  int j;
  int pol;  // +1, 0, -1
  friend bool operator==(const SpinSite&, const SpinSite&) = default;
};

/// Parity (-1)^(j + S_z + 1) of a chain state.
int spin_parity(const SpinSite&);

/// The spin-orbit chain: i*kappa S_x bonds (sqrt(2)-enhanced towards site 0,
/// where only the S_x(1-S_z^2) part survives), 2*lambda S_z on-site
/// (sqrt(2) lambda at site 0), open truncation at j_max. Energies are
/// measured relative to 2*omega_a.
struct SpinChainHamiltonian {
  int j_max;
  Eigen::MatrixXcd matrix;
  std::vector<SpinSite> sites;
  std::vector<int> parity;  // per basis state

  Eigen::Index site_index(const SpinSite&) const;
};

SpinChainHamiltonian build_h_so(const ModelParams&, int j_max);

/// Restrictions of the chain to the two parity sectors. embed(h_odd) and
/// embed(h_even) act on disjoint supports; their direct sum reproduces the
/// chain up to the stored index permutations.
struct ParitySplit {
  Eigen::MatrixXcd h_odd;   // Pi = -1
  Eigen::MatrixXcd h_even;  // Pi = +1
  std::vector<Eigen::Index> odd_indices;
  std::vector<Eigen::Index> even_indices;
};

ParitySplit split_parity(const SpinChainHamiltonian&, double cross_tol = 1e-13);

class decomposition_violated_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Label of one column of the pi-sector spin transformation.
struct SpinBasisLabel {
  enum class Kind { Spin, ZeroMode, AntipodalSpin, AntipodalZeroMode, AntipodalMerged };
  Kind kind;
  int j;
  int pol;  // polarization for Spin / AntipodalSpin / AntipodalMerged(0)
};

/// Unitary (within the pi sector) rotating the ladder-labelled sector basis
/// into {|j,+/0/->} ∪ {|psi_j>} ∪ antipodal states. Column order: spin sites
/// by j then {+,0,-}; antipodal column states; zero modes |psi_j> ascending.
/// Requires k = pi and omega_a == omega_b (unsupported-regime error
/// otherwise: the leg on-site energies would differ and the diagonal could
/// not be dropped).
struct SpinBasisMap {
  Eigen::MatrixXcd unitary;
  std::vector<SpinBasisLabel> labels;
  std::vector<Eigen::Index> spin_columns;       // interior + site 0 chain states
  std::vector<Eigen::Index> antipodal_columns;  // far-end states of the finite ring
  std::vector<Eigen::Index> zero_mode_columns;  // the |psi_j> family
};

SpinBasisMap ladder_to_spin_basis(const MomentumBlock& pi_block);

class unsupported_regime_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jch
