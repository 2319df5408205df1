#pragma once

#include "jch/fock.hpp"
#include "jch/model.hpp"

namespace jch {

enum class PairFamily { Psi, Phi };

/// Exact bound-pair eigenstate at energy 2*omega_a. The Phi family carries
/// the normalization Omega_j = 2 a_j^2 + 8 (lambda/kappa)^2 + 2 with a_0 = 2
/// and a_j = 1 otherwise; on a finite ring the literal staggered sum is
/// renormalized (wrap-around columns can reinforce or cancel).
struct BoundPairState {
  PairFamily family;
  int separation;
  StateVector amplitudes;     // unit norm, canonical two-excitation basis
  double omega = 0.0;         // Omega_j (Phi family; 0 for Psi)
  double amplitude_coeff = 0.0;  // a_j (Phi family)
};

/// Literal staggered sums before normalization. psi_raw_sum vanishes
/// identically at j = N/2 when N = 2 (mod 4).
Eigen::VectorXcd psi_raw_sum(const TwoExcitationBasis&, int j);
Eigen::VectorXcd phi_raw_sum(const ModelParams&, const TwoExcitationBasis&, int j);

/// |psi_j> for 1 <= j <= N/2. Requires N even and omega_a == omega_b.
BoundPairState psi_state(const ModelParams&, const TwoExcitationBasis&, int j);

/// |phi_j> for 0 <= j <= N/2 - 2. Requires N even, kappa != 0 and
/// omega_a == omega_b.
BoundPairState phi_state(const ModelParams&, const TwoExcitationBasis&, int j);

class degenerate_state_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalized (eta_j)^n |G> in the n-pair photon sector. The eigenstate
/// property holds in the lambda = 0 mode of the model; lambda != 0 raises
/// not_an_eigenstate_error. photon_cutoff must be >= 2n.
Eigen::VectorXcd eta_pairing_state(const ModelParams&, int j, int n_pairs,
                                   int photon_cutoff);

class not_an_eigenstate_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ||(H - 2 n omega_a) (eta_j)^n |G>|| with lambda = 0, photons only.
double eta_pairing_residual(const ModelParams&, int j, int n_pairs, int photon_cutoff);

/// max_v ||[eta_j, H - omega_a sum a^dag a] v|| over the two-photon basis,
/// evaluated with cutoff headroom so truncation cannot contaminate it.
double eta_commutator_residual(const ModelParams&, int j, int photon_cutoff);

struct BoseHubbardEtaReport {
  double commutator_on_vacuum;  // ||[eta_j, H_BH] |G>|| = ||H_BH eta_j |G>||
  double state_norm;            // ||eta_j |G>|| (0 in the antipodal N = 2 mod 4 case)
  double eigen_residual;        // ||H_BH v - (v^dag H_BH v) v|| for v = eta_j|G>/norm
};

BoseHubbardEtaReport bose_hubbard_eta_check(const BoseHubbardParams&, int j);

enum class Mechanism { Hubbard, JC, Mixed };

/// Applies H to the interference superposition of the given mechanism and
/// returns the amplitude left in the channel that cancels. For Mixed the
/// pair group carries weight 1/lambda and the photon-atom singlet carries
/// ratio_scale/kappa; the cancellation is exact at ratio_scale = 1 and
/// degrades linearly away from it.
double interference_residual(const ModelParams&, const TwoExcitationBasis&,
                             Mechanism, int l, int j, double ratio_scale = 1.0);

}  // namespace jch
