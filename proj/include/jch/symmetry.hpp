#pragma once

#include <array>
#include <vector>

#include "jch/model.hpp"

namespace jch {

/// Ladder site label. Column j is the excitation separation; legs label the
/// pair content (1: photon-atom, 2: photon-photon, 3: atom-photon,
/// 4: atom-atom). Column 0 has legs 1 (photon and atom on one site, the
/// merged 1/3 leg) and 2 (double photon). On an even ring the antipodal
/// column j = N/2 is thinner: legs 1 and 3 coincide up to a phase, and legs
/// 2, 4 only exist in sectors with even momentum index.
struct LadderSite {
  int j;
  int leg;
  friend bool operator==(const LadderSite&, const LadderSite&) = default;
};

/// One translation sector. k = 2*pi*m/N; sector_basis columns are the
/// canonical-basis vectors of the ladder-labelled states (the explicit
/// center-of-mass superpositions with phase e^{ik(l + j/2)}), and
/// block = B^dag H B in that column order.
struct MomentumBlock {
  int m = 0;
  double k = 0.0;
  ModelParams params;
  Eigen::MatrixXcd block;
  Eigen::MatrixXcd sector_basis;
  std::vector<LadderSite> labels;
};

/// Unitary permutation shifting every site index by +1 mod N; T^N = 1.
SparseOperator translation_operator(const TwoExcitationBasis&);

/// Explicit sector state |j, leg, k_m>. Returns a zero vector when the state
/// vanishes identically (antipodal legs 2/4 at odd m).
Eigen::VectorXcd sector_state(const TwoExcitationBasis&, int m, int j, int leg);

/// Simultaneous block reduction of H over all translation sectors.
/// Requires ||[H, T]|| below tol (symmetry-violation error otherwise).
std::vector<MomentumBlock> momentum_sectors(const SparseOperator& h,
                                            const SparseOperator& t,
                                            const ModelParams&,
                                            const TwoExcitationBasis&,
                                            double tol = 1e-12);

/// Leg hoppings J_1..J_4 = (-k e^{ik/2}, -2k cos(k/2), -k e^{-ik/2}, 0),
/// on-site energies mu = (wa+wb, 2wa, wa+wb, 2wb), rung coupling lambda.
struct LadderParams {
  std::array<Complex, 4> leg_hopping;
  std::array<double, 4> on_site;
  double rung_coupling;
};

LadderParams ladder_params(const ModelParams&, double k);

/// Dense index of ladder site (j, leg) given the builder's layout:
/// (0,1) -> 0, (0,2) -> 1, (j,leg) -> 2 + 4(j-1) + (leg-1) for j >= 1.
Eigen::Index ladder_index(int j, int leg);

/// Analytic four-leg ladder H_k on columns 0..j_max (open truncation).
/// Hopping convention: <j+1,leg| H |j,leg> = J_leg, which is the convention
/// under which the exact sector blocks are reproduced entrywise. The column-0
/// cell carries the merged 1/3 leg, the sqrt(2) rung and the sqrt(2)-enhanced
/// leg-2 hop out of the double-photon state. rung_phase rotates the rung
/// coupling lambda -> lambda e^{i theta} (gauge-removable, flux-inert).
Eigen::MatrixXcd build_ladder_hk(const ModelParams&, double k, int j_max,
                                 double rung_phase = 0.0);

/// Gauge-invariant phase around the plaquette bounded by legs (leg, leg+1)
/// and columns (j, j+1), traversed leg-increasing then column-increasing:
/// arg( H[a,b] H[b,c] H[c,d] H[d,a] ) with a=(j,leg), b=(j,leg+1),
/// c=(j+1,leg+1), d=(j+1,leg), reduced to (-pi, pi]. Throws
/// flux_undefined_error when any link underflows (leg 4 always; leg 2 at
/// k = pi).
double plaquette_flux(const Eigen::Ref<const Eigen::MatrixXcd>& ladder,
                      int j, int leg, int j_max);

class flux_undefined_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TwoPathPhases {
  double phase_1;  // accumulated phase along path I, reduced to (-pi, pi]
  double phase_2;  // accumulated phase along path II
};

/// Follows the two operator-application sequences exchanging the photon and
/// atomic excitations of |psi(l, l+j)>. Each step propagates the two
/// interfering components individually (the cross channels belong to the
/// other path) and accumulates the phase of the common transition amplitude.
/// A vanishing or mismatched component amplitude raises path_broken_error.
TwoPathPhases two_path_interference(const ModelParams&, const TwoExcitationBasis&,
                                    int l, int j);

class path_broken_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Searches a diagonal gauge D with b ~ D a D^dag by BFS over the nonzero
/// graph of a; returns the phases and the residual max|b - D a D^dag|.
struct GaugeAlignment {
  Eigen::VectorXcd phases;
  double residual;
};

GaugeAlignment align_gauge(const Eigen::Ref<const Eigen::MatrixXcd>& a,
                           const Eigen::Ref<const Eigen::MatrixXcd>& b);

}  // namespace jch
