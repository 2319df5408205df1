#pragma once

#include "jch/model.hpp"

namespace jch {

/// Reduced state of the atoms at sites (l, lp) in the {gg, ge, eg, ee}
/// ordering, photons and all other atoms traced out.
struct TwoAtomDensity {
  Eigen::Matrix4cd rho;
  int site_l;
  int site_lp;
};

TwoAtomDensity reduce_two_atoms(const Eigen::VectorXcd& state,
                                const TwoExcitationBasis&, int l, int lp);

/// z = <sigma+_l sigma-_lp>, u_pm = <(1 +- sigma^z_l)(1 +- sigma^z_lp)>/4.
struct CorrelatorSet {
  Complex z;
  double u_plus;
  double u_minus;
};

CorrelatorSet atomic_correlators(const Eigen::VectorXcd& state,
                                 const TwoExcitationBasis&, int l, int lp);

/// Two-atom concurrence 2 max(0, |z| - sqrt(u+ u-)) from the correlators.
double concurrence(const Eigen::VectorXcd& state, const TwoExcitationBasis&,
                   int l, int lp);

/// General mixed-state concurrence of a two-qubit density matrix via the
/// spin-flipped eigenvalue construction; cross-validates the correlator
/// formula on the symmetric states this model produces.
double concurrence_wootters(const TwoAtomDensity&);

/// Amplitudes of the state on the polariton products at (l, lp), order
/// (uu, ud, du, dd) with |down> = (i|1> - |e>)/sqrt(2),
/// |up> = (i|1> + |e>)/sqrt(2). captured_weight is the norm^2 of the
/// single-excitation-each sector at the two sites; amplitudes carry the
/// convention that the first nonzero one is real positive. Zero captured
/// weight returns zero amplitudes (degenerate-projection case).
struct PolaritonProjection {
  Eigen::Vector4cd amplitudes;
  double captured_weight;
  bool degenerate;  // true when nothing was captured
};

PolaritonProjection polariton_components(const Eigen::VectorXcd& state,
                                         const TwoExcitationBasis&, int l, int lp);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Squared normalized overlap of the captured polariton sector with the
/// chosen Bell state (Phi_pm = (uu pm dd)/sqrt2, Psi_pm = (ud pm du)/sqrt2).
double bell_overlap(const Eigen::VectorXcd& state, const TwoExcitationBasis&,
                    int l, int lp, BellState which);

class degenerate_projection_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jch
