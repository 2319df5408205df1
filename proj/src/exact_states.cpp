#include "jch/exact_states.hpp"

#include <cmath>

namespace jch {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

void require_even_ring(const ModelParams& p, const char* who) {
  if (p.n_sites % 2 != 0) {
    throw degenerate_state_error(std::string(who) +
                                 ": the staggered phase (-1)^l needs an even ring");
  }
}

void require_equal_frequencies(const ModelParams& p, const char* who) {
  if (std::abs(p.omega_a - p.omega_b) > 1e-14) {
    throw std::invalid_argument(std::string(who) +
                                ": requires omega_a == omega_b (the photon-pair and "
                                "atom-pair components must be degenerate)");
  }
}
}  // namespace

Eigen::VectorXcd psi_raw_sum(const TwoExcitationBasis& basis, int j) {
  const int n = basis.n_sites();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  for (int l = 0; l < n; ++l) {
    const double s = (l % 2 == 0) ? 1.0 : -1.0;
    v[basis.photon_pair(l, l + j)] += s;
    v[basis.atom_pair(l, l + j)] -= s;
  }
  return v / std::sqrt(2.0 * n);
}

Eigen::VectorXcd phi_raw_sum(const ModelParams& p, const TwoExcitationBasis& basis,
                             int j) {
  const int n = basis.n_sites();
  const double aj = (j == 0) ? 2.0 : 1.0;
  const double ratio = 2.0 * p.lambda / p.kappa;
  const double omega = 2 * aj * aj + 8 * std::pow(p.lambda / p.kappa, 2) + 2;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  for (int l = 0; l < n; ++l) {
    const double s = (l % 2 == 0) ? 1.0 : -1.0;
    if (j == 0) {
      v[basis.index({PairKind::DoublePhoton, l, l})] += s * aj * kSqrt2;
    } else {
      v[basis.photon_pair(l, l + j)] += s * aj;
      v[basis.atom_pair(l, l + j)] += s * aj;
    }
    v[basis.photon_atom(l, l + j + 1)] -= s * ratio;
    v[basis.photon_atom(l + j + 1, l)] += s * ratio;
    v[basis.photon_pair(l, l + j + 2)] += s;
    v[basis.atom_pair(l, l + j + 2)] += s;
  }
  return v / std::sqrt(n * omega);
}

BoundPairState psi_state(const ModelParams& p, const TwoExcitationBasis& basis, int j) {
  require_even_ring(p, "psi_state");
  require_equal_frequencies(p, "psi_state");
  const int n = basis.n_sites();
  if (j < 1 || j > n / 2) {
    throw std::invalid_argument("psi_state: separation must satisfy 1 <= j <= N/2");
  }
  Eigen::VectorXcd v = psi_raw_sum(basis, j);
  const double nrm = v.norm();
  if (nrm < 1e-12) {
    throw degenerate_state_error(
        "psi_state: the staggered sum cancels identically at the antipodal "
        "separation on rings with N = 2 (mod 4)");
  }
  return {PairFamily::Psi, j, {v / nrm, basis.tag()}, 0.0, 0.0};
}

BoundPairState phi_state(const ModelParams& p, const TwoExcitationBasis& basis, int j) {
  require_even_ring(p, "phi_state");
  require_equal_frequencies(p, "phi_state");
  if (p.kappa == 0.0) {
    throw std::invalid_argument("phi_state: undefined at kappa = 0 (lambda/kappa ratio)");
  }
  const int n = basis.n_sites();
  if (j < 0 || j > n / 2 - 2) {
    throw std::invalid_argument("phi_state: separation must satisfy 0 <= j <= N/2 - 2");
  }
  const double aj = (j == 0) ? 2.0 : 1.0;
  const double omega = 2 * aj * aj + 8 * std::pow(p.lambda / p.kappa, 2) + 2;
  Eigen::VectorXcd v = phi_raw_sum(p, basis, j);
  const double nrm = v.norm();
  if (nrm < 1e-12) {
    throw degenerate_state_error("phi_state: the staggered sum cancels identically");
  }
  return {PairFamily::Phi, j, {v / nrm, basis.tag()}, omega, aj};
}

namespace {
PhotonFockBasis pair_sector(const ModelParams& p, int pairs, int cutoff) {
  return PhotonFockBasis(p.n_sites, 2 * pairs, cutoff);
}
}  // namespace

Eigen::VectorXcd eta_pairing_state(const ModelParams& p, int j, int n_pairs,
                                   int photon_cutoff) {
  require_even_ring(p, "eta_pairing_state");
  if (p.lambda != 0.0) {
    throw not_an_eigenstate_error(
        "eta_pairing_state: (eta_j)^n |G> is an eigenstate only with the JC "
        "coupling switched off (lambda = 0)");
  }
  if (n_pairs < 1) throw std::invalid_argument("eta_pairing_state: n_pairs must be >= 1");
  if (photon_cutoff < 2 * n_pairs) {
    throw std::invalid_argument("eta_pairing_state: photon_cutoff must be >= 2 n_pairs");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (int step = 0; step < n_pairs; ++step) {
    const PhotonFockBasis from = pair_sector(p, step, photon_cutoff);
    const PhotonFockBasis to = pair_sector(p, step + 1, photon_cutoff);
    v = apply_eta(from, to, j, v);
  }
  const double nrm = v.norm();
  if (nrm < 1e-12) {
    throw degenerate_state_error(
        "eta_pairing_state: (eta_j)^n |G> vanishes (antipodal separation on a "
        "ring with N = 2 mod 4)");
  }
  return v / nrm;
}

double eta_pairing_residual(const ModelParams& p, int j, int n_pairs,
                            int photon_cutoff) {
  const Eigen::VectorXcd v = eta_pairing_state(p, j, n_pairs, photon_cutoff);
  const PhotonFockBasis sector = pair_sector(p, n_pairs, photon_cutoff);
  const SparseOperator hop = photon_hopping(sector, p.kappa);
  const double e = 2.0 * n_pairs * p.omega_a;
  // photons only at lambda = 0: H = omega_a * n + hopping
  Eigen::VectorXcd hv = hop.apply(v) + p.omega_a * 2.0 * n_pairs * v;
  return (hv - e * v).norm();
}

double eta_commutator_residual(const ModelParams& p, int j, int photon_cutoff) {
  require_even_ring(p, "eta_commutator_residual");
  if (photon_cutoff < 4) {
    throw std::invalid_argument(
        "eta_commutator_residual: cutoff must leave headroom (>= 4) so the "
        "commutator on the two-photon sector is exact");
  }
  const PhotonFockBasis two = pair_sector(p, 1, photon_cutoff);
  const PhotonFockBasis four = pair_sector(p, 2, photon_cutoff);
  const SparseOperator hop2 = photon_hopping(two, p.kappa);
  const SparseOperator hop4 = photon_hopping(four, p.kappa);
  // H - omega_a sum a^dag a is just the hopping on a fixed-number sector.
  double worst = 0.0;
  for (Eigen::Index i = 0; i < two.size(); ++i) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(two.size());
    e[i] = 1.0;
    const Eigen::VectorXcd lhs = apply_eta(two, four, j, hop2.apply(e));
    const Eigen::VectorXcd rhs = hop4.apply(apply_eta(two, four, j, e));
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

BoseHubbardEtaReport bose_hubbard_eta_check(const BoseHubbardParams& p, int j) {
  if (p.n_sites % 2 != 0) {
    throw degenerate_state_error("bose_hubbard_eta_check: requires an even ring");
  }
  const PhotonFockBasis vac(p.n_sites, 0, 2);
  const PhotonFockBasis two(p.n_sites, 2, 2);
  const SparseOperator h = bose_hubbard_hamiltonian(p, two);
  const Eigen::VectorXcd g = Eigen::VectorXcd::Ones(1);
  const Eigen::VectorXcd ev = apply_eta(vac, two, j, g);

  BoseHubbardEtaReport rep{};
  rep.state_norm = ev.norm();
  // H_BH |G> = 0, so [eta_j, H_BH]|G> = -H_BH eta_j |G>.
  rep.commutator_on_vacuum = h.apply(ev).norm();
  if (rep.state_norm > 1e-12) {
    const Eigen::VectorXcd v = ev / rep.state_norm;
    const Complex energy = v.dot(h.apply(v));
    rep.eigen_residual = (h.apply(v) - energy * v).norm();
  } else {
    rep.eigen_residual = 0.0;
  }
  return rep;
}

double interference_residual(const ModelParams& p, const TwoExcitationBasis& basis,
                             Mechanism mech, int l, int j, double ratio_scale) {
  const int n = basis.n_sites();
  const SparseOperator h = build_hamiltonian(p, basis);
  Eigen::VectorXcd src = Eigen::VectorXcd::Zero(basis.size());
  Eigen::VectorXcd tgt = Eigen::VectorXcd::Zero(basis.size());

  switch (mech) {
    case Mechanism::Hubbard: {
      if (j < 2 || j > n - 3) {
        throw std::invalid_argument("interference_residual: Hubbard needs 2 <= j <= N-3");
      }
      src[basis.photon_pair(l, l + j)] += 1.0;
      src[basis.photon_pair(l + 1, l + j + 1)] -= 1.0;
      tgt[basis.photon_pair(l + 1, l + j)] += 1.0;
      tgt[basis.photon_pair(l, l + j + 1)] += 1.0;
      break;
    }
    case Mechanism::JC: {
      if (j < 1 || j > n - 1) {
        throw std::invalid_argument("interference_residual: JC needs 1 <= j <= N-1");
      }
      src[basis.photon_atom(l + j, l)] += 1.0;  // |e>_l |1>_{l+j}
      src[basis.photon_atom(l, l + j)] -= 1.0;  // |1>_l |e>_{l+j}
      tgt[basis.photon_pair(l, l + j)] += 1.0;  // the |1,1> channel both feed
      break;
    }
    case Mechanism::Mixed: {
      if (p.lambda == 0.0 || p.kappa == 0.0) {
        throw std::invalid_argument("interference_residual: Mixed needs kappa, lambda != 0");
      }
      if (j < 1 || j > n - 3) {
        throw std::invalid_argument("interference_residual: Mixed needs 1 <= j <= N-3");
      }
      // pair group at 1/lambda; photon-atom component at ratio_scale/kappa.
      // The destructive superposition of the two listed transition rows.
      src[basis.atom_pair(l, l + j)] += 1.0 / p.lambda;
      src[basis.photon_pair(l, l + j + 2)] += 1.0 / p.lambda;
      src[basis.photon_atom(l + j + 1, l)] += ratio_scale / p.kappa;
      tgt[basis.photon_atom(l + j, l)] += 1.0;
      tgt[basis.photon_atom(l + j + 2, l)] += 1.0;
      break;
    }
  }
  src /= src.norm();
  tgt /= tgt.norm();
  return std::abs(tgt.dot(h.apply(src)));
}

}  // namespace jch
