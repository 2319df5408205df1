#include <doctest.h>

#include <cmath>

#include "jch/exact_states.hpp"
#include "jch/spin_chain.hpp"
#include "jch/symmetry.hpp"

using namespace jch;

namespace {
double eigen_residual(const ModelParams& p, const TwoExcitationBasis& basis,
                      const Eigen::VectorXcd& v) {
  const SparseOperator h = build_hamiltonian(p, basis);
  return (h.apply(v) - 2.0 * p.omega_a * v).norm();
}
}  // namespace

TEST_CASE("psi family: eigenstates at 2 omega_a across the coupling grid") {
  const ModelParams base{8, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(base);
  for (double kap : {0.3, 0.8, 1.5}) {
    for (double lam : {0.0, 0.5, 1.1}) {
      const ModelParams p{8, 1.0, 1.0, kap, lam};
      for (int j = 1; j <= 4; ++j) {
        const BoundPairState s = psi_state(p, basis, j);
        CHECK(s.amplitudes.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(eigen_residual(p, basis, s.amplitudes.amplitudes) < 1e-12);
      }
    }
  }
}

TEST_CASE("psi family: orthonormal below the antipode") {
  const ModelParams p{8, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);
  for (int j = 1; j < 4; ++j) {
    for (int jp = 1; jp < 4; ++jp) {
      const Complex ov = psi_state(p, basis, j)
                             .amplitudes.amplitudes.dot(psi_state(p, basis, jp).amplitudes.amplitudes);
      CHECK(std::abs(ov - (j == jp ? 1.0 : 0.0)) < 1e-13);
    }
  }
}

TEST_CASE("psi at the antipodal separation: N mod 4 decides") {
  // N = 8: the staggered terms reinforce; a valid eigenstate survives
  const ModelParams p8{8, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis b8 = enumerate_basis(p8);
  const BoundPairState s = psi_state(p8, b8, 4);
  CHECK(eigen_residual(p8, b8, s.amplitudes.amplitudes) < 1e-12);

  // N = 10: the two traversals of each pair cancel identically
  const ModelParams p10{10, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis b10 = enumerate_basis(p10);
  CHECK(psi_raw_sum(b10, 5).norm() < 1e-15);
  CHECK_THROWS_AS(psi_state(p10, b10, 5), degenerate_state_error);
}

TEST_CASE("psi preconditions") {
  const ModelParams podd{7, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis b7 = enumerate_basis(podd);
  CHECK_THROWS_AS(psi_state(podd, b7, 2), degenerate_state_error);

  const ModelParams p{8, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis b8 = enumerate_basis(p);
  CHECK_THROWS_AS(psi_state(p, b8, 0), std::invalid_argument);
  CHECK_THROWS_AS(psi_state(p, b8, 5), std::invalid_argument);

  const ModelParams punequal{8, 1.0, 0.9, 1.0, 0.7};
  CHECK_THROWS_AS(psi_state(punequal, b8, 2), std::invalid_argument);
}

TEST_CASE("phi family: normalization factor and eigenstate property") {
  // Omega_0 at lambda = kappa: 2*4 + 8 + 2 = 18
  const ModelParams peq{8, 1.0, 1.0, 1.0, 1.0};
  const TwoExcitationBasis b8 = enumerate_basis(peq);
  CHECK(phi_state(peq, b8, 0).omega == doctest::Approx(18.0));
  CHECK(phi_state(peq, b8, 0).amplitude_coeff == doctest::Approx(2.0));
  CHECK(phi_state(peq, b8, 1).amplitude_coeff == doctest::Approx(1.0));

  const ModelParams p{10, 1.0, 1.0, 1.0, 0.6};
  const TwoExcitationBasis b10 = enumerate_basis(p);
  for (int j = 0; j <= 3; ++j) {
    const BoundPairState s = phi_state(p, b10, j);
    CHECK(s.amplitudes.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(eigen_residual(p, b10, s.amplitudes.amplitudes) < 1e-12);
  }

  CHECK_THROWS_AS(phi_state(p, b10, 4), std::invalid_argument);
  const ModelParams pk0{10, 1.0, 1.0, 0.0, 0.6};
  CHECK_THROWS_AS(phi_state(pk0, b10, 1), std::invalid_argument);
}

TEST_CASE("phi in the strong-coupling limit is the staggered photon-atom singlet") {
  const ModelParams p{8, 1.0, 1.0, 1.0, 100.0};
  const TwoExcitationBasis basis = enumerate_basis(p);
  const BoundPairState s = phi_state(p, basis, 1);
  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(basis.size());
  for (int l = 0; l < 8; ++l) {
    const double sg = (l % 2 == 0) ? 1.0 : -1.0;
    target[basis.photon_atom(l, l + 2)] += sg;
    target[basis.photon_atom(l + 2, l)] -= sg;
  }
  target /= target.norm();
  CHECK(std::abs(target.dot(s.amplitudes.amplitudes)) > 0.9999);
}

TEST_CASE("phi annihilated by the parity sector matching (-1)^j") {
  const ModelParams p{12, 1.0, 1.0, 1.0, 0.7};
  const SpinChainHamiltonian chain = build_h_so(p, 9);
  const ParitySplit split = split_parity(chain);
  for (int j = 0; j <= 4; ++j) {
    const double aj = (j == 0) ? 2.0 : 1.0;
    const double omega = 2 * aj * aj + 8 * std::pow(p.lambda / p.kappa, 2) + 2;
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(chain.matrix.rows());
    w[chain.site_index({j, +1})] = aj / std::sqrt(omega);
    w[chain.site_index({j, -1})] = -aj / std::sqrt(omega);
    w[chain.site_index({j + 1, 0})] =
        Complex(0.0, 2.0 * std::sqrt(2.0) * p.lambda / p.kappa / std::sqrt(omega));
    w[chain.site_index({j + 2, +1})] = -1.0 / std::sqrt(omega);
    w[chain.site_index({j + 2, -1})] = 1.0 / std::sqrt(omega);
    CHECK(w.norm() == doctest::Approx(1.0).epsilon(1e-14));
    // the full chain annihilates it, and it lives in one parity sector
    CHECK((chain.matrix * w).norm() < 1e-13);
    const auto& own = (j % 2 == 0) ? split.even_indices : split.odd_indices;
    Eigen::VectorXcd wr(static_cast<Eigen::Index>(own.size()));
    double in_sector = 0.0;
    for (std::size_t i = 0; i < own.size(); ++i) {
      wr[static_cast<Eigen::Index>(i)] = w[own[i]];
      in_sector += std::norm(w[own[i]]);
    }
    CHECK(in_sector == doctest::Approx(1.0).epsilon(1e-14));
    const Eigen::MatrixXcd& sector = (j % 2 == 0) ? split.h_even : split.h_odd;
    CHECK((sector * wr).norm() < 1e-13);
  }
}

TEST_CASE("eta pairing: eigenstates and the hopping commutator") {
  const ModelParams p{6, 1.0, 1.0, 1.0, 0.0};
  CHECK(eta_pairing_residual(p, 1, 1, 4) < 1e-12);
  CHECK(eta_pairing_residual(p, 2, 1, 4) < 1e-12);
  CHECK(eta_pairing_residual(p, 1, 2, 4) < 1e-11);
  CHECK(eta_commutator_residual(p, 1, 4) < 1e-12);
  CHECK(eta_commutator_residual(p, 2, 4) < 1e-12);

  // lambda != 0 is refused: the pairing construction needs decoupled atoms
  const ModelParams bad{6, 1.0, 1.0, 1.0, 0.3};
  CHECK_THROWS_AS(eta_pairing_state(bad, 1, 1, 4), not_an_eigenstate_error);
  CHECK_THROWS_AS(eta_pairing_state(p, 1, 2, 2), std::invalid_argument);

  // antipodal eta on N = 2 (mod 4) annihilates the vacuum
  CHECK_THROWS_AS(eta_pairing_state(p, 3, 1, 4), degenerate_state_error);
}

TEST_CASE("Bose-Hubbard eta check") {
  for (double u : {0.0, 3.0}) {
    const BoseHubbardEtaReport rep = bose_hubbard_eta_check({6, 1.0, u}, 2);
    CHECK(rep.commutator_on_vacuum < 1e-12);
    CHECK(rep.eigen_residual < 1e-12);
    CHECK(rep.state_norm > 1.0);
  }
  // antipodal j = N/2 on N = 6: eta|G> vanishes by hand enumeration
  const BoseHubbardEtaReport rep = bose_hubbard_eta_check({6, 1.0, 3.0}, 3);
  CHECK(rep.state_norm < 1e-15);
  CHECK(rep.commutator_on_vacuum < 1e-15);
}

TEST_CASE("interference mechanisms cancel exactly at the stated weights") {
  const ModelParams p{8, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);
  CHECK(interference_residual(p, basis, Mechanism::Hubbard, 1, 3) < 1e-13);
  CHECK(interference_residual(p, basis, Mechanism::JC, 1, 3) < 1e-13);
  CHECK(interference_residual(p, basis, Mechanism::Mixed, 1, 3) < 1e-13);

  // JC cancellation is a single-cavity identity: exact at kappa = 0 too
  const ModelParams pk0{8, 1.0, 1.0, 0.0, 0.7};
  CHECK(interference_residual(pk0, basis, Mechanism::JC, 1, 3) < 1e-13);

  // the mixed process needs the exact amplitude ratio
  const double detuned = interference_residual(p, basis, Mechanism::Mixed, 1, 3, 1.01);
  CHECK(detuned > 1e-4);
  // regression value computed from this implementation: the 1% detuning
  // leaves ~6.3e-3 in the cancelling channel at kappa = lambda-free scale
  CHECK(detuned == doctest::Approx(6.261179427473412e-03).epsilon(1e-6));

  CHECK_THROWS_AS(interference_residual(p, basis, Mechanism::Hubbard, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(interference_residual(pk0, basis, Mechanism::Mixed, 1, 3),
                  std::invalid_argument);
}
