#include <doctest.h>

#include <cmath>

#include "jch/linalg.hpp"
#include "jch/spin_chain.hpp"

using namespace jch;

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

SpinBasisMap pi_map(const ModelParams& p, MomentumBlock& out_block) {
  const TwoExcitationBasis basis = enumerate_basis(p);
  const SparseOperator h = build_hamiltonian(p, basis);
  const SparseOperator t = translation_operator(basis);
  auto blocks = momentum_sectors(h, t, p, basis);
  out_block = blocks[static_cast<std::size_t>(p.n_sites / 2)];
  return ladder_to_spin_basis(out_block);
}
}  // namespace

TEST_CASE("spin-1 matrices") {
  const Spin1Operators ops = spin1_operators();
  Eigen::Matrix3d sx_expected;
  sx_expected << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  sx_expected /= kSqrt2;
  CHECK((ops.sx - sx_expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK(ops.sz.diagonal() == Eigen::Vector3d(1, 0, -1));
  // bond projections: +- -> 0 and 0 -> +-
  CHECK(ops.sx_to_zero()(0, 1) == doctest::Approx(1 / kSqrt2));
  CHECK(ops.sx_to_zero()(0, 0) == 0.0);
  CHECK(ops.sx_to_pm()(1, 0) == doctest::Approx(1 / kSqrt2));
  CHECK(ops.sx_to_pm()(1, 1) == 0.0);
  CHECK((ops.sx_to_zero() + ops.sx_to_pm() - ops.sx).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("parity labels") {
  CHECK(spin_parity({0, +1}) == +1);
  CHECK(spin_parity({0, -1}) == +1);
  CHECK(spin_parity({1, 0}) == +1);
  CHECK(spin_parity({1, +1}) == -1);
  CHECK(spin_parity({2, 0}) == -1);
  CHECK(spin_parity({2, -1}) == +1);
}

TEST_CASE("H_SO structure: on-site blocks and bond masks") {
  const ModelParams p{10, 1.0, 1.0, 0.8, 0.45};
  const SpinChainHamiltonian chain = build_h_so(p, 4);
  CHECK(chain.matrix.rows() == 2 + 3 * 4);
  CHECK((chain.matrix - chain.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-15);

  // site-0 block diag(sqrt2 lambda, -sqrt2 lambda); site-1 diag(2l, 0, -2l)
  CHECK(chain.matrix(chain.site_index({0, +1}), chain.site_index({0, +1})).real() ==
        doctest::Approx(kSqrt2 * 0.45));
  CHECK(chain.matrix(chain.site_index({0, -1}), chain.site_index({0, -1})).real() ==
        doctest::Approx(-kSqrt2 * 0.45));
  CHECK(chain.matrix(chain.site_index({1, +1}), chain.site_index({1, +1})).real() ==
        doctest::Approx(2 * 0.45));
  CHECK(chain.matrix(chain.site_index({1, 0}), chain.site_index({1, 0})).real() == 0.0);
  CHECK(chain.matrix(chain.site_index({1, -1}), chain.site_index({1, -1})).real() ==
        doctest::Approx(-2 * 0.45));

  // the 0-1 bond is sqrt(2)-enhanced and couples only +- to 0
  CHECK(chain.matrix(chain.site_index({0, +1}), chain.site_index({1, 0})) ==
        Complex(0.0, 0.8));
  CHECK(std::abs(chain.matrix(chain.site_index({0, +1}), chain.site_index({1, +1}))) == 0.0);
  // interior bonds are i kappa S_x
  CHECK(chain.matrix(chain.site_index({1, +1}), chain.site_index({2, 0})) ==
        Complex(0.0, 0.8 / kSqrt2));
  CHECK(chain.matrix(chain.site_index({1, 0}), chain.site_index({2, -1})) ==
        Complex(0.0, 0.8 / kSqrt2));

  // every hopping term flips the spin index; every on-site term is diagonal
  for (std::size_t r = 0; r < chain.sites.size(); ++r) {
    for (std::size_t c = 0; c < chain.sites.size(); ++c) {
      const Complex v = chain.matrix(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      if (v == Complex(0.0, 0.0)) continue;
      if (chain.sites[r].j == chain.sites[c].j) {
        CHECK(chain.sites[r].pol == chain.sites[c].pol);  // S_z type
        CHECK(v.imag() == 0.0);
      } else {
        CHECK(chain.sites[r].pol != chain.sites[c].pol);  // S_x type
        CHECK(v.real() == 0.0);
      }
    }
  }

  CHECK_THROWS_AS(build_h_so(p, 1), std::invalid_argument);
}

TEST_CASE("parity split: disjoint sectors reassemble the chain") {
  const ModelParams p{10, 1.0, 1.0, 0.8, 0.45};
  const SpinChainHamiltonian chain = build_h_so(p, 5);
  const ParitySplit split = split_parity(chain);

  // site 0 lives in the even sector
  const Eigen::Index i0 = chain.site_index({0, +1});
  CHECK(std::find(split.even_indices.begin(), split.even_indices.end(), i0) !=
        split.even_indices.end());

  // spectra of the halves pool to the spectrum of the chain
  std::vector<double> pooled;
  const Spectrum so = eig_hermitian(split.h_odd);
  const Spectrum se = eig_hermitian(split.h_even);
  pooled.insert(pooled.end(), so.values.begin(), so.values.end());
  pooled.insert(pooled.end(), se.values.begin(), se.values.end());
  Eigen::VectorXd pv =
      Eigen::Map<Eigen::VectorXd>(pooled.data(), static_cast<Eigen::Index>(pooled.size()));
  CHECK(multiset_equal(eig_hermitian(chain.matrix).values, pv, 1e-12).equal);

  // embedded commutator vanishes
  const Eigen::Index d = chain.matrix.rows();
  Eigen::MatrixXcd eo = Eigen::MatrixXcd::Zero(d, d), ee = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t r = 0; r < split.odd_indices.size(); ++r) {
    for (std::size_t c = 0; c < split.odd_indices.size(); ++c) {
      eo(split.odd_indices[r], split.odd_indices[c]) =
          split.h_odd(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  for (std::size_t r = 0; r < split.even_indices.size(); ++r) {
    for (std::size_t c = 0; c < split.even_indices.size(); ++c) {
      ee(split.even_indices[r], split.even_indices[c]) =
          split.h_even(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  CHECK((eo * ee - ee * eo).norm() < 1e-13);
  CHECK((eo + ee - chain.matrix).cwiseAbs().maxCoeff() < 1e-15);

  // the parity operator commutes with the chain
  Eigen::MatrixXcd pi_op = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 0; i < chain.sites.size(); ++i) {
    pi_op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = chain.parity[i];
  }
  CHECK((pi_op * chain.matrix - chain.matrix * pi_op).cwiseAbs().maxCoeff() < 1e-13);

  // a cross-parity perturbation trips the guard
  SpinChainHamiltonian broken = chain;
  broken.matrix(chain.site_index({1, +1}), chain.site_index({1, 0})) = 1e-6;
  broken.matrix(chain.site_index({1, 0}), chain.site_index({1, +1})) = 1e-6;
  CHECK_THROWS_AS(split_parity(broken), decomposition_violated_error);
}

TEST_CASE("pi-sector rotates onto the spin chain plus zero modes") {
  for (int n : {8, 10}) {
    const ModelParams p{n, 1.0, 1.0, 0.7, 0.4};
    MomentumBlock blk;
    const SpinBasisMap map = pi_map(p, blk);

    const Eigen::Index dim = blk.block.rows();
    CHECK((map.unitary.adjoint() * map.unitary - Eigen::MatrixXcd::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() < 1e-13);

    const Eigen::MatrixXcd m =
        map.unitary.adjoint() *
        (blk.block - 2.0 * p.omega_a * Eigen::MatrixXcd::Identity(dim, dim)) * map.unitary;

    // |psi_j> rows and columns vanish: the zero modes decouple entirely
    for (Eigen::Index c : map.zero_mode_columns) {
      CHECK(m.row(c).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(m.col(c).cwiseAbs().maxCoeff() < 1e-12);
    }

    // interior chain states reproduce build_h_so entrywise
    const SpinChainHamiltonian chain = build_h_so(p, n / 2 - 1);
    double worst = 0.0;
    for (Eigen::Index a : map.spin_columns) {
      for (Eigen::Index b : map.spin_columns) {
        const SpinBasisLabel& la = map.labels[static_cast<std::size_t>(a)];
        const SpinBasisLabel& lb = map.labels[static_cast<std::size_t>(b)];
        worst = std::max(worst, std::abs(m(a, b) - chain.matrix(chain.site_index({la.j, la.pol}),
                                                                chain.site_index({lb.j, lb.pol}))));
      }
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("|0,+-> are the equal-weight mixtures of the two column-0 states") {
  const ModelParams p{8, 1.0, 1.0, 0.7, 0.4};
  MomentumBlock blk;
  const SpinBasisMap map = pi_map(p, blk);
  // columns 0 and 1 of the sector basis are (0,1) and (0,2)
  REQUIRE(blk.labels[0] == LadderSite{0, 1});
  REQUIRE(blk.labels[1] == LadderSite{0, 2});
  const Eigen::VectorXcd plus = map.unitary.col(0);
  CHECK(std::abs(plus[0] - 1.0 / kSqrt2) < 1e-15);
  CHECK(std::abs(plus[1] - 1.0 / kSqrt2) < 1e-15);
  const Eigen::VectorXcd minus = map.unitary.col(1);
  CHECK(std::abs(minus[0] - 1.0 / kSqrt2) < 1e-15);
  CHECK(std::abs(minus[1] + 1.0 / kSqrt2) < 1e-15);
}

TEST_CASE("unequal frequencies are refused") {
  const ModelParams p{8, 1.0, 0.9, 0.7, 0.4};
  const TwoExcitationBasis basis = enumerate_basis(p);
  const SparseOperator h = build_hamiltonian(p, basis);
  const SparseOperator t = translation_operator(basis);
  auto blocks = momentum_sectors(h, t, p, basis);
  CHECK_THROWS_AS(ladder_to_spin_basis(blocks[4]), unsupported_regime_error);
  // and a non-pi block is refused outright
  CHECK_THROWS_AS(ladder_to_spin_basis(blocks[1]), unsupported_regime_error);
}
