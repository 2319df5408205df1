#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "jch/entanglement.hpp"
#include "jch/exact_states.hpp"

using namespace jch;

namespace {

// Full-tensor partial trace over everything but the atoms at (l, lp):
// amplitudes are grouped by the traced-out configuration read from an
// explicit per-site occupation decode. Test-side reference.
Eigen::Matrix4cd partial_trace_reference(const Eigen::VectorXcd& state,
                                         const TwoExcitationBasis& basis, int l, int lp) {
  const int n = basis.n_sites();
  std::map<std::vector<int>, Eigen::Vector4cd> groups;
  for (Eigen::Index i = 0; i < basis.size(); ++i) {
    if (state[i] == Complex(0.0, 0.0)) continue;
    const BasisState& s = basis.state(i);
    std::vector<int> photons(static_cast<std::size_t>(n), 0);
    std::vector<int> atoms(static_cast<std::size_t>(n), 0);
    switch (s.kind) {
      case PairKind::DoublePhoton: photons[s.site_a] = 2; break;
      case PairKind::PhotonPhoton: photons[s.site_a]++; photons[s.site_b]++; break;
      case PairKind::AtomAtom: atoms[s.site_a] = 1; atoms[s.site_b] = 1; break;
      case PairKind::PhotonAtom: photons[s.site_a]++; atoms[s.site_b] = 1; break;
    }
    const int a = atoms[static_cast<std::size_t>(l)] * 2 + atoms[static_cast<std::size_t>(lp)];
    std::vector<int> key = photons;
    for (int q = 0; q < n; ++q) {
      if (q != l && q != lp) key.push_back(atoms[static_cast<std::size_t>(q)]);
    }
    auto [it, fresh] = groups.try_emplace(key, Eigen::Vector4cd::Zero());
    it->second[a] += state[i];
  }
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (const auto& [key, w] : groups) rho += w * w.adjoint();
  return rho;
}

Eigen::VectorXcd random_state(const TwoExcitationBasis& basis, std::mt19937& rng) {
  std::normal_distribution<double> dist;
  Eigen::VectorXcd v(basis.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(dist(rng), dist(rng));
  return v / v.norm();
}

}  // namespace

TEST_CASE("reduced density: pure atomic pair, trace preservation, positivity") {
  const ModelParams p{6, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  v[basis.atom_pair(1, 4)] = 1.0;
  const TwoAtomDensity d = reduce_two_atoms(v, basis, 1, 4);
  CHECK(std::abs(d.rho(3, 3) - 1.0) < 1e-15);
  CHECK(d.rho.cwiseAbs().sum() == doctest::Approx(1.0));

  std::mt19937 rng(99);
  for (int rep = 0; rep < 5; ++rep) {
    const Eigen::VectorXcd w = random_state(basis, rng);
    const TwoAtomDensity r = reduce_two_atoms(w, basis, 0, 3);
    CHECK(std::abs(r.rho.trace() - 1.0) < 1e-13);
    CHECK((r.rho - r.rho.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r.rho);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
    CHECK((r.rho - partial_trace_reference(w, basis, 0, 3)).cwiseAbs().maxCoeff() < 1e-14);
  }

  CHECK_THROWS_AS(reduce_two_atoms(v, basis, 2, 2), std::invalid_argument);
}

TEST_CASE("reduced density of psi_j: frozen populations at N=8, j=2") {
  const ModelParams p{8, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);
  const BoundPairState psi = psi_state(p, basis, 2);
  const TwoAtomDensity d = reduce_two_atoms(psi.amplitudes.amplitudes, basis, 1, 3);
  // 1/(2N)-weighted sums from the explicit expansion: ee and the two
  // one-excited configurations each collect a single 1/16 term
  CHECK(std::abs(d.rho(0, 0) - 13.0 / 16.0) < 1e-14);
  CHECK(std::abs(d.rho(1, 1) - 1.0 / 16.0) < 1e-14);
  CHECK(std::abs(d.rho(2, 2) - 1.0 / 16.0) < 1e-14);
  CHECK(std::abs(d.rho(3, 3) - 1.0 / 16.0) < 1e-14);
  // fully diagonal: the ee component carries no photons while every gg
  // component carries two, so no coherence survives the photon trace
  Eigen::Matrix4cd offdiag = d.rho;
  offdiag.diagonal().setZero();
  CHECK(offdiag.cwiseAbs().maxCoeff() < 1e-14);
  CHECK((d.rho - partial_trace_reference(psi.amplitudes.amplitudes, basis, 1, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("concurrence: zero for the bound pairs, one for a planted singlet") {
  const ModelParams p{8, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);

  const BoundPairState phi = phi_state(p, basis, 1);
  const BoundPairState psi = psi_state(p, basis, 2);
  for (int l = 0; l < 8; ++l) {
    CHECK(concurrence(phi.amplitudes.amplitudes, basis, l, (l + 2) % 8) < 1e-12);
    CHECK(concurrence(psi.amplitudes.amplitudes, basis, l, (l + 2) % 8) < 1e-12);
  }

  // an atomic singlet dressed with a fixed photon: maximal entanglement
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  v[basis.photon_atom(5, 1)] = 1.0 / std::sqrt(2.0);
  v[basis.photon_atom(5, 3)] = -1.0 / std::sqrt(2.0);
  CHECK(concurrence(v, basis, 1, 3) == doctest::Approx(1.0));
  CHECK(concurrence_wootters(reduce_two_atoms(v, basis, 1, 3)) == doctest::Approx(1.0));
}

TEST_CASE("correlator concurrence equals the spin-flip concurrence") {
  const ModelParams p{6, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> site(0, 5);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const Eigen::VectorXcd v = random_state(basis, rng);
    int l = site(rng), lp = site(rng);
    if (l == lp) lp = (lp + 1) % 6;
    const double c1 = concurrence(v, basis, l, lp);
    const double c2 = concurrence_wootters(reduce_two_atoms(v, basis, l, lp));
    worst = std::max(worst, std::abs(c1 - c2));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("polariton components and Bell overlaps of the bound pairs") {
  const ModelParams p{8, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);

  // psi_j restricted to its pair is the Phi+ pattern (1, 0, 0, 1)/sqrt(2)
  const BoundPairState psi = psi_state(p, basis, 2);
  for (int l = 0; l < 8; ++l) {
    const PolaritonProjection proj =
        polariton_components(psi.amplitudes.amplitudes, basis, l, (l + 2) % 8);
    CHECK_FALSE(proj.degenerate);
    CHECK(proj.captured_weight == doctest::Approx(2.0 / 16.0));
    const Eigen::Vector4cd a = proj.amplitudes / proj.amplitudes.norm();
    CHECK(std::abs(a[0] - 1.0 / std::sqrt(2.0)) < 1e-13);
    CHECK(std::abs(a[3] - 1.0 / std::sqrt(2.0)) < 1e-13);
    CHECK(std::abs(a[1]) < 1e-14);
    CHECK(std::abs(a[2]) < 1e-14);
    CHECK(std::abs(bell_overlap(psi.amplitudes.amplitudes, basis, l, (l + 2) % 8,
                                BellState::PhiPlus) - 1.0) < 1e-12);
  }

  // phi_j restricted to (l, l+j+1) is the polariton singlet (0, 1, -1, 0)/sqrt(2)
  // at every coupling; Phi- catches none of it
  for (double lam : {0.7, 100.0}) {
    const ModelParams ps{8, 1.0, 1.0, 1.0, lam};
    const BoundPairState phi = phi_state(ps, basis, 1);
    const PolaritonProjection proj =
        polariton_components(phi.amplitudes.amplitudes, basis, 0, 2);
    const Eigen::Vector4cd a = proj.amplitudes / proj.amplitudes.norm();
    CHECK(std::abs(a[1] - 1.0 / std::sqrt(2.0)) < 1e-13);
    CHECK(std::abs(a[2] + 1.0 / std::sqrt(2.0)) < 1e-13);
    CHECK(std::abs(a[0]) < 1e-14);
    CHECK(std::abs(a[3]) < 1e-14);
    CHECK(std::abs(bell_overlap(phi.amplitudes.amplitudes, basis, 0, 2, BellState::PsiMinus) -
                   1.0) < 1e-12);
    CHECK(bell_overlap(phi.amplitudes.amplitudes, basis, 0, 2, BellState::PhiMinus) < 1e-12);
  }

  // distance independence: identical overlap values across admissible j
  for (int j = 1; j <= 4; ++j) {
    const BoundPairState s = psi_state(p, basis, j);
    CHECK(std::abs(bell_overlap(s.amplitudes.amplitudes, basis, 0, j, BellState::PhiPlus) -
                   1.0) < 1e-12);
  }
  for (int j = 0; j <= 2; ++j) {
    const BoundPairState s = phi_state(p, basis, j);
    CHECK(std::abs(bell_overlap(s.amplitudes.amplitudes, basis, 0, j + 1, BellState::PsiMinus) -
                   1.0) < 1e-12);
  }

  // a double-photon component alone captures nothing
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  v[basis.index({PairKind::DoublePhoton, 0, 0})] = 1.0;
  const PolaritonProjection proj = polariton_components(v, basis, 0, 3);
  CHECK(proj.degenerate);
  CHECK(proj.amplitudes.norm() == 0.0);
  CHECK_THROWS_AS(bell_overlap(v, basis, 0, 3, BellState::PhiPlus),
                  degenerate_projection_error);
}
