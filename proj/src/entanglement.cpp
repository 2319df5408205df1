#include "jch/entanglement.hpp"

#include <array>
#include <cmath>
#include <map>

namespace jch {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

// Photon content (at most two occupied slots, sorted) and the atom bits away
// from the probed pair; matching keys are the configurations that survive
// the trace.
struct RestKey {
  int photon_a;
  int photon_b;
  std::uint64_t other_atoms;
  friend auto operator<=>(const RestKey&, const RestKey&) = default;
};

struct Decoded {
  RestKey rest;
  int atomic;  // index into {gg, ge, eg, ee} at (l, lp)
};

Decoded decode(const BasisState& s, int l, int lp) {
  int pa = -1, pb = -1;
  std::uint64_t atoms = 0;
  switch (s.kind) {
    case PairKind::DoublePhoton: pa = s.site_a; pb = s.site_a; break;
    case PairKind::PhotonPhoton: pa = s.site_a; pb = s.site_b; break;
    case PairKind::AtomAtom:
      atoms = (1ull << s.site_a) | (1ull << s.site_b);
      break;
    case PairKind::PhotonAtom:
      pa = s.site_a;
      atoms = 1ull << s.site_b;
      break;
  }
  const int at_l = (atoms >> l) & 1u;
  const int at_lp = (atoms >> lp) & 1u;
  atoms &= ~((1ull << l) | (1ull << lp));
  return {{pa, pb, atoms}, at_l * 2 + at_lp};
}
}  // namespace

TwoAtomDensity reduce_two_atoms(const Eigen::VectorXcd& state,
                                const TwoExcitationBasis& basis, int l, int lp) {
  if (state.size() != basis.size()) {
    throw std::invalid_argument("reduce_two_atoms: dimension mismatch");
  }
  if (l == lp) throw std::invalid_argument("reduce_two_atoms: sites must differ");
  if (l < 0 || l >= basis.n_sites() || lp < 0 || lp >= basis.n_sites()) {
    throw std::invalid_argument("reduce_two_atoms: site out of range");
  }
  std::map<RestKey, Eigen::Vector4cd> buckets;
  for (Eigen::Index i = 0; i < basis.size(); ++i) {
    if (state[i] == Complex(0.0, 0.0)) continue;
    const Decoded d = decode(basis.state(i), l, lp);
    auto [it, inserted] = buckets.try_emplace(d.rest, Eigen::Vector4cd::Zero());
    it->second[d.atomic] += state[i];
  }
  TwoAtomDensity out{Eigen::Matrix4cd::Zero(), l, lp};
  for (const auto& [key, w] : buckets) out.rho += w * w.adjoint();
  return out;
}

CorrelatorSet atomic_correlators(const Eigen::VectorXcd& state,
                                 const TwoExcitationBasis& basis, int l, int lp) {
  const TwoAtomDensity d = reduce_two_atoms(state, basis, l, lp);
  return {d.rho(2, 1), d.rho(3, 3).real(), d.rho(0, 0).real()};
}

double concurrence(const Eigen::VectorXcd& state, const TwoExcitationBasis& basis,
                   int l, int lp) {
  const CorrelatorSet c = atomic_correlators(state, basis, l, lp);
  return 2.0 * std::max(0.0, std::abs(c.z) -
                                 std::sqrt(std::max(c.u_plus, 0.0) *
                                           std::max(c.u_minus, 0.0)));
}

double concurrence_wootters(const TwoAtomDensity& d) {
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  // sigma_y x sigma_y in the {gg, ge, eg, ee} ordering
  yy(0, 3) = -1;
  yy(1, 2) = 1;
  yy(2, 1) = 1;
  yy(3, 0) = -1;
  const Eigen::Matrix4cd flipped = yy * d.rho.conjugate() * yy;
  const Eigen::Matrix4cd r = d.rho * flipped;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(r, false);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i) {
    lam[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, solver.eigenvalues()[i].real()));
  }
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

PolaritonProjection polariton_components(const Eigen::VectorXcd& state,
                                         const TwoExcitationBasis& basis, int l,
                                         int lp) {
  if (state.size() != basis.size()) {
    throw std::invalid_argument("polariton_components: dimension mismatch");
  }
  if (l == lp) throw std::invalid_argument("polariton_components: sites must differ");
  // single-excitation-each sector at (l, lp), product order (11, 1e, e1, ee)
  Eigen::Vector4cd prod;
  prod << state[basis.photon_pair(l, lp)], state[basis.photon_atom(l, lp)],
      state[basis.photon_atom(lp, l)], state[basis.atom_pair(l, lp)];

  PolaritonProjection out{};
  out.captured_weight = prod.squaredNorm();
  if (out.captured_weight < 1e-24) {
    out.amplitudes.setZero();
    out.degenerate = true;
    return out;
  }
  const Complex i1(0.0, 1.0);
  const Eigen::Vector2cd up(i1 / kSqrt2, 1.0 / kSqrt2);   // (|1>, |e>) coords
  const Eigen::Vector2cd down(i1 / kSqrt2, -1.0 / kSqrt2);
  const std::array<Eigen::Vector2cd, 2> pol{up, down};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Eigen::Vector4cd basis_vec;
      basis_vec << pol[a][0] * pol[b][0], pol[a][0] * pol[b][1],
          pol[a][1] * pol[b][0], pol[a][1] * pol[b][1];
      out.amplitudes[a * 2 + b] = basis_vec.dot(prod);
    }
  }
  // fix the global phase: first nonzero amplitude real positive
  const double top = out.amplitudes.cwiseAbs().maxCoeff();
  for (int i = 0; i < 4; ++i) {
    if (std::abs(out.amplitudes[i]) > 1e-12 * top) {
      const Complex ph = std::conj(out.amplitudes[i]) / std::abs(out.amplitudes[i]);
      out.amplitudes *= ph;
      break;
    }
  }
  out.degenerate = false;
  return out;
}

double bell_overlap(const Eigen::VectorXcd& state, const TwoExcitationBasis& basis,
                    int l, int lp, BellState which) {
  const PolaritonProjection proj = polariton_components(state, basis, l, lp);
  if (proj.degenerate) {
    throw degenerate_projection_error("bell_overlap: zero captured weight at the site pair");
  }
  Eigen::Vector4cd bell = Eigen::Vector4cd::Zero();
  switch (which) {  // order (uu, ud, du, dd)
    case BellState::PhiPlus: bell << 1, 0, 0, 1; break;
    case BellState::PhiMinus: bell << 1, 0, 0, -1; break;
    case BellState::PsiPlus: bell << 0, 1, 1, 0; break;
    case BellState::PsiMinus: bell << 0, 1, -1, 0; break;
  }
  bell /= kSqrt2;
  const Eigen::Vector4cd v = proj.amplitudes / proj.amplitudes.norm();
  return std::norm(bell.dot(v));
}

}  // namespace jch
