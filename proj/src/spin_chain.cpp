#include "jch/spin_chain.hpp"

#include <cmath>
#include <numbers>

namespace jch {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

int pol_row(int pol) { return 1 - pol; }  // +1 -> 0, 0 -> 1, -1 -> 2
}  // namespace

Spin1Operators spin1_operators() {
  Spin1Operators ops;
  ops.sx << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  ops.sx /= kSqrt2;
  ops.sz << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  return ops;
}

Eigen::Matrix3d Spin1Operators::sx_to_zero() const {
  return sx * (Eigen::Matrix3d::Identity() - sz * sz);
}

Eigen::Matrix3d Spin1Operators::sx_to_pm() const { return sx * sz * sz; }

int spin_parity(const SpinSite& s) {
  return ((s.j + s.pol + 1) % 2 == 0) ? +1 : -1;
}

Eigen::Index SpinChainHamiltonian::site_index(const SpinSite& s) const {
  if (s.j == 0) {
    if (s.pol == +1) return 0;
    if (s.pol == -1) return 1;
    throw std::invalid_argument("site 0 carries polarizations +1 and -1 only");
  }
  return 2 + 3 * static_cast<Eigen::Index>(s.j - 1) + pol_row(s.pol);
}

SpinChainHamiltonian build_h_so(const ModelParams& p, int j_max) {
  if (j_max < 2) throw std::invalid_argument("build_h_so: j_max must be >= 2");
  SpinChainHamiltonian chain;
  chain.j_max = j_max;
  chain.sites = {{0, +1}, {0, -1}};
  for (int j = 1; j <= j_max; ++j) {
    chain.sites.push_back({j, +1});
    chain.sites.push_back({j, 0});
    chain.sites.push_back({j, -1});
  }
  const Eigen::Index dim = static_cast<Eigen::Index>(chain.sites.size());
  chain.matrix = Eigen::MatrixXcd::Zero(dim, dim);
  chain.parity.reserve(chain.sites.size());
  for (const auto& s : chain.sites) chain.parity.push_back(spin_parity(s));

  const Spin1Operators ops = spin1_operators();
  auto idx = [&](int j, int pol) { return chain.site_index({j, pol}); };

  // on-site S_z terms: sqrt(2) lambda at site 0, 2 lambda elsewhere
  chain.matrix(idx(0, +1), idx(0, +1)) = kSqrt2 * p.lambda;
  chain.matrix(idx(0, -1), idx(0, -1)) = -kSqrt2 * p.lambda;
  for (int j = 1; j <= j_max; ++j) {
    for (int pol : {+1, 0, -1}) {
      chain.matrix(idx(j, pol), idx(j, pol)) = 2.0 * p.lambda * pol;
    }
  }

  // bonds: <j, a| H |j+1, b> = i kappa (S_x)_{ab}, with the sqrt(2)-enhanced
  // S_x(1 - S_z^2) structure on the 0-1 bond
  const Complex ik(0.0, p.kappa);
  const Eigen::Matrix3d b0 = kSqrt2 * ops.sx_to_zero();
  for (int a : {+1, -1}) {
    for (int b : {+1, 0, -1}) {
      const Complex v = ik * b0(pol_row(a), pol_row(b));
      if (v != Complex(0.0, 0.0)) {
        chain.matrix(idx(0, a), idx(1, b)) += v;
        chain.matrix(idx(1, b), idx(0, a)) += std::conj(v);
      }
    }
  }
  for (int j = 1; j < j_max; ++j) {
    for (int a : {+1, 0, -1}) {
      for (int b : {+1, 0, -1}) {
        const Complex v = ik * ops.sx(pol_row(a), pol_row(b));
        if (v != Complex(0.0, 0.0)) {
          chain.matrix(idx(j, a), idx(j + 1, b)) += v;
          chain.matrix(idx(j + 1, b), idx(j, a)) += std::conj(v);
        }
      }
    }
  }
  return chain;
}

ParitySplit split_parity(const SpinChainHamiltonian& chain, double cross_tol) {
  ParitySplit out;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(chain.sites.size()); ++i) {
    (chain.parity[static_cast<std::size_t>(i)] < 0 ? out.odd_indices : out.even_indices)
        .push_back(i);
  }
  for (Eigen::Index r : out.odd_indices) {
    for (Eigen::Index c : out.even_indices) {
      if (std::abs(chain.matrix(r, c)) > cross_tol) {
        throw decomposition_violated_error(
            "split_parity: cross-parity matrix element above tolerance");
      }
    }
  }
  auto restrict_to = [&](const std::vector<Eigen::Index>& ids) {
    Eigen::MatrixXcd m(ids.size(), ids.size());
    for (std::size_t r = 0; r < ids.size(); ++r) {
      for (std::size_t c = 0; c < ids.size(); ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            chain.matrix(ids[r], ids[c]);
      }
    }
    return m;
  };
  out.h_odd = restrict_to(out.odd_indices);
  out.h_even = restrict_to(out.even_indices);
  return out;
}

SpinBasisMap ladder_to_spin_basis(const MomentumBlock& pi_block) {
  const int n = pi_block.params.n_sites;
  if (n % 2 != 0 || pi_block.m != n / 2) {
    throw unsupported_regime_error("ladder_to_spin_basis: block is not the pi sector");
  }
  if (std::abs(pi_block.params.omega_a - pi_block.params.omega_b) > 1e-14) {
    throw unsupported_regime_error(
        "ladder_to_spin_basis: requires omega_a == omega_b (leg on-site energies "
        "must coincide for the diagonal to drop out)");
  }

  const Eigen::Index dim = pi_block.block.rows();
  auto col_of = [&](int j, int leg) -> Eigen::Index {
    for (std::size_t i = 0; i < pi_block.labels.size(); ++i) {
      if (pi_block.labels[i] == LadderSite{j, leg}) return static_cast<Eigen::Index>(i);
    }
    return -1;
  };

  SpinBasisMap map;
  map.unitary = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::Index next = 0;
  auto place = [&](const Eigen::VectorXcd& combo, SpinBasisLabel lab) {
    map.unitary.col(next) = combo;
    map.labels.push_back(lab);
    switch (lab.kind) {
      case SpinBasisLabel::Kind::Spin: map.spin_columns.push_back(next); break;
      case SpinBasisLabel::Kind::ZeroMode: map.zero_mode_columns.push_back(next); break;
      default: map.antipodal_columns.push_back(next); break;
    }
    ++next;
  };
  auto unit = [&](Eigen::Index c) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v[c] = 1.0;
    return v;
  };

  // |0,pm> = (|0,1,pi> pm |0,2,pi>)/sqrt(2)
  {
    const Eigen::Index c1 = col_of(0, 1), c2 = col_of(0, 2);
    place((unit(c1) + unit(c2)) / kSqrt2, {SpinBasisLabel::Kind::Spin, 0, +1});
    place((unit(c1) - unit(c2)) / kSqrt2, {SpinBasisLabel::Kind::Spin, 0, -1});
  }
  std::vector<std::pair<Eigen::VectorXcd, SpinBasisLabel>> zero_modes;
  for (int j = 1; j < n / 2; ++j) {
    const Eigen::Index c1 = col_of(j, 1), c2 = col_of(j, 2);
    const Eigen::Index c3 = col_of(j, 3), c4 = col_of(j, 4);
    place((unit(c1) + unit(c3) + unit(c2) + unit(c4)) / 2.0,
          {SpinBasisLabel::Kind::Spin, j, +1});
    place((unit(c1) - unit(c3)) / kSqrt2, {SpinBasisLabel::Kind::Spin, j, 0});
    place((unit(c1) + unit(c3) - unit(c2) - unit(c4)) / 2.0,
          {SpinBasisLabel::Kind::Spin, j, -1});
    zero_modes.push_back(
        {(unit(c2) - unit(c4)) / kSqrt2, {SpinBasisLabel::Kind::ZeroMode, j, 0}});
  }
  // antipodal column: merged 1/3 leg always present; legs 2, 4 only when the
  // momentum index N/2 is even (rings with N = 0 mod 4)
  {
    const int ja = n / 2;
    const Eigen::Index c1 = col_of(ja, 1);
    const Eigen::Index c2 = col_of(ja, 2), c4 = col_of(ja, 4);
    if (c2 < 0) {
      place(unit(c1), {SpinBasisLabel::Kind::AntipodalMerged, ja, 0});
    } else {
      place((kSqrt2 * unit(c1) + unit(c2) + unit(c4)) / 2.0,
            {SpinBasisLabel::Kind::AntipodalSpin, ja, +1});
      place((kSqrt2 * unit(c1) - unit(c2) - unit(c4)) / 2.0,
            {SpinBasisLabel::Kind::AntipodalSpin, ja, -1});
      zero_modes.push_back(
          {(unit(c2) - unit(c4)) / kSqrt2, {SpinBasisLabel::Kind::AntipodalZeroMode, ja, 0}});
    }
  }
  for (auto& [v, lab] : zero_modes) place(v, lab);

  if (next != dim) {
    throw std::logic_error("ladder_to_spin_basis: column count mismatch");
  }
  return map;
}

}  // namespace jch
