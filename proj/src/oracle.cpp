#include "jch/oracle.hpp"

#include <cmath>

namespace jch {

namespace {

// site space: index = 2 * photon + atom, photon in {0,1,2}, atom in {g=0, e=1}
constexpr int kSiteDim = 6;

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXd site_annihilate() {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(kSiteDim, kSiteDim);
  for (int n = 1; n <= 2; ++n) {
    for (int s = 0; s <= 1; ++s) {
      a(2 * (n - 1) + s, 2 * n + s) = std::sqrt(double(n));
    }
  }
  return a;
}

Eigen::MatrixXd site_sigma_minus() {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(kSiteDim, kSiteDim);
  for (int n = 0; n <= 2; ++n) m(2 * n + 0, 2 * n + 1) = 1.0;
  return m;
}

Eigen::MatrixXd site_photon_number() {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(kSiteDim, kSiteDim);
  for (int n = 0; n <= 2; ++n)
    for (int s = 0; s <= 1; ++s) m(2 * n + s, 2 * n + s) = n;
  return m;
}

Eigen::MatrixXd site_atom_excited() {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(kSiteDim, kSiteDim);
  for (int n = 0; n <= 2; ++n) m(2 * n + 1, 2 * n + 1) = 1.0;
  return m;
}

Eigen::MatrixXd at_site(const Eigen::MatrixXd& op, int site, int n_sites) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
  for (int i = 0; i < n_sites; ++i) {
    out = kron(out, i == site ? op : Eigen::MatrixXd::Identity(kSiteDim, kSiteDim));
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd dense_tensor_oracle(const ModelParams& p,
                                     const TwoExcitationBasis& basis) {
  const int n = p.n_sites;
  if (n > 4) throw std::invalid_argument("dense_tensor_oracle: 6^N blows up past N = 4");

  const Eigen::MatrixXd a = site_annihilate();
  const Eigen::MatrixXd sm = site_sigma_minus();
  const Eigen::MatrixXd adag_sm = a.transpose() * sm;  // same site: a^dag sigma-

  Eigen::Index full = 1;
  for (int i = 0; i < n; ++i) full *= kSiteDim;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(full, full);

  for (int i = 0; i < n; ++i) {
    const int ip = (i + 1) % n;
    h += p.omega_a * at_site(site_photon_number(), i, n);
    h += p.omega_b * at_site(site_atom_excited(), i, n);
    const Eigen::MatrixXd jc = p.lambda * at_site(adag_sm, i, n);
    h += jc + jc.transpose();
    const Eigen::MatrixXd hop =
        -p.kappa * (at_site(a.transpose(), i, n) * at_site(a, ip, n));
    h += hop + hop.transpose();
  }

  // tensor index of a canonical basis state
  auto full_index = [&](const BasisState& s) {
    std::vector<int> digit(static_cast<std::size_t>(n), 0);
    switch (s.kind) {
      case PairKind::DoublePhoton: digit[s.site_a] = 2 * 2; break;
      case PairKind::PhotonPhoton: digit[s.site_a] += 2; digit[s.site_b] += 2; break;
      case PairKind::AtomAtom: digit[s.site_a] += 1; digit[s.site_b] += 1; break;
      case PairKind::PhotonAtom: digit[s.site_a] += 2; digit[s.site_b] += 1; break;
    }
    Eigen::Index idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * kSiteDim + digit[static_cast<std::size_t>(i)];
    return idx;
  };

  Eigen::MatrixXcd out(basis.size(), basis.size());
  std::vector<Eigen::Index> map(static_cast<std::size_t>(basis.size()));
  for (Eigen::Index i = 0; i < basis.size(); ++i) map[i] = full_index(basis.state(i));
  for (Eigen::Index r = 0; r < basis.size(); ++r) {
    for (Eigen::Index c = 0; c < basis.size(); ++c) {
      out(r, c) = h(map[r], map[c]);
    }
  }
  return out;
}

}  // namespace jch
