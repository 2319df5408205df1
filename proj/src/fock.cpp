#include "jch/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace jch {

namespace {
int mod(int x, int n) { return ((x % n) + n) % n; }
}

PhotonFockBasis::PhotonFockBasis(int n_sites, int total_photons, int per_site_cutoff)
    : n_(n_sites), total_(total_photons), cutoff_(per_site_cutoff) {
  if (n_ < 2 || total_ < 0 || cutoff_ < 0) {
    throw std::invalid_argument("PhotonFockBasis: bad arguments");
  }
  std::vector<int> occ(static_cast<std::size_t>(n_), 0);
  // lexicographic depth-first enumeration
  auto rec = [&](auto&& self, int site, int left) -> void {
    if (site == n_) {
      if (left == 0) {
        lookup_[occ] = static_cast<Eigen::Index>(states_.size());
        states_.push_back(occ);
      }
      return;
    }
    for (int c = 0; c <= std::min(cutoff_, left); ++c) {
      occ[static_cast<std::size_t>(site)] = c;
      self(self, site + 1, left - c);
    }
    occ[static_cast<std::size_t>(site)] = 0;
  };
  rec(rec, 0, total_);
}

Eigen::Index PhotonFockBasis::index(const std::vector<int>& occ) const {
  auto it = lookup_.find(occ);
  return it == lookup_.end() ? -1 : it->second;
}

SparseOperator photon_hopping(const PhotonFockBasis& basis, double kappa) {
  const int n = basis.n_sites();
  std::vector<Triplet> ts;
  for (Eigen::Index c = 0; c < basis.size(); ++c) {
    const std::vector<int>& occ = basis.occupation(c);
    for (int i = 0; i < n; ++i) {
      const int ip = mod(i + 1, n);
      for (auto [src, dst] : {std::pair{i, ip}, std::pair{ip, i}}) {
        if (occ[static_cast<std::size_t>(src)] >= 1 &&
            occ[static_cast<std::size_t>(dst)] < basis.cutoff()) {
          std::vector<int> t = occ;
          t[static_cast<std::size_t>(src)] -= 1;
          t[static_cast<std::size_t>(dst)] += 1;
          const double amp = -kappa *
                             std::sqrt(double(occ[static_cast<std::size_t>(src)])) *
                             std::sqrt(double(occ[static_cast<std::size_t>(dst)] + 1));
          ts.emplace_back(basis.index(t), c, Complex(amp, 0.0));
        }
      }
    }
  }
  return SparseOperator(basis.size(), ts, true);
}

SparseOperator photon_number(const PhotonFockBasis& basis) {
  std::vector<Triplet> ts;
  for (Eigen::Index c = 0; c < basis.size(); ++c) {
    ts.emplace_back(c, c, Complex(double(basis.total_photons()), 0.0));
  }
  return SparseOperator(basis.size(), ts, true);
}

SparseOperator bose_hubbard_hamiltonian(const BoseHubbardParams& p,
                                        const PhotonFockBasis& basis) {
  if (p.n_sites != basis.n_sites()) {
    throw std::invalid_argument("bose_hubbard_hamiltonian: site count mismatch");
  }
  std::vector<Triplet> ts = photon_hopping(basis, p.kappa).entries();
  for (Eigen::Index c = 0; c < basis.size(); ++c) {
    double u = 0.0;
    for (int occ : basis.occupation(c)) u += 0.5 * p.u * occ * (occ - 1);
    if (u != 0.0) ts.emplace_back(c, c, Complex(u, 0.0));
  }
  return SparseOperator(basis.size(), ts, true);
}

Eigen::VectorXcd apply_eta(const PhotonFockBasis& from, const PhotonFockBasis& to,
                           int j, const Eigen::VectorXcd& v) {
  if (v.size() != from.size()) throw std::invalid_argument("apply_eta: dimension mismatch");
  if (to.total_photons() != from.total_photons() + 2 || to.n_sites() != from.n_sites()) {
    throw std::invalid_argument("apply_eta: target basis must hold two more photons");
  }
  const int n = from.n_sites();
  if (j <= 0 || j >= n) throw std::invalid_argument("apply_eta: separation out of range");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(to.size());
  for (Eigen::Index c = 0; c < from.size(); ++c) {
    if (v[c] == Complex(0.0, 0.0)) continue;
    const std::vector<int>& occ = from.occupation(c);
    for (int l = 0; l < n; ++l) {
      const int lp = mod(l + j, n);
      std::vector<int> t = occ;
      t[static_cast<std::size_t>(l)] += 1;
      t[static_cast<std::size_t>(lp)] += 1;
      if (t[static_cast<std::size_t>(l)] > to.cutoff() ||
          t[static_cast<std::size_t>(lp)] > to.cutoff()) {
        continue;
      }
      const double amp = (l % 2 == 0 ? 1.0 : -1.0) *
                         std::sqrt(double(t[static_cast<std::size_t>(l)])) *
                         std::sqrt(double(t[static_cast<std::size_t>(lp)]));
      out[to.index(t)] += amp * v[c];
    }
  }
  return out;
}

}  // namespace jch
