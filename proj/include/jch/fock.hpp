#pragma once

#include <map>
#include <vector>

#include "jch/sparse.hpp"

namespace jch {

/// Photon-only occupation basis with fixed total number and per-site cutoff.
/// Enumeration is lexicographic in the occupation tuple, so indices are
/// deterministic; lookup is O(log dim).
class PhotonFockBasis {
 public:
  PhotonFockBasis(int n_sites, int total_photons, int per_site_cutoff);

  int n_sites() const { return n_; }
  int total_photons() const { return total_; }
  int cutoff() const { return cutoff_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(states_.size()); }
  const std::vector<int>& occupation(Eigen::Index i) const {
    return states_[static_cast<std::size_t>(i)];
  }
  Eigen::Index index(const std::vector<int>& occ) const;  // -1 if absent

 private:
  int n_, total_, cutoff_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, Eigen::Index> lookup_;
};

/// -kappa sum (a^dag_l a_{l+1} + h.c.) on the ring; hops that would exceed
/// the per-site cutoff are dropped (truncation).
SparseOperator photon_hopping(const PhotonFockBasis&, double kappa);

/// Diagonal total photon number.
SparseOperator photon_number(const PhotonFockBasis&);

struct BoseHubbardParams {
  int n_sites = 0;
  double kappa = 1.0;
  double u = 0.0;  // on-site interaction U
};

/// H_BH = -kappa sum (a^dag a + h.c.) + U/2 sum n(n-1).
SparseOperator bose_hubbard_hamiltonian(const BoseHubbardParams&, const PhotonFockBasis&);

/// eta_j = sum_l (-1)^l a^dag_l a^dag_{l+j} applied to a state of `from`,
/// producing a state of `to` (two more photons). Components beyond the
/// cutoff of `to` are dropped.
Eigen::VectorXcd apply_eta(const PhotonFockBasis& from, const PhotonFockBasis& to,
                           int j, const Eigen::VectorXcd& v);

}  // namespace jch
