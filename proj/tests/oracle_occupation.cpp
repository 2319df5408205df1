#include "oracle_occupation.hpp"

#include <cmath>
#include <map>

#include "jch/symmetry.hpp"

namespace jch_test {

using jch::BasisState;
using jch::ModelParams;
using jch::PairKind;
using jch::TwoExcitationBasis;

namespace {

struct Occ {
  std::vector<int> photons;
  std::vector<int> atoms;
  friend auto operator<=>(const Occ&, const Occ&) = default;
};

Occ to_occ(const BasisState& s, int n) {
  Occ o{std::vector<int>(static_cast<std::size_t>(n), 0),
        std::vector<int>(static_cast<std::size_t>(n), 0)};
  switch (s.kind) {
    case PairKind::DoublePhoton: o.photons[s.site_a] = 2; break;
    case PairKind::PhotonPhoton: o.photons[s.site_a] += 1; o.photons[s.site_b] += 1; break;
    case PairKind::AtomAtom: o.atoms[s.site_a] = 1; o.atoms[s.site_b] = 1; break;
    case PairKind::PhotonAtom: o.photons[s.site_a] += 1; o.atoms[s.site_b] = 1; break;
  }
  return o;
}

}  // namespace

Eigen::MatrixXcd occupation_oracle(const ModelParams& p, const TwoExcitationBasis& basis) {
  const int n = p.n_sites;
  std::map<Occ, Eigen::Index> lookup;
  for (Eigen::Index i = 0; i < basis.size(); ++i) lookup[to_occ(basis.state(i), n)] = i;

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
  for (Eigen::Index c = 0; c < basis.size(); ++c) {
    const Occ o = to_occ(basis.state(c), n);
    double diag = 0.0;
    for (int i = 0; i < n; ++i) diag += p.omega_a * o.photons[i] + p.omega_b * o.atoms[i];
    h(c, c) += diag;
    for (int i = 0; i < n; ++i) {
      const int ip = (i + 1) % n;
      for (auto [src, dst] : {std::pair{i, ip}, std::pair{ip, i}}) {
        if (o.photons[src] >= 1 && o.photons[dst] < 2) {
          Occ t = o;
          t.photons[src] -= 1;
          t.photons[dst] += 1;
          h(lookup.at(t), c) += -p.kappa * std::sqrt(double(o.photons[src])) *
                                std::sqrt(double(o.photons[dst] + 1));
        }
      }
      if (o.atoms[i] == 1) {
        Occ t = o;
        t.atoms[i] = 0;
        t.photons[i] += 1;
        h(lookup.at(t), c) += p.lambda * std::sqrt(double(o.photons[i] + 1));
      }
      if (o.atoms[i] == 0 && o.photons[i] >= 1) {
        Occ t = o;
        t.atoms[i] = 1;
        t.photons[i] -= 1;
        h(lookup.at(t), c) += p.lambda * std::sqrt(double(o.photons[i]));
      }
    }
  }
  return h;
}

std::vector<Eigen::Index> orbit_sector_dims(const TwoExcitationBasis& basis) {
  const int n = basis.n_sites();
  const jch::SparseOperator t = jch::translation_operator(basis);
  const Eigen::MatrixXcd td = t.dense();

  std::vector<bool> seen(static_cast<std::size_t>(basis.size()), false);
  std::vector<int> orbit_lengths;
  for (Eigen::Index s = 0; s < basis.size(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    int len = 0;
    Eigen::Index cur = s;
    do {
      seen[static_cast<std::size_t>(cur)] = true;
      ++len;
      // follow the permutation
      for (Eigen::Index r = 0; r < basis.size(); ++r) {
        if (std::abs(td(r, cur)) > 0.5) {
          cur = r;
          break;
        }
      }
    } while (cur != s);
    orbit_lengths.push_back(len);
  }

  std::vector<Eigen::Index> dims(static_cast<std::size_t>(n), 0);
  for (int m = 0; m < n; ++m) {
    for (int len : orbit_lengths) {
      if ((static_cast<long>(m) * len) % n == 0) ++dims[static_cast<std::size_t>(m)];
    }
  }
  return dims;
}

}  // namespace jch_test
