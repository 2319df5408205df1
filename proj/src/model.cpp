#include "jch/model.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace jch {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

int mod(int x, int n) { return ((x % n) + n) % n; }
}  // namespace

void ModelParams::validate() const {
  if (n_sites < 4) {
    throw std::invalid_argument("ModelParams: n_sites must be at least 4");
  }
}

TwoExcitationBasis::TwoExcitationBasis(int n_sites) : n_(n_sites) {
  if (n_ < 4) throw std::invalid_argument("TwoExcitationBasis: n_sites must be at least 4");
  states_.reserve(static_cast<std::size_t>(2 * n_ * n_));
  for (int i = 0; i < n_; ++i) states_.push_back({PairKind::DoublePhoton, i, i});
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) states_.push_back({PairKind::PhotonPhoton, i, j});
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) states_.push_back({PairKind::AtomAtom, i, j});
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) states_.push_back({PairKind::PhotonAtom, i, j});
}

namespace {
// Index of an ordered pair (a < b) in row-major upper-triangular order.
Eigen::Index pair_offset(int a, int b, int n) {
  return static_cast<Eigen::Index>(a) * n - static_cast<Eigen::Index>(a) * (a + 1) / 2 +
         (b - a - 1);
}
}  // namespace

Eigen::Index TwoExcitationBasis::index(const BasisState& s) const {
  const Eigen::Index n = n_;
  const Eigen::Index pairs = n * (n - 1) / 2;
  switch (s.kind) {
    case PairKind::DoublePhoton:
      return s.site_a;
    case PairKind::PhotonPhoton:
      return n + pair_offset(s.site_a, s.site_b, n_);
    case PairKind::AtomAtom:
      return n + pairs + pair_offset(s.site_a, s.site_b, n_);
    case PairKind::PhotonAtom:
      return n + 2 * pairs + static_cast<Eigen::Index>(s.site_a) * n + s.site_b;
  }
  throw std::logic_error("unreachable");
}

Eigen::Index TwoExcitationBasis::photon_pair(int i, int j) const {
  i = mod(i, n_);
  j = mod(j, n_);
  if (i == j) return index({PairKind::DoublePhoton, i, i});
  return index({PairKind::PhotonPhoton, std::min(i, j), std::max(i, j)});
}

Eigen::Index TwoExcitationBasis::atom_pair(int i, int j) const {
  i = mod(i, n_);
  j = mod(j, n_);
  if (i == j) throw std::invalid_argument("atom_pair: coincident sites");
  return index({PairKind::AtomAtom, std::min(i, j), std::max(i, j)});
}

Eigen::Index TwoExcitationBasis::photon_atom(int photon_site, int atom_site) const {
  return index({PairKind::PhotonAtom, mod(photon_site, n_), mod(atom_site, n_)});
}

std::string TwoExcitationBasis::tag() const {
  return "two-excitation:N=" + std::to_string(n_);
}

TwoExcitationBasis enumerate_basis(const ModelParams& params) {
  params.validate();
  return TwoExcitationBasis(params.n_sites);
}

SparseOperator build_h_ap(const ModelParams& p, const TwoExcitationBasis& basis) {
  std::vector<Triplet> ts;
  ts.reserve(static_cast<std::size_t>(basis.size()));
  for (Eigen::Index r = 0; r < basis.size(); ++r) {
    double e = 0.0;
    switch (basis.state(r).kind) {
      case PairKind::DoublePhoton: e = 2 * p.omega_a; break;
      case PairKind::PhotonPhoton: e = 2 * p.omega_a; break;
      case PairKind::AtomAtom: e = 2 * p.omega_b; break;
      case PairKind::PhotonAtom: e = p.omega_a + p.omega_b; break;
    }
    ts.emplace_back(r, r, Complex(e, 0.0));
  }
  return SparseOperator(basis.size(), ts, true);
}

SparseOperator build_h_jc(const ModelParams& p, const TwoExcitationBasis& basis) {
  const double lam = p.lambda;
  std::vector<Triplet> ts;
  auto emit = [&](Eigen::Index r, Eigen::Index c, double v) {
    ts.emplace_back(r, c, Complex(v, 0.0));
  };
  // Every JC process is emitted from every column, so each coupling appears
  // once per direction and hermiticity is emergent, not imposed.
  for (Eigen::Index c = 0; c < basis.size(); ++c) {
    const BasisState& s = basis.state(c);
    switch (s.kind) {
      case PairKind::DoublePhoton:
        // a_i sigma+_i |2>_i = sqrt(2) |e>_i |1>_i
        emit(basis.photon_atom(s.site_a, s.site_a), c, kSqrt2 * lam);
        break;
      case PairKind::PhotonPhoton:
        // absorb either photon, exciting the atom under it
        emit(basis.photon_atom(s.site_b, s.site_a), c, lam);
        emit(basis.photon_atom(s.site_a, s.site_b), c, lam);
        break;
      case PairKind::AtomAtom:
        // de-excite either atom, creating a photon at its site
        emit(basis.photon_atom(s.site_a, s.site_b), c, lam);
        emit(basis.photon_atom(s.site_b, s.site_a), c, lam);
        break;
      case PairKind::PhotonAtom: {
        const int ph = s.site_a, at = s.site_b;
        // a^dag sigma- at the atom site
        if (ph == at) {
          emit(basis.index({PairKind::DoublePhoton, ph, ph}), c, kSqrt2 * lam);
        } else {
          emit(basis.photon_pair(ph, at), c, lam);
          // a sigma+ at the photon site (blocked when the atom sits there)
          emit(basis.atom_pair(ph, at), c, lam);
        }
        break;
      }
    }
  }
  return SparseOperator(basis.size(), ts, true);
}

SparseOperator build_h_c(const ModelParams& p, const TwoExcitationBasis& basis) {
  const int n = basis.n_sites();
  const double kap = p.kappa;
  std::vector<Triplet> ts;
  auto emit = [&](Eigen::Index r, Eigen::Index c, double v) {
    ts.emplace_back(r, c, Complex(v, 0.0));
  };
  for (Eigen::Index c = 0; c < basis.size(); ++c) {
    const BasisState& s = basis.state(c);
    switch (s.kind) {
      case PairKind::DoublePhoton:
        // a^dag_{i +- 1} a_i |2>_i = sqrt(2) |1>_i |1>_{i +- 1}
        emit(basis.photon_pair(s.site_a, s.site_a + 1), c, -kSqrt2 * kap);
        emit(basis.photon_pair(s.site_a, s.site_a - 1), c, -kSqrt2 * kap);
        break;
      case PairKind::PhotonPhoton: {
        const int a = s.site_a, b = s.site_b;
        for (auto [from, other] : {std::pair{a, b}, std::pair{b, a}}) {
          for (int dir : {+1, -1}) {
            const int to = mod(from + dir, n);
            emit(basis.photon_pair(to, other), c, to == other ? -kSqrt2 * kap : -kap);
          }
        }
        break;
      }
      case PairKind::AtomAtom:
        break;  // no photons to move
      case PairKind::PhotonAtom: {
        const int ph = s.site_a, at = s.site_b;
        emit(basis.photon_atom(ph + 1, at), c, -kap);
        emit(basis.photon_atom(ph - 1, at), c, -kap);
        break;
      }
    }
  }
  return SparseOperator(basis.size(), ts, true);
}

SparseOperator build_hamiltonian(const ModelParams& p, const TwoExcitationBasis& basis) {
  std::vector<Triplet> ts;
  for (const SparseOperator& part :
       {build_h_ap(p, basis), build_h_jc(p, basis), build_h_c(p, basis)}) {
    for (const auto& t : part.entries()) ts.push_back(t);
  }
  return SparseOperator(basis.size(), ts, true);
}

Eigen::VectorXcd apply_operator(const SparseOperator& op, const Eigen::VectorXcd& v) {
  return op.apply(v);
}

StateVector apply_operator(const SparseOperator& op, const StateVector& v) {
  return {op.apply(v.amplitudes), v.basis_tag};
}

ExcitationSectorBasis::ExcitationSectorBasis(int n_sites)
    : n_(n_sites), two_exc_(n_sites) {}

int ExcitationSectorBasis::excitation_count(Eigen::Index i) const {
  if (i == 0) return 0;
  if (i < 1 + 2 * n_) return 1;
  return 2;
}

namespace {

// Occupation picture used only for the sector-crossing probe: photon counts
// plus atom bits per site.
struct Occ {
  std::vector<int> photons;
  std::vector<int> atoms;
  friend auto operator<=>(const Occ&, const Occ&) = default;
};

Occ decode(const ExcitationSectorBasis& b, Eigen::Index i) {
  const int n = b.n_sites();
  Occ o{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  if (i == 0) return o;
  if (i < 1 + n) {
    o.photons[static_cast<std::size_t>(i - 1)] = 1;
    return o;
  }
  if (i < 1 + 2 * n) {
    o.atoms[static_cast<std::size_t>(i - 1 - n)] = 1;
    return o;
  }
  const BasisState& s = b.two_excitation().state(i - b.two_excitation_offset());
  switch (s.kind) {
    case PairKind::DoublePhoton: o.photons[s.site_a] = 2; break;
    case PairKind::PhotonPhoton: o.photons[s.site_a] += 1; o.photons[s.site_b] += 1; break;
    case PairKind::AtomAtom: o.atoms[s.site_a] = 1; o.atoms[s.site_b] = 1; break;
    case PairKind::PhotonAtom: o.photons[s.site_a] += 1; o.atoms[s.site_b] = 1; break;
  }
  return o;
}

}  // namespace

SparseOperator build_hamiltonian_sectors(const ModelParams& p,
                                         const ExcitationSectorBasis& basis) {
  const int n = basis.n_sites();
  std::map<Occ, Eigen::Index> lookup;
  for (Eigen::Index i = 0; i < basis.size(); ++i) lookup[decode(basis, i)] = i;

  std::vector<Triplet> ts;
  auto emit = [&](const Occ& target, Eigen::Index col, double v) {
    auto it = lookup.find(target);
    if (it == lookup.end()) {
      throw std::logic_error("sector Hamiltonian: state left the enumerated space");
    }
    ts.emplace_back(it->second, col, Complex(v, 0.0));
  };

  for (Eigen::Index c = 0; c < basis.size(); ++c) {
    const Occ o = decode(basis, c);
    double diag = 0.0;
    for (int i = 0; i < n; ++i) diag += p.omega_a * o.photons[i] + p.omega_b * o.atoms[i];
    if (diag != 0.0) ts.emplace_back(c, c, Complex(diag, 0.0));
    for (int i = 0; i < n; ++i) {
      const int ip = mod(i + 1, n);
      // photon hops, both directions
      for (auto [src, dst] : {std::pair{i, ip}, std::pair{ip, i}}) {
        if (o.photons[src] >= 1 && o.photons[dst] < 2) {
          Occ t = o;
          t.photons[src] -= 1;
          t.photons[dst] += 1;
          emit(t, c, -p.kappa * std::sqrt(double(o.photons[src])) *
                         std::sqrt(double(o.photons[dst] + 1)));
        }
      }
      // a^dag_i sigma-_i
      if (o.atoms[i] == 1 && o.photons[i] < 2) {
        Occ t = o;
        t.atoms[i] = 0;
        t.photons[i] += 1;
        emit(t, c, p.lambda * std::sqrt(double(o.photons[i] + 1)));
      }
      // a_i sigma+_i
      if (o.atoms[i] == 0 && o.photons[i] >= 1) {
        Occ t = o;
        t.atoms[i] = 1;
        t.photons[i] -= 1;
        emit(t, c, p.lambda * std::sqrt(double(o.photons[i])));
      }
    }
  }
  return SparseOperator(basis.size(), ts, true);
}

double excitation_number_check(const SparseOperator& op,
                               const ExcitationSectorBasis& basis) {
  if (op.dim() != basis.size()) {
    throw std::invalid_argument("excitation_number_check: dimension mismatch");
  }
  // [op, N]_rc = op_rc (N_c - N_r); nonzero only for sector-crossing entries.
  double sum = 0.0;
  for (const auto& t : op.entries()) {
    const int dn = basis.excitation_count(t.col()) - basis.excitation_count(t.row());
    sum += std::norm(t.value()) * dn * dn;
  }
  return std::sqrt(sum);
}

}  // namespace jch
