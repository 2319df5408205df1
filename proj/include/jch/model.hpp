#pragma once

#include <cstdint>
#include <vector>

#include "jch/sparse.hpp"

namespace jch {

/// Ring of n_sites cavities, one two-level atom per cavity.
struct ModelParams {
  int n_sites = 0;        // N, periodic: site N+1 == site 1
  double omega_a = 1.0;   // photon frequency
  double omega_b = 1.0;   // atomic splitting
  double kappa = 1.0;     // inter-cavity photon hopping
  double lambda = 1.0;    // Jaynes-Cummings coupling

  void validate() const;  // throws std::invalid_argument if n_sites < 4
};

enum class PairKind : std::uint8_t {
  DoublePhoton,  // |2>_i
  PhotonPhoton,  // |1>_i |1>_j, i < j
  AtomAtom,      // |e>_i |e>_j, i < j
  PhotonAtom,    // |1>_i |e>_j, j may equal i
};

/// One two-excitation configuration. site_a/site_b meaning depends on kind:
/// DoublePhoton uses site_a only (site_b == site_a); pair kinds store the
/// smaller site in site_a; PhotonAtom stores (photon site, atom site).
struct BasisState {
  PairKind kind;
  int site_a;
  int site_b;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// Canonical enumeration of the 2 N^2 two-excitation configurations:
/// DoublePhoton ascending, then PhotonPhoton, AtomAtom, PhotonAtom in
/// row-major site order. Index lookups are O(1) arithmetic.
class TwoExcitationBasis {
 public:
  explicit TwoExcitationBasis(int n_sites);

  int n_sites() const { return n_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(states_.size()); }
  const BasisState& state(Eigen::Index i) const { return states_[static_cast<std::size_t>(i)]; }
  Eigen::Index index(const BasisState& s) const;

  // Canonicalizing helpers; arguments are taken mod N.
  Eigen::Index photon_pair(int i, int j) const;  // i == j resolves to DoublePhoton
  Eigen::Index atom_pair(int i, int j) const;    // requires i != j mod N
  Eigen::Index photon_atom(int photon_site, int atom_site) const;

  std::string tag() const;

 private:
  int n_;
  std::vector<BasisState> states_;
};

TwoExcitationBasis enumerate_basis(const ModelParams& params);

/// The three pieces of the Hamiltonian and their sum. All are real symmetric
/// in the canonical basis when kappa, lambda are real.
SparseOperator build_h_ap(const ModelParams&, const TwoExcitationBasis&);
SparseOperator build_h_jc(const ModelParams&, const TwoExcitationBasis&);
SparseOperator build_h_c(const ModelParams&, const TwoExcitationBasis&);
SparseOperator build_hamiltonian(const ModelParams&, const TwoExcitationBasis&);

Eigen::VectorXcd apply_operator(const SparseOperator& op, const Eigen::VectorXcd& v);
StateVector apply_operator(const SparseOperator& op, const StateVector& v);

/// Basis spanning the excitation-number sectors 0, 1 and 2 together, used to
/// probe conservation of the total excitation number. Sector layout:
/// [vacuum | photon at i | atom at i | two-excitation block].
class ExcitationSectorBasis {
 public:
  explicit ExcitationSectorBasis(int n_sites);

  Eigen::Index size() const { return 1 + 2 * n_ + two_exc_.size(); }
  int excitation_count(Eigen::Index i) const;
  int n_sites() const { return n_; }
  const TwoExcitationBasis& two_excitation() const { return two_exc_; }
  Eigen::Index two_excitation_offset() const { return 1 + 2 * n_; }

 private:
  int n_;
  TwoExcitationBasis two_exc_;
};

/// Hamiltonian over the 0+1+2 excitation sectors, built by literal
/// application of the hopping and JC rules to occupation configurations
/// (not by block assembly), so cross-sector leakage would show up.
SparseOperator build_hamiltonian_sectors(const ModelParams&, const ExcitationSectorBasis&);

/// Frobenius norm of [op, N_hat] over the sector basis. Zero iff op carries
/// no amplitude between different excitation-number sectors.
double excitation_number_check(const SparseOperator& op, const ExcitationSectorBasis&);

}  // namespace jch
