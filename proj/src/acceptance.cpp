#include "jch/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "jch/entanglement.hpp"
#include "jch/exact_states.hpp"
#include "jch/io.hpp"
#include "jch/linalg.hpp"
#include "jch/model.hpp"
#include "jch/oracle.hpp"
#include "jch/spin_chain.hpp"
#include "jch/symmetry.hpp"

namespace jch {

namespace {
constexpr double kPi = std::numbers::pi;

double wrap_to_pi(double x) {
  while (x > kPi) x -= 2 * kPi;
  while (x <= -kPi) x += 2 * kPi;
  return x;
}

struct Recorder {
  std::vector<CheckResult> results;
  const std::function<void(const CheckResult&)>& sink;

  void add(const std::string& name, bool passed, const std::string& detail) {
    results.push_back({name, passed, detail});
    if (sink) sink(results.back());
  }
};

const std::vector<double> kKappaGrid{0.5, 1.0};
const std::vector<double> kLambdaGrid{0.3, 0.7};

std::string fmt(double x) { return format_g15(x); }

// --- criterion 1: block-decomposition equality -----------------------------
void criterion_block_equality(Recorder& rec) {
  for (int n : {6, 8, 10}) {
    for (double kap : kKappaGrid) {
      for (double lam : kLambdaGrid) {
        const ModelParams p{n, 1.0, 1.0, kap, lam};
        const auto t0 = std::chrono::steady_clock::now();
        const TwoExcitationBasis basis = enumerate_basis(p);
        const SparseOperator h = build_hamiltonian(p, basis);
        const SparseOperator t = translation_operator(basis);
        const auto blocks = momentum_sectors(h, t, p, basis);
        const Spectrum full = eig_hermitian(h.dense());
        std::vector<double> pooled;
        for (const auto& b : blocks) {
          const Spectrum s = eig_hermitian(b.block);
          pooled.insert(pooled.end(), s.values.begin(), s.values.end());
        }
        Eigen::VectorXd pooled_v =
            Eigen::Map<Eigen::VectorXd>(pooled.data(), static_cast<Eigen::Index>(pooled.size()));
        const MultisetReport rep = multiset_equal(full.values, pooled_v, 1e-10);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream os;
        os << "N=" << n << " kappa=" << kap << " lambda=" << lam
           << " max gap=" << fmt(rep.max_gap) << " time=" << fmt(secs) << "s";
        rec.add("1. block spectra = full spectrum", rep.equal && secs < 10.0, os.str());
      }
    }
  }
}

// --- criterion 2: analytic ladder matches exact sector blocks --------------
void criterion_ladder_match(Recorder& rec) {
  const int n = 10;
  const ModelParams p{n, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);
  const SparseOperator h = build_hamiltonian(p, basis);
  const SparseOperator t = translation_operator(basis);
  const auto blocks = momentum_sectors(h, t, p, basis);
  const int j_interior = n / 2 - 2;

  double worst_gauge = 0.0;
  for (const auto& blk : blocks) {
    const Eigen::MatrixXcd ladder = build_ladder_hk(p, blk.k, n / 2);
    std::vector<Eigen::Index> sel_block, sel_ladder;
    for (std::size_t i = 0; i < blk.labels.size(); ++i) {
      if (blk.labels[i].j <= j_interior) {
        sel_block.push_back(static_cast<Eigen::Index>(i));
        sel_ladder.push_back(ladder_index(blk.labels[i].j, blk.labels[i].leg));
      }
    }
    const Eigen::Index m = static_cast<Eigen::Index>(sel_block.size());
    Eigen::MatrixXcd exact(m, m), analytic(m, m);
    for (Eigen::Index r = 0; r < m; ++r) {
      for (Eigen::Index c = 0; c < m; ++c) {
        exact(r, c) = blk.block(sel_block[r], sel_block[c]);
        analytic(r, c) = ladder(sel_ladder[r], sel_ladder[c]);
      }
    }
    const GaugeAlignment ga = align_gauge(exact, analytic);
    worst_gauge = std::max(worst_gauge, ga.residual);
  }
  rec.add("2. interior block = analytic ladder (all k, N=10)", worst_gauge < 1e-12,
          "worst residual after gauge alignment = " + fmt(worst_gauge));

  // leg-2 hopping dies at the center momentum pi
  const MomentumBlock& pi_blk = blocks[static_cast<std::size_t>(n / 2)];
  double leg2 = 0.0;
  auto col = [&](int j, int leg) -> Eigen::Index {
    for (std::size_t i = 0; i < pi_blk.labels.size(); ++i) {
      if (pi_blk.labels[i] == LadderSite{j, leg}) return static_cast<Eigen::Index>(i);
    }
    return -1;
  };
  for (int j = 1; j <= j_interior; ++j) {
    leg2 = std::max(leg2, std::abs(pi_blk.block(col(j + 1, 2), col(j, 2))));
  }
  leg2 = std::max(leg2, std::abs(pi_blk.block(col(1, 2), col(0, 2))));
  const double j2 = std::abs(ladder_params(p, kPi).leg_hopping[1]);
  rec.add("2. leg-2 hopping vanishes at k=pi", leg2 < 1e-14 && j2 < 1e-15,
          "max |<j+1,2|H_pi|j,2>| = " + fmt(leg2) + ", |J_2(pi)| = " + fmt(j2));
}

// --- criterion 3: flux law and two-path phase -------------------------------
void criterion_flux(Recorder& rec) {
  const int n = 10;
  const ModelParams p{n, 1.0, 1.0, 1.0, 0.7};
  double worst_eq = 0.0, worst_law = 0.0;
  bool pi_undefined_ok = true;
  for (int m = 0; m < n; ++m) {
    const double k = 2 * kPi * m / n;
    const Eigen::MatrixXcd ladder = build_ladder_hk(p, k, 4);
    if (m * 2 == n) {
      try {
        plaquette_flux(ladder, 1, 1, 4);
        pi_undefined_ok = false;  // must throw: leg-2 link vanishes
      } catch (const flux_undefined_error&) {
      }
      continue;
    }
    const double f12 = plaquette_flux(ladder, 1, 1, 4);
    const double f23 = plaquette_flux(ladder, 1, 2, 4);
    worst_eq = std::max(worst_eq, std::abs(f12 - f23));
    // flux = k/2 with k read in the symmetric zone: 2*flux = k (mod 2pi)
    worst_law = std::max(worst_law, std::abs(wrap_to_pi(2 * f12 - k)));
    worst_law = std::max(worst_law, std::abs(wrap_to_pi(2 * f23 - k)));
    if (k < kPi) worst_law = std::max(worst_law, std::abs(f12 - k / 2));
  }
  rec.add("3. plaquette flux = k/2 per sub-plaquette (full grid, N=10)",
          worst_eq < 1e-12 && worst_law < 1e-12 && pi_undefined_ok,
          "max |f12-f23| = " + fmt(worst_eq) + ", max law residual = " + fmt(worst_law) +
              (pi_undefined_ok ? ", k=pi plaquette undefined as required"
                               : ", k=pi plaquette unexpectedly defined"));

  const ModelParams p8{8, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis b8 = enumerate_basis(p8);
  const TwoPathPhases ph = two_path_interference(p8, b8, 1, 3);
  const double diff = std::abs(wrap_to_pi(ph.phase_2 - ph.phase_1) - kPi) < 1e-12
                          ? std::abs(wrap_to_pi(ph.phase_2 - ph.phase_1))
                          : wrap_to_pi(ph.phase_2 - ph.phase_1);
  const bool ok = std::abs(std::abs(wrap_to_pi(ph.phase_2 - ph.phase_1)) - kPi) < 1e-12 &&
                  std::abs(ph.phase_1) < 1e-12;
  rec.add("3. two-path interference phase difference = pi (N=8)", ok,
          "phase I = " + fmt(ph.phase_1) + ", phase II = " + fmt(ph.phase_2) +
              ", |diff| = " + fmt(std::abs(diff)));
}

// --- criterion 4: pi-sector = spin-orbit chain + zero modes -----------------
void criterion_spin_chain(Recorder& rec) {
  for (int n : {8, 10}) {
    const ModelParams p{n, 1.0, 1.0, 0.7, 0.4};
    const TwoExcitationBasis basis = enumerate_basis(p);
    const SparseOperator h = build_hamiltonian(p, basis);
    const SparseOperator t = translation_operator(basis);
    const auto blocks = momentum_sectors(h, t, p, basis);
    const MomentumBlock& pi_blk = blocks[static_cast<std::size_t>(n / 2)];
    const SpinBasisMap map = ladder_to_spin_basis(pi_blk);

    const Eigen::Index dim = pi_blk.block.rows();
    const Eigen::MatrixXcd shifted =
        pi_blk.block - 2.0 * p.omega_a * Eigen::MatrixXcd::Identity(dim, dim);
    const Eigen::MatrixXcd m = map.unitary.adjoint() * shifted * map.unitary;

    double zero_rows = 0.0;
    for (Eigen::Index c : map.zero_mode_columns) {
      zero_rows = std::max(zero_rows, m.row(c).cwiseAbs().maxCoeff());
      zero_rows = std::max(zero_rows, m.col(c).cwiseAbs().maxCoeff());
    }

    const int j_max = n / 2 - 1;
    const SpinChainHamiltonian chain = build_h_so(p, j_max);
    double interior = 0.0;
    for (std::size_t a = 0; a < map.spin_columns.size(); ++a) {
      for (std::size_t b = 0; b < map.spin_columns.size(); ++b) {
        const SpinBasisLabel& la = map.labels[static_cast<std::size_t>(map.spin_columns[a])];
        const SpinBasisLabel& lb = map.labels[static_cast<std::size_t>(map.spin_columns[b])];
        const Complex lhs = m(map.spin_columns[a], map.spin_columns[b]);
        const Complex rhs = chain.matrix(chain.site_index({la.j, la.pol}),
                                         chain.site_index({lb.j, lb.pol}));
        interior = std::max(interior, std::abs(lhs - rhs));
      }
    }

    const double unitarity =
        (map.unitary.adjoint() * map.unitary - Eigen::MatrixXcd::Identity(dim, dim))
            .cwiseAbs()
            .maxCoeff();

    std::ostringstream os;
    os << "N=" << n << " unitarity=" << fmt(unitarity) << " zero-mode rows=" << fmt(zero_rows)
       << " interior |block - H_SO|=" << fmt(interior);
    rec.add("4. pi-sector = H_SO + zero modes",
            unitarity < 1e-13 && zero_rows < 1e-12 && interior < 1e-12, os.str());

    double cross = 0.0;
    for (std::size_t r = 0; r < chain.sites.size(); ++r) {
      for (std::size_t c = 0; c < chain.sites.size(); ++c) {
        if (chain.parity[r] != chain.parity[c]) {
          cross = std::max(cross, std::abs(chain.matrix(static_cast<Eigen::Index>(r),
                                                        static_cast<Eigen::Index>(c))));
        }
      }
    }
    const ParitySplit split = split_parity(chain);
    const Eigen::Index cd = chain.matrix.rows();
    Eigen::MatrixXcd eo = Eigen::MatrixXcd::Zero(cd, cd), ee = Eigen::MatrixXcd::Zero(cd, cd);
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
    const double comm = (eo * ee - ee * eo).norm();
    std::ostringstream os2;
    os2 << "N=" << n << " cross-parity=" << fmt(cross) << " ||[H_o,H_e]||=" << fmt(comm);
    rec.add("4. parity split of H_SO", cross < 1e-14 && comm < 1e-13, os2.str());
  }
}

// --- criterion 5: bound-pair eigenstates ------------------------------------
void criterion_bound_pairs(Recorder& rec) {
  const int n = 10;
  for (double kap : kKappaGrid) {
    for (double lam : kLambdaGrid) {
      const ModelParams p{n, 1.0, 1.0, kap, lam};
      const TwoExcitationBasis basis = enumerate_basis(p);
      const SparseOperator h = build_hamiltonian(p, basis);
      auto residual = [&](const Eigen::VectorXcd& v) {
        return (h.apply(v) - 2.0 * p.omega_a * v).norm();
      };
      double worst_psi = 0.0;
      bool antipodal_zero = true;
      for (int j = 1; j <= n / 2; ++j) {
        const Eigen::VectorXcd raw = psi_raw_sum(basis, j);
        if (raw.norm() < 1e-12) {
          // N = 2 (mod 4) antipodal separation: the staggered sum cancels
          // identically; the residual of the literal sum is zero.
          antipodal_zero = antipodal_zero && residual(raw) < 1e-12;
          continue;
        }
        worst_psi = std::max(worst_psi, residual(raw / raw.norm()));
      }
      double worst_phi = 0.0;
      for (int j = 0; j <= n / 2 - 2; ++j) {
        worst_phi = std::max(worst_phi, residual(phi_state(p, basis, j).amplitudes.amplitudes));
      }
      std::ostringstream os;
      os << "N=10 kappa=" << kap << " lambda=" << lam << " max psi residual=" << fmt(worst_psi)
         << " max phi residual=" << fmt(worst_phi)
         << (antipodal_zero ? " (j=N/2 literal sum vanishes; residual 0)" : " (antipodal anomaly)");
      rec.add("5. |psi_j>, |phi_j> eigenstates at 2 omega_a",
              worst_psi < 1e-12 && worst_phi < 1e-12 && antipodal_zero, os.str());
    }
  }

  // parity-sector annihilation in the spin-chain representation
  const ModelParams p{n, 1.0, 1.0, 1.0, 0.7};
  const int j_max = 8;
  const SpinChainHamiltonian chain = build_h_so(p, j_max);
  const ParitySplit split = split_parity(chain);
  double worst = 0.0;
  bool support_ok = true;
  for (int j = 0; j <= n / 2 - 2; ++j) {
    const double aj = (j == 0) ? 2.0 : 1.0;
    const double omega = 2 * aj * aj + 8 * std::pow(p.lambda / p.kappa, 2) + 2;
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(chain.matrix.rows());
    w[chain.site_index({j, +1})] = aj / std::sqrt(omega);
    w[chain.site_index({j, -1})] = -aj / std::sqrt(omega);
    w[chain.site_index({j + 1, 0})] =
        Complex(0.0, 2.0 * std::sqrt(2.0) * p.lambda / p.kappa / std::sqrt(omega));
    w[chain.site_index({j + 2, +1})] = -1.0 / std::sqrt(omega);
    w[chain.site_index({j + 2, -1})] = 1.0 / std::sqrt(omega);
    // the state lives in the parity sector (-1)^j
    const int expected_parity = (j % 2 == 0) ? +1 : -1;
    const auto& own = (expected_parity < 0) ? split.odd_indices : split.even_indices;
    const auto& other = (expected_parity < 0) ? split.even_indices : split.odd_indices;
    for (Eigen::Index i : other) support_ok = support_ok && std::abs(w[i]) == 0.0;
    Eigen::VectorXcd wr(own.size());
    for (std::size_t i = 0; i < own.size(); ++i) wr[static_cast<Eigen::Index>(i)] = w[own[i]];
    const Eigen::MatrixXcd& sector = (expected_parity < 0) ? split.h_odd : split.h_even;
    worst = std::max(worst, (sector * wr).norm());
  }
  rec.add("5. H_o |phi_j> = 0 (odd j), H_e |phi_j> = 0 (even j)",
          worst < 1e-12 && support_ok,
          "max sector residual = " + fmt(worst) + ", support confined to (-1)^j parity");
}

// --- criterion 6: eta pairing ------------------------------------------------
void criterion_eta(Recorder& rec) {
  const ModelParams p{6, 1.0, 1.0, 1.0, 0.0};  // lambda = 0 mode
  double worst_comm = 0.0;
  for (int j : {1, 2}) worst_comm = std::max(worst_comm, eta_commutator_residual(p, j, 4));
  rec.add("6. [eta_j, H - omega_a n] = 0 (lambda=0, N=6)", worst_comm < 1e-12,
          "max commutator column norm = " + fmt(worst_comm));

  double worst_bh = 0.0;
  for (double u : {0.0, 3.0}) {
    for (int j : {1, 2}) {
      const BoseHubbardEtaReport rep = bose_hubbard_eta_check({6, 1.0, u}, j);
      worst_bh = std::max(worst_bh, rep.commutator_on_vacuum);
    }
  }
  rec.add("6. [eta_j, H_BH] |G> = 0 for U in {0, 3}", worst_bh < 1e-12,
          "max ||H_BH eta_j|G>|| = " + fmt(worst_bh));

  const double r1 = eta_pairing_residual(p, 1, 1, 4);
  const double r2 = eta_pairing_residual(p, 1, 2, 4);
  rec.add("6. (eta_j)^n |G> eigenstates (n=1, 2; cutoff 4)", r1 < 1e-12 && r2 < 1e-11,
          "n=1 residual = " + fmt(r1) + ", n=2 residual = " + fmt(r2));
}

// --- criterion 7: interference mechanisms ------------------------------------
void criterion_interference(Recorder& rec) {
  const int n = 8, l = 1;
  double worst = 0.0;
  for (double kap : kKappaGrid) {
    for (double lam : kLambdaGrid) {
      const ModelParams p{n, 1.0, 1.0, kap, lam};
      const TwoExcitationBasis basis = enumerate_basis(p);
      worst = std::max(worst, interference_residual(p, basis, Mechanism::Hubbard, l, 3));
      worst = std::max(worst, interference_residual(p, basis, Mechanism::JC, l, 3));
      worst = std::max(worst, interference_residual(p, basis, Mechanism::Mixed, l, 2));
      worst = std::max(worst, interference_residual(p, basis, Mechanism::Mixed, l, 3));
    }
  }
  // the JC process is a single-cavity identity; it survives kappa = 0
  {
    const ModelParams p{n, 1.0, 1.0, 0.0, 0.7};
    const TwoExcitationBasis basis = enumerate_basis(p);
    worst = std::max(worst, interference_residual(p, basis, Mechanism::JC, l, 3));
  }
  rec.add("7. Hubbard/JC/Mixed cancellations exact", worst < 1e-12,
          "max residual over grid = " + fmt(worst));

  const ModelParams p{n, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);
  const double perturbed = interference_residual(p, basis, Mechanism::Mixed, l, 3, 1.01);
  rec.add("7. mixed cancellation fails at 1% detuned ratio", perturbed > 1e-4 * p.kappa,
          "residual at 1.01 ratio = " + fmt(perturbed) + " (floor " + fmt(1e-4 * p.kappa) + ")");
}

// --- criterion 8: entanglement ------------------------------------------------
void criterion_entanglement(Recorder& rec) {
  const int n = 8;
  const ModelParams p{n, 1.0, 1.0, 1.0, 0.7};
  const TwoExcitationBasis basis = enumerate_basis(p);

  double worst_c = 0.0, worst_formula = 0.0;
  double worst_phi_plus = 0.0;
  for (int j = 1; j <= n / 2; ++j) {
    const BoundPairState psi = psi_state(p, basis, j);
    for (int l = 0; l < n; ++l) {
      const int lp = (l + j) % n;
      worst_c = std::max(worst_c, concurrence(psi.amplitudes.amplitudes, basis, l, lp));
      worst_formula = std::max(
          worst_formula,
          std::abs(concurrence(psi.amplitudes.amplitudes, basis, l, lp) -
                   concurrence_wootters(reduce_two_atoms(psi.amplitudes.amplitudes, basis, l, lp))));
      worst_phi_plus = std::max(
          worst_phi_plus,
          std::abs(1.0 - bell_overlap(psi.amplitudes.amplitudes, basis, l, lp, BellState::PhiPlus)));
    }
  }
  for (int j = 0; j <= n / 2 - 2; ++j) {
    const BoundPairState phi = phi_state(p, basis, j);
    for (int l = 0; l < n; ++l) {
      const int lp = (l + j + 1) % n;
      worst_c = std::max(worst_c, concurrence(phi.amplitudes.amplitudes, basis, l, lp));
      worst_formula = std::max(
          worst_formula,
          std::abs(concurrence(phi.amplitudes.amplitudes, basis, l, lp) -
                   concurrence_wootters(reduce_two_atoms(phi.amplitudes.amplitudes, basis, l, lp))));
    }
  }
  rec.add("8. atomic concurrence = 0 for both families", worst_c < 1e-12,
          "max concurrence = " + fmt(worst_c));
  rec.add("8. correlator concurrence = spin-flip concurrence", worst_formula < 1e-10,
          "max |difference| = " + fmt(worst_formula));
  rec.add("8. Bell overlap psi vs Phi+ = 1", worst_phi_plus < 1e-12,
          "max |1 - overlap| = " + fmt(worst_phi_plus));

  // strong coupling phi: measured against the Phi- target named by the
  // acceptance contract. The projected pair state is exactly the polariton
  // singlet (ud - du)/sqrt(2), which is orthogonal to Phi-; the singlet
  // overlap is reported alongside for the record.
  const ModelParams ps{n, 1.0, 1.0, 1.0, 100.0};
  const BoundPairState phi = phi_state(ps, basis, 1);
  const double phi_minus = bell_overlap(phi.amplitudes.amplitudes, basis, 0, 2, BellState::PhiMinus);
  const double psi_minus = bell_overlap(phi.amplitudes.amplitudes, basis, 0, 2, BellState::PsiMinus);
  rec.add("8. Bell overlap phi vs Phi- > 0.999 (lambda/kappa = 100)", phi_minus > 0.999,
          "Phi- overlap = " + fmt(phi_minus) + "; singlet (Psi-) overlap = " + fmt(psi_minus));
}

// --- criterion 9: oracle equivalence -------------------------------------------
void criterion_oracle(Recorder& rec) {
  const ModelParams p{4, 1.0, 1.0, 0.9, 0.6};
  const TwoExcitationBasis basis = enumerate_basis(p);
  const Eigen::MatrixXcd sparse_path = build_hamiltonian(p, basis).dense();
  const Eigen::MatrixXcd oracle = dense_tensor_oracle(p, basis);
  const double diff = (sparse_path - oracle).cwiseAbs().maxCoeff();
  rec.add("9. sparse H = dense tensor oracle (N=4)", diff < 1e-13,
          "max entrywise difference = " + fmt(diff));
}

}  // namespace

std::vector<CheckResult> run_verification(
    const std::function<void(const CheckResult&)>& sink) {
  Recorder rec{{}, sink};
  criterion_block_equality(rec);
  criterion_ladder_match(rec);
  criterion_flux(rec);
  criterion_spin_chain(rec);
  criterion_bound_pairs(rec);
  criterion_eta(rec);
  criterion_interference(rec);
  criterion_entanglement(rec);
  criterion_oracle(rec);
  return rec.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace jch
