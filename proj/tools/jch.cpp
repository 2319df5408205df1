// Command-line front end: every computation the library exposes, behind
// subcommands that write deterministic JSON/CSV reports.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>

#include "jch/acceptance.hpp"
#include "jch/entanglement.hpp"
#include "jch/exact_states.hpp"
#include "jch/io.hpp"
#include "jch/linalg.hpp"
#include "jch/model.hpp"
#include "jch/oracle.hpp"
#include "jch/spin_chain.hpp"
#include "jch/symmetry.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct RunConfig {
  jch::ModelParams model{8, 1.0, 1.0, 1.0, 0.7};
  double tol_spectral = 1e-10;
  double tol_residual = 1e-12;
  std::filesystem::path output_dir = "out";
  std::set<std::string> formats{"json", "csv"};
  std::vector<double> sweep_kappa;
  std::vector<double> sweep_lambda;
  std::vector<int> sweep_k;  // momentum indices m
  std::vector<int> sweep_j;  // separations
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw usage_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (j.contains("model")) {
    const auto& m = j["model"];
    if (m.contains("n_sites")) cfg.model.n_sites = m["n_sites"].get<int>();
    if (m.contains("omega_a")) cfg.model.omega_a = m["omega_a"].get<double>();
    if (m.contains("omega_b")) cfg.model.omega_b = m["omega_b"].get<double>();
    if (m.contains("kappa")) cfg.model.kappa = m["kappa"].get<double>();
    if (m.contains("lambda")) cfg.model.lambda = m["lambda"].get<double>();
  }
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    if (t.contains("spectral")) cfg.tol_spectral = t["spectral"].get<double>();
    if (t.contains("residual")) cfg.tol_residual = t["residual"].get<double>();
  }
  if (j.contains("output")) {
    const auto& o = j["output"];
    if (o.contains("directory")) cfg.output_dir = o["directory"].get<std::string>();
    if (o.contains("formats")) {
      cfg.formats.clear();
      for (const auto& s : o["formats"]) cfg.formats.insert(s.get<std::string>());
    }
  }
  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    if (s.contains("kappa")) cfg.sweep_kappa = s["kappa"].get<std::vector<double>>();
    if (s.contains("lambda")) cfg.sweep_lambda = s["lambda"].get<std::vector<double>>();
    if (s.contains("k")) cfg.sweep_k = s["k"].get<std::vector<int>>();
    if (s.contains("j")) cfg.sweep_j = s["j"].get<std::vector<int>>();
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.model.n_sites < 4) throw usage_error("n_sites must be at least 4");
  if (cfg.tol_spectral <= 0 || cfg.tol_residual <= 0) {
    throw usage_error("tolerances must be positive");
  }
  for (const auto& f : cfg.formats) {
    if (f != "json" && f != "csv") throw usage_error("unknown output format: " + f);
  }
  if (cfg.formats.empty()) throw usage_error("no output formats selected");
}

// parameter tag used in sweep file names
std::string tag(const jch::ModelParams& p) {
  return "N" + std::to_string(p.n_sites) + "_kappa" + jch::format_g15(p.kappa) +
         "_lambda" + jch::format_g15(p.lambda);
}

std::vector<jch::ModelParams> sweep_points(const RunConfig& cfg) {
  std::vector<double> ks =
      cfg.sweep_kappa.empty() ? std::vector<double>{cfg.model.kappa} : cfg.sweep_kappa;
  std::vector<double> ls =
      cfg.sweep_lambda.empty() ? std::vector<double>{cfg.model.lambda} : cfg.sweep_lambda;
  std::vector<jch::ModelParams> out;
  for (double k : ks) {
    for (double l : ls) {
      jch::ModelParams p = cfg.model;
      p.kappa = k;
      p.lambda = l;
      out.push_back(p);
    }
  }
  return out;
}

void emit_spectrum_csv(const RunConfig& cfg, const std::string& name,
                       const Eigen::VectorXd& values) {
  if (cfg.formats.count("csv")) {
    jch::write_text_file(cfg.output_dir / (name + ".csv"), jch::spectrum_to_csv(values));
  }
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg, const std::string& sector) {
  for (const jch::ModelParams& p : sweep_points(cfg)) {
    const jch::TwoExcitationBasis basis = jch::enumerate_basis(p);
    const jch::SparseOperator h = jch::build_hamiltonian(p, basis);
    if (sector.empty()) {
      const jch::Spectrum s = jch::eig_hermitian(h.dense());
      emit_spectrum_csv(cfg, "spectrum_" + tag(p), s.values);
      if (cfg.formats.count("json")) {
        jch::write_json_file(cfg.output_dir / ("hamiltonian_" + tag(p) + ".json"),
                             jch::operator_to_json(h));
      }
    } else {
      int m = 0;
      if (sector == "pi") {
        if (p.n_sites % 2 != 0) {
          throw usage_error(
              "the pi sector exists only on even rings: k = pi requires N even, got N = " +
              std::to_string(p.n_sites));
        }
        m = p.n_sites / 2;
      } else {
        m = std::stoi(sector);
        if (m < 0 || m >= p.n_sites) throw usage_error("sector index out of range");
      }
      const jch::SparseOperator t = jch::translation_operator(basis);
      const auto blocks = jch::momentum_sectors(h, t, p, basis, cfg.tol_residual);
      const jch::Spectrum s = jch::eig_hermitian(blocks[static_cast<std::size_t>(m)].block);
      emit_spectrum_csv(cfg, "spectrum_m" + std::to_string(m) + "_" + tag(p), s.values);
    }
  }
  return 0;
}

int cmd_blocks(const RunConfig& cfg) {
  int status = 0;
  for (const jch::ModelParams& p : sweep_points(cfg)) {
    const jch::TwoExcitationBasis basis = jch::enumerate_basis(p);
    const jch::SparseOperator h = jch::build_hamiltonian(p, basis);
    const jch::SparseOperator t = jch::translation_operator(basis);
    const auto blocks = jch::momentum_sectors(h, t, p, basis, cfg.tol_residual);

    std::vector<double> pooled;
    nlohmann::json index = nlohmann::json::array();
    for (const auto& blk : blocks) {
      const jch::Spectrum s = jch::eig_hermitian(blk.block);
      pooled.insert(pooled.end(), s.values.begin(), s.values.end());
      const std::string base = "block_m" + std::to_string(blk.m) + "_" + tag(p);
      if (cfg.formats.count("json")) {
        nlohmann::json labels = nlohmann::json::array();
        for (const auto& l : blk.labels) labels.push_back({l.j, l.leg});
        nlohmann::json jb = jch::matrix_to_json(blk.block, 1e-14);
        jb["k"] = blk.k;
        jb["m"] = blk.m;
        jb["ladder_labels"] = labels;
        jch::write_json_file(cfg.output_dir / (base + ".json"), jb);
      }
      emit_spectrum_csv(cfg, base, s.values);
      index.push_back({{"m", blk.m}, {"dim", blk.block.rows()}});
    }
    const jch::Spectrum full = jch::eig_hermitian(h.dense());
    Eigen::VectorXd pv =
        Eigen::Map<Eigen::VectorXd>(pooled.data(), static_cast<Eigen::Index>(pooled.size()));
    const jch::MultisetReport rep = jch::multiset_equal(full.values, pv, cfg.tol_spectral);
    if (cfg.formats.count("json")) {
      jch::write_json_file(cfg.output_dir / ("blocks_report_" + tag(p) + ".json"),
                           {{"blocks", index},
                            {"spectra_equal", rep.equal},
                            {"max_gap", rep.max_gap},
                            {"tolerance", cfg.tol_spectral}});
    }
    std::cout << tag(p) << ": block spectra " << (rep.equal ? "match" : "DIFFER")
              << " (max gap " << jch::format_g15(rep.max_gap) << ")\n";
    if (!rep.equal) status = 1;
  }
  return status;
}

int cmd_flux(const RunConfig& cfg, int column) {
  const jch::ModelParams& p = cfg.model;
  std::vector<int> ms = cfg.sweep_k;
  if (ms.empty()) {
    for (int m = 0; m < p.n_sites; ++m) ms.push_back(m);
  }
  std::string csv = "k,flux_legs12,flux_legs23\n";
  const int j_max = std::max(column + 1, 2);
  for (int m : ms) {
    const double k = 2 * kPi * m / p.n_sites;
    const Eigen::MatrixXcd ladder = jch::build_ladder_hk(p, k, j_max);
    std::string f12 = "nan", f23 = "nan";
    try {
      f12 = jch::format_g15(jch::plaquette_flux(ladder, column, 1, j_max));
    } catch (const jch::flux_undefined_error&) {
    }
    try {
      f23 = jch::format_g15(jch::plaquette_flux(ladder, column, 2, j_max));
    } catch (const jch::flux_undefined_error&) {
    }
    csv += jch::format_g15(k) + "," + f12 + "," + f23 + "\n";
  }
  jch::write_text_file(cfg.output_dir / ("flux_" + tag(p) + ".csv"), csv);
  std::cout << "flux table written (" << ms.size() << " momenta; undefined plaquettes as nan)\n";
  return 0;
}

int cmd_spin_chain(const RunConfig& cfg, int j_max) {
  const jch::ModelParams& p = cfg.model;
  const jch::SpinChainHamiltonian chain = jch::build_h_so(p, j_max);
  const jch::ParitySplit split = jch::split_parity(chain);
  if (cfg.formats.count("json")) {
    jch::write_json_file(cfg.output_dir / "h_so.json", jch::matrix_to_json(chain.matrix, 0.0));
    jch::write_json_file(cfg.output_dir / "h_odd.json", jch::matrix_to_json(split.h_odd, 0.0));
    jch::write_json_file(cfg.output_dir / "h_even.json", jch::matrix_to_json(split.h_even, 0.0));
  }
  emit_spectrum_csv(cfg, "h_so_spectrum", jch::eig_hermitian(chain.matrix).values);
  emit_spectrum_csv(cfg, "h_odd_spectrum", jch::eig_hermitian(split.h_odd).values);
  emit_spectrum_csv(cfg, "h_even_spectrum", jch::eig_hermitian(split.h_even).values);
  std::cout << "spin chain written: " << chain.matrix.rows() << " states, "
            << split.odd_indices.size() << " odd / " << split.even_indices.size()
            << " even parity\n";
  return 0;
}

int cmd_verify_pi(const RunConfig& cfg) {
  const jch::ModelParams& p = cfg.model;
  if (p.n_sites % 2 != 0) {
    throw usage_error("verify-pi: the pi sector requires an even ring (N even)");
  }
  const jch::TwoExcitationBasis basis = jch::enumerate_basis(p);
  const jch::SparseOperator h = jch::build_hamiltonian(p, basis);
  const jch::SparseOperator t = jch::translation_operator(basis);
  const auto blocks = jch::momentum_sectors(h, t, p, basis, cfg.tol_residual);
  const jch::MomentumBlock& blk = blocks[static_cast<std::size_t>(p.n_sites / 2)];
  const jch::SpinBasisMap map = jch::ladder_to_spin_basis(blk);

  const Eigen::Index dim = blk.block.rows();
  const Eigen::MatrixXcd m = map.unitary.adjoint() *
                             (blk.block - 2.0 * p.omega_a * Eigen::MatrixXcd::Identity(dim, dim)) *
                             map.unitary;
  double zero_rows = 0.0;
  for (Eigen::Index c : map.zero_mode_columns) {
    zero_rows = std::max(zero_rows, m.row(c).cwiseAbs().maxCoeff());
    zero_rows = std::max(zero_rows, m.col(c).cwiseAbs().maxCoeff());
  }
  const jch::SpinChainHamiltonian chain = jch::build_h_so(p, p.n_sites / 2 - 1);
  double interior = 0.0;
  for (Eigen::Index a : map.spin_columns) {
    for (Eigen::Index b : map.spin_columns) {
      const jch::SpinBasisLabel& la = map.labels[static_cast<std::size_t>(a)];
      const jch::SpinBasisLabel& lb = map.labels[static_cast<std::size_t>(b)];
      interior = std::max(interior,
                          std::abs(m(a, b) - chain.matrix(chain.site_index({la.j, la.pol}),
                                                          chain.site_index({lb.j, lb.pol}))));
    }
  }
  double cross = 0.0;
  for (std::size_t r = 0; r < chain.sites.size(); ++r) {
    for (std::size_t c = 0; c < chain.sites.size(); ++c) {
      if (chain.parity[r] != chain.parity[c]) {
        cross = std::max(cross, std::abs(chain.matrix(static_cast<Eigen::Index>(r),
                                                      static_cast<Eigen::Index>(c))));
      }
    }
  }
  const bool ok = zero_rows < cfg.tol_residual && interior < cfg.tol_residual && cross < 1e-14;
  nlohmann::json rep{{"zero_mode_rows", zero_rows},
                     {"interior_mismatch", interior},
                     {"cross_parity", cross},
                     {"tolerance", cfg.tol_residual},
                     {"passed", ok}};
  if (cfg.formats.count("json")) {
    jch::write_json_file(cfg.output_dir / ("verify_pi_" + tag(p) + ".json"), rep);
  }
  std::cout << (ok ? "PASS" : "FAIL") << " pi-sector equivalence: zero-mode rows "
            << jch::format_g15(zero_rows) << ", interior mismatch "
            << jch::format_g15(interior) << ", cross parity " << jch::format_g15(cross)
            << "\n";
  return ok ? 0 : 1;
}

int cmd_bound_pairs(const RunConfig& cfg) {
  int status = 0;
  for (const jch::ModelParams& p : sweep_points(cfg)) {
    const jch::TwoExcitationBasis basis = jch::enumerate_basis(p);
    const jch::SparseOperator h = jch::build_hamiltonian(p, basis);
    auto residual = [&](const Eigen::VectorXcd& v) {
      return (h.apply(v) - 2.0 * p.omega_a * v).norm();
    };
    std::string csv = "family,j,omega_j,residual,parity,singlet_overlap\n";
    bool all_ok = true;
    std::vector<int> js = cfg.sweep_j;
    if (js.empty()) {
      for (int j = 1; j <= p.n_sites / 2; ++j) js.push_back(j);
    }
    for (int j : js) {
      if (j < 1 || j > p.n_sites / 2) continue;
      const Eigen::VectorXcd raw = jch::psi_raw_sum(basis, j);
      if (raw.norm() < 1e-12) {
        csv += "psi," + std::to_string(j) + ",,vanishes,,\n";
        continue;
      }
      const double r = residual(raw / raw.norm());
      all_ok = all_ok && r < cfg.tol_residual;
      csv += "psi," + std::to_string(j) + ",," + jch::format_g15(r) + ",,\n";
    }
    for (int j = 0; j <= p.n_sites / 2 - 2; ++j) {
      if (!cfg.sweep_j.empty() &&
          std::find(cfg.sweep_j.begin(), cfg.sweep_j.end(), j) == cfg.sweep_j.end()) {
        continue;
      }
      const jch::BoundPairState s = jch::phi_state(p, basis, j);
      const double r = residual(s.amplitudes.amplitudes);
      all_ok = all_ok && r < cfg.tol_residual;
      // overlap with the pure staggered photon-atom singlet at distance j+1
      Eigen::VectorXcd target = Eigen::VectorXcd::Zero(basis.size());
      for (int l = 0; l < p.n_sites; ++l) {
        const double sg = (l % 2 == 0) ? 1.0 : -1.0;
        target[basis.photon_atom(l, l + j + 1)] += sg;
        target[basis.photon_atom(l + j + 1, l)] -= sg;
      }
      target /= target.norm();
      const double overlap = std::abs(target.dot(s.amplitudes.amplitudes));
      csv += "phi," + std::to_string(j) + "," + jch::format_g15(s.omega) + "," +
             jch::format_g15(r) + "," + ((j % 2 == 0) ? "even" : "odd") + "," +
             jch::format_g15(overlap) + "\n";
    }
    jch::write_text_file(cfg.output_dir / ("bound_pairs_" + tag(p) + ".csv"), csv);
    std::cout << tag(p) << ": bound pairs " << (all_ok ? "all at 2 omega_a" : "RESIDUAL TOO LARGE")
              << "\n";
    if (!all_ok) status = 1;
  }
  return status;
}

int cmd_eta_check(const RunConfig& cfg, int j, int n_pairs, int cutoff,
                  std::vector<double> u_values) {
  const jch::ModelParams& p = cfg.model;
  jch::ModelParams p0 = p;
  p0.lambda = 0.0;
  if (u_values.empty()) u_values = {0.0, 3.0};

  nlohmann::json rep;
  bool ok = true;
  const double comm = jch::eta_commutator_residual(p0, j, std::max(cutoff, 4));
  rep["commutator_residual"] = comm;
  ok = ok && comm < cfg.tol_residual;
  for (int n = 1; n <= n_pairs; ++n) {
    const double r = jch::eta_pairing_residual(p0, j, n, cutoff);
    rep["pairing_residual"][std::to_string(n)] = r;
    ok = ok && r < (n == 1 ? cfg.tol_residual : 1e-11);
  }
  for (double u : u_values) {
    const jch::BoseHubbardEtaReport b = jch::bose_hubbard_eta_check({p.n_sites, p.kappa, u}, j);
    rep["bose_hubbard"][jch::format_g15(u)] = {{"commutator_on_vacuum", b.commutator_on_vacuum},
                                               {"state_norm", b.state_norm},
                                               {"eigen_residual", b.eigen_residual}};
    ok = ok && b.commutator_on_vacuum < cfg.tol_residual;
  }
  rep["passed"] = ok;
  if (cfg.formats.count("json")) {
    jch::write_json_file(cfg.output_dir / ("eta_check_" + tag(p) + ".json"), rep);
  }
  std::cout << (ok ? "PASS" : "FAIL") << " eta checks: hopping commutator "
            << jch::format_g15(comm) << "\n";
  return ok ? 0 : 1;
}

int cmd_interference(const RunConfig& cfg, int l, int j, double ratio_scale) {
  const jch::ModelParams& p = cfg.model;
  const jch::TwoExcitationBasis basis = jch::enumerate_basis(p);
  const double hub = jch::interference_residual(p, basis, jch::Mechanism::Hubbard, l, j);
  const double jc = jch::interference_residual(p, basis, jch::Mechanism::JC, l, j);
  const double mixed = jch::interference_residual(p, basis, jch::Mechanism::Mixed, l, j);
  const double detuned =
      jch::interference_residual(p, basis, jch::Mechanism::Mixed, l, j, ratio_scale);
  const jch::TwoPathPhases ph = jch::two_path_interference(p, basis, l, j);
  nlohmann::json rep{{"hubbard_residual", hub},
                     {"jc_residual", jc},
                     {"mixed_residual", mixed},
                     {"mixed_residual_detuned", detuned},
                     {"ratio_scale", ratio_scale},
                     {"path_phase_1", ph.phase_1},
                     {"path_phase_2", ph.phase_2}};
  const bool ok = hub < cfg.tol_residual && jc < cfg.tol_residual && mixed < cfg.tol_residual;
  rep["passed"] = ok;
  if (cfg.formats.count("json")) {
    jch::write_json_file(cfg.output_dir / ("interference_" + tag(p) + ".json"), rep);
  }
  std::cout << (ok ? "PASS" : "FAIL") << " interference: hubbard " << jch::format_g15(hub)
            << ", jc " << jch::format_g15(jc) << ", mixed " << jch::format_g15(mixed)
            << ", detuned(" << jch::format_g15(ratio_scale) << ") "
            << jch::format_g15(detuned) << ", path phases (" << jch::format_g15(ph.phase_1)
            << ", " << jch::format_g15(ph.phase_2) << ")\n";
  return ok ? 0 : 1;
}

int cmd_entanglement(const RunConfig& cfg) {
  for (const jch::ModelParams& p : sweep_points(cfg)) {
    const jch::TwoExcitationBasis basis = jch::enumerate_basis(p);
    std::string csv =
        "family,j,l,lp,concurrence,u_plus,u_minus,abs_z,phi_plus,phi_minus,psi_plus,psi_minus,"
        "captured_weight\n";
    auto emit = [&](const char* family, int j, int l, int lp, const Eigen::VectorXcd& v) {
      const jch::CorrelatorSet c = jch::atomic_correlators(v, basis, l, lp);
      const jch::PolaritonProjection proj = jch::polariton_components(v, basis, l, lp);
      std::string bells = ",,,";
      if (!proj.degenerate) {
        bells = jch::format_g15(jch::bell_overlap(v, basis, l, lp, jch::BellState::PhiPlus)) +
                "," +
                jch::format_g15(jch::bell_overlap(v, basis, l, lp, jch::BellState::PhiMinus)) +
                "," +
                jch::format_g15(jch::bell_overlap(v, basis, l, lp, jch::BellState::PsiPlus)) +
                "," +
                jch::format_g15(jch::bell_overlap(v, basis, l, lp, jch::BellState::PsiMinus));
      }
      csv += std::string(family) + "," + std::to_string(j) + "," + std::to_string(l) + "," +
             std::to_string(lp) + "," + jch::format_g15(jch::concurrence(v, basis, l, lp)) +
             "," + jch::format_g15(c.u_plus) + "," + jch::format_g15(c.u_minus) + "," +
             jch::format_g15(std::abs(c.z)) + "," + bells + "," +
             jch::format_g15(proj.captured_weight) + "\n";
    };
    for (int j = 1; j <= p.n_sites / 2; ++j) {
      const Eigen::VectorXcd raw = jch::psi_raw_sum(basis, j);
      if (raw.norm() < 1e-12) continue;
      const Eigen::VectorXcd v = raw / raw.norm();
      for (int l = 0; l < p.n_sites; ++l) emit("psi", j, l, (l + j) % p.n_sites, v);
    }
    for (int j = 0; j <= p.n_sites / 2 - 2; ++j) {
      const Eigen::VectorXcd v = jch::phi_state(p, basis, j).amplitudes.amplitudes;
      for (int l = 0; l < p.n_sites; ++l) emit("phi", j, l, (l + j + 1) % p.n_sites, v);
    }
    jch::write_text_file(cfg.output_dir / ("entanglement_" + tag(p) + ".csv"), csv);
    std::cout << tag(p) << ": entanglement table written\n";
  }
  return 0;
}

int cmd_verify_all(const RunConfig& cfg) {
  int failures = 0;
  std::string report;
  const auto results = jch::run_verification([&](const jch::CheckResult& r) {
    const std::string line =
        std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.name + "  --  " + r.detail;
    std::cout << line << "\n" << std::flush;
    report += line + "\n";
    if (!r.passed) ++failures;
  });
  report += std::to_string(results.size()) + " checks, " + std::to_string(failures) +
            " failed\n";
  jch::write_text_file(cfg.output_dir / "verify_all.txt", report);
  std::cout << results.size() << " checks, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact diagonalization of the two-excitation Jaynes-Cummings-Hubbard ring:\n"
      "momentum blocks, the four-leg flux ladder, the spin-1 chain at k = pi,\n"
      "bound-pair eigenstates and their entanglement."};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path;
  app.add_option("--config", config_path, "JSON configuration file (flags override it)");
  // model flags mirror the config schema
  int n_sites = -1;
  double omega_a = NAN, omega_b = NAN, kappa = NAN, lambda = NAN;
  double tol_spectral = NAN, tol_residual = NAN;
  std::string output_dir;
  std::vector<std::string> formats;
  app.add_option("-N,--n-sites", n_sites, "number of cavities (>= 4)");
  app.add_option("--omega-a", omega_a, "photon frequency");
  app.add_option("--omega-b", omega_b, "atomic splitting");
  app.add_option("--kappa", kappa, "inter-cavity hopping");
  app.add_option("--lambda", lambda, "JC coupling");
  app.add_option("--tol-spectral", tol_spectral, "spectral comparison tolerance");
  app.add_option("--tol-residual", tol_residual, "residual norm tolerance");
  app.add_option("-o,--output-dir", output_dir,
                 "report directory (env JCH_OUTPUT_DIR overrides the default)");
  app.add_option("--format", formats, "output formats: json, csv (repeatable)");
  app.add_option("--sweep-kappa", cfg.sweep_kappa, "kappa grid");
  app.add_option("--sweep-lambda", cfg.sweep_lambda, "lambda grid");
  app.add_option("--sweep-k", cfg.sweep_k, "momentum index grid");
  app.add_option("--sweep-j", cfg.sweep_j, "separation grid");

  std::string sector;
  CLI::App* spectrum = app.add_subcommand("spectrum", "full or per-sector eigenvalues");
  spectrum->add_option("--sector", sector, "momentum index m, or 'pi'");

  app.add_subcommand("blocks", "momentum decomposition and spectra equality report");

  int flux_column = 1;
  CLI::App* flux = app.add_subcommand("flux", "plaquette flux vs momentum table");
  flux->add_option("--column", flux_column, "ladder column of the probed plaquettes");

  int j_max = 8;
  CLI::App* spin = app.add_subcommand("spin-chain", "H_SO and its parity halves");
  spin->add_option("--j-max", j_max, "open truncation length");

  app.add_subcommand("verify-pi", "pi-sector equivalence chain with residuals");

  app.add_subcommand("bound-pairs", "residual table for both bound-pair families");

  int eta_j = 1, eta_pairs = 2, eta_cutoff = 4;
  std::vector<double> eta_u;
  CLI::App* eta = app.add_subcommand("eta-check", "pair-creation operator identities");
  eta->add_option("--j", eta_j, "pair separation");
  eta->add_option("--n-pairs", eta_pairs, "highest pair number to verify");
  eta->add_option("--cutoff", eta_cutoff, "per-site photon cutoff");
  eta->add_option("--u", eta_u, "Bose-Hubbard interaction values");

  int int_l = 1, int_j = 3;
  double ratio_scale = 1.01;
  CLI::App* intf = app.add_subcommand("interference", "cancellation residuals and path phases");
  intf->add_option("--l", int_l, "left site of the probed pattern");
  intf->add_option("--j", int_j, "separation of the probed pattern");
  intf->add_option("--ratio-scale", ratio_scale, "detuning factor for the mixed ratio");

  app.add_subcommand("entanglement", "concurrence and Bell tables for the bound pairs");

  app.add_subcommand("verify-all", "run the complete verification battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!config_path.empty()) load_config_file(cfg, config_path);
    if (n_sites > 0) cfg.model.n_sites = n_sites;
    if (!std::isnan(omega_a)) cfg.model.omega_a = omega_a;
    if (!std::isnan(omega_b)) cfg.model.omega_b = omega_b;
    if (!std::isnan(kappa)) cfg.model.kappa = kappa;
    if (!std::isnan(lambda)) cfg.model.lambda = lambda;
    if (!std::isnan(tol_spectral)) cfg.tol_spectral = tol_spectral;
    if (!std::isnan(tol_residual)) cfg.tol_residual = tol_residual;
    if (const char* env = std::getenv("JCH_OUTPUT_DIR"); env && output_dir.empty()) {
      cfg.output_dir = env;
    }
    if (!output_dir.empty()) cfg.output_dir = output_dir;
    if (!formats.empty()) cfg.formats = std::set<std::string>(formats.begin(), formats.end());
    validate(cfg);

    if (spectrum->parsed()) return cmd_spectrum(cfg, sector);
    if (app.got_subcommand("blocks")) return cmd_blocks(cfg);
    if (flux->parsed()) return cmd_flux(cfg, flux_column);
    if (spin->parsed()) return cmd_spin_chain(cfg, j_max);
    if (app.got_subcommand("verify-pi")) return cmd_verify_pi(cfg);
    if (app.got_subcommand("bound-pairs")) return cmd_bound_pairs(cfg);
    if (eta->parsed()) return cmd_eta_check(cfg, eta_j, eta_pairs, eta_cutoff, eta_u);
    if (intf->parsed()) return cmd_interference(cfg, int_l, int_j, ratio_scale);
    if (app.got_subcommand("entanglement")) return cmd_entanglement(cfg);
    if (app.got_subcommand("verify-all")) return cmd_verify_all(cfg);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
