#include "jch/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <queue>

namespace jch {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kPi = std::numbers::pi;

int mod(int x, int n) { return ((x % n) + n) % n; }

double wrap_to_pi(double phase) {
  while (phase > kPi) phase -= 2 * kPi;
  while (phase <= -kPi) phase += 2 * kPi;
  return phase;
}
}  // namespace

SparseOperator translation_operator(const TwoExcitationBasis& basis) {
  const int n = basis.n_sites();
  std::vector<Triplet> ts;
  ts.reserve(static_cast<std::size_t>(basis.size()));
  for (Eigen::Index c = 0; c < basis.size(); ++c) {
    const BasisState& s = basis.state(c);
    Eigen::Index r = 0;
    switch (s.kind) {
      case PairKind::DoublePhoton:
        r = basis.index({PairKind::DoublePhoton, mod(s.site_a + 1, n), mod(s.site_a + 1, n)});
        break;
      case PairKind::PhotonPhoton:
        r = basis.photon_pair(s.site_a + 1, s.site_b + 1);
        break;
      case PairKind::AtomAtom:
        r = basis.atom_pair(s.site_a + 1, s.site_b + 1);
        break;
      case PairKind::PhotonAtom:
        r = basis.photon_atom(s.site_a + 1, s.site_b + 1);
        break;
    }
    ts.emplace_back(r, c, Complex(1.0, 0.0));
  }
  return SparseOperator(basis.size(), ts, false);
}

Eigen::VectorXcd sector_state(const TwoExcitationBasis& basis, int m, int j, int leg) {
  const int n = basis.n_sites();
  const double k = 2 * kPi * m / n;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  for (int l = 0; l < n; ++l) {
    const Complex phase = std::exp(Complex(0.0, k * (l + 0.5 * j)));
    if (j == 0) {
      if (leg == 1) v[basis.photon_atom(l, l)] += phase;
      else if (leg == 2) v[basis.index({PairKind::DoublePhoton, l, l})] += phase;
      else throw std::invalid_argument("sector_state: column 0 has legs 1 and 2 only");
    } else {
      switch (leg) {
        case 1: v[basis.photon_atom(l, l + j)] += phase; break;
        case 2: v[basis.photon_pair(l, l + j)] += phase; break;
        case 3: v[basis.photon_atom(l + j, l)] += phase; break;
        case 4: v[basis.atom_pair(l, l + j)] += phase; break;
        default: throw std::invalid_argument("sector_state: leg out of range");
      }
    }
  }
  const double nrm = v.norm();
  if (nrm < 1e-9) return Eigen::VectorXcd::Zero(basis.size());
  return v / nrm;
}

std::vector<MomentumBlock> momentum_sectors(const SparseOperator& h,
                                            const SparseOperator& t,
                                            const ModelParams& params,
                                            const TwoExcitationBasis& basis,
                                            double tol) {
  const int n = basis.n_sites();
  // [H, T] residual, column by column through the sparse products.
  const Eigen::MatrixXcd hd = h.dense();
  const Eigen::MatrixXcd td = t.dense();
  const double comm = (hd * td - td * hd).cwiseAbs().maxCoeff();
  if (comm > tol) {
    throw std::runtime_error("momentum_sectors: [H, T] residual above tolerance");
  }

  std::vector<MomentumBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    MomentumBlock blk;
    blk.m = m;
    blk.k = 2 * kPi * m / n;
    blk.params = params;

    std::vector<LadderSite> labels;
    std::vector<Eigen::VectorXcd> cols;
    auto push = [&](int j, int leg) {
      Eigen::VectorXcd v = sector_state(basis, m, j, leg);
      if (v.norm() > 0.5) {
        labels.push_back({j, leg});
        cols.push_back(std::move(v));
      }
    };
    push(0, 1);
    push(0, 2);
    const int j_half = n / 2;  // last distinct column (n even); (n-1)/2 if odd
    const int j_top = (n % 2 == 0) ? j_half : (n - 1) / 2;
    for (int j = 1; j <= j_top; ++j) {
      if (n % 2 == 0 && j == j_half) {
        // antipodal column: legs 1 and 3 coincide up to a phase; keep leg 1.
        push(j, 1);
        push(j, 2);  // vanish identically at odd m
        push(j, 4);
      } else {
        for (int leg = 1; leg <= 4; ++leg) push(j, leg);
      }
    }

    blk.sector_basis.resize(basis.size(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) {
      blk.sector_basis.col(static_cast<Eigen::Index>(i)) = cols[i];
    }
    blk.labels = std::move(labels);
    blk.block = blk.sector_basis.adjoint() * hd * blk.sector_basis;
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

LadderParams ladder_params(const ModelParams& p, double k) {
  LadderParams lp;
  lp.leg_hopping = {-p.kappa * std::exp(Complex(0.0, k / 2)),
                    Complex(-2 * p.kappa * std::cos(k / 2), 0.0),
                    -p.kappa * std::exp(Complex(0.0, -k / 2)), Complex(0.0, 0.0)};
  lp.on_site = {p.omega_a + p.omega_b, 2 * p.omega_a, p.omega_a + p.omega_b,
                2 * p.omega_b};
  lp.rung_coupling = p.lambda;
  return lp;
}

Eigen::Index ladder_index(int j, int leg) {
  if (j == 0) {
    if (leg != 1 && leg != 2) throw std::invalid_argument("ladder_index: column 0 has legs 1, 2");
    return leg - 1;
  }
  if (leg < 1 || leg > 4) throw std::invalid_argument("ladder_index: leg out of range");
  return 2 + 4 * static_cast<Eigen::Index>(j - 1) + (leg - 1);
}

Eigen::MatrixXcd build_ladder_hk(const ModelParams& p, double k, int j_max,
                                 double rung_phase) {
  if (j_max < 2) throw std::invalid_argument("build_ladder_hk: j_max must be >= 2");
  const LadderParams lp = ladder_params(p, k);
  const Complex rung = lp.rung_coupling * std::exp(Complex(0.0, rung_phase));
  const Eigen::Index dim = 2 + 4 * static_cast<Eigen::Index>(j_max);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

  auto bond = [&](Eigen::Index a, Eigen::Index b, Complex v) {
    // v is the amplitude <a|H|b>
    h(a, b) += v;
    h(b, a) += std::conj(v);
  };

  // column 0: merged 1/3 leg and the double-photon leg
  h(ladder_index(0, 1), ladder_index(0, 1)) = lp.on_site[0];
  h(ladder_index(0, 2), ladder_index(0, 2)) = lp.on_site[1];
  bond(ladder_index(0, 1), ladder_index(0, 2), kSqrt2 * rung);
  // <1,leg|H|0,leg> = J_leg out of the merged site for legs 1 and 3,
  // sqrt(2) J_2 out of the double-photon site.
  bond(ladder_index(1, 1), ladder_index(0, 1), lp.leg_hopping[0]);
  bond(ladder_index(1, 3), ladder_index(0, 1), lp.leg_hopping[2]);
  bond(ladder_index(1, 2), ladder_index(0, 2), kSqrt2 * lp.leg_hopping[1]);

  for (int j = 1; j <= j_max; ++j) {
    for (int leg = 1; leg <= 4; ++leg) {
      h(ladder_index(j, leg), ladder_index(j, leg)) = lp.on_site[leg - 1];
    }
    for (int leg = 1; leg <= 3; ++leg) {
      bond(ladder_index(j, leg), ladder_index(j, leg + 1), rung);
    }
    bond(ladder_index(j, 4), ladder_index(j, 1), rung);  // |j,5> == |j,1>
    if (j < j_max) {
      for (int leg = 1; leg <= 4; ++leg) {
        if (std::abs(lp.leg_hopping[leg - 1]) > 0.0) {
          bond(ladder_index(j + 1, leg), ladder_index(j, leg), lp.leg_hopping[leg - 1]);
        }
      }
    }
  }
  return h;
}

double plaquette_flux(const Eigen::Ref<const Eigen::MatrixXcd>& ladder, int j,
                      int leg, int j_max) {
  if (j < 1 || j + 1 > j_max) {
    throw std::invalid_argument("plaquette_flux: column out of range");
  }
  if (leg < 1 || leg > 4) throw std::invalid_argument("plaquette_flux: leg out of range");
  const int leg2 = leg == 4 ? 1 : leg + 1;
  const Eigen::Index a = ladder_index(j, leg);
  const Eigen::Index b = ladder_index(j, leg2);
  const Eigen::Index c = ladder_index(j + 1, leg2);
  const Eigen::Index d = ladder_index(j + 1, leg);
  const double scale = std::max(1.0, ladder.cwiseAbs().maxCoeff());
  for (const Complex link : {ladder(a, b), ladder(b, c), ladder(c, d), ladder(d, a)}) {
    if (std::abs(link) < 1e-14 * scale) {
      throw flux_undefined_error("plaquette_flux: a link of the plaquette vanishes");
    }
  }
  const Complex prod = ladder(a, b) * ladder(b, c) * ladder(c, d) * ladder(d, a);
  return wrap_to_pi(std::arg(prod));
}

namespace {

// One interference component transition: basis index -> basis index with a
// relative sign on each side.
struct SignedState {
  Eigen::Index idx;
  double sign;
};

double step_phase(const Eigen::MatrixXcd& hd, const SignedState& x_from,
                  const SignedState& x_to, const SignedState& y_from,
                  const SignedState& y_to) {
  const Complex ax = x_to.sign * x_from.sign * hd(x_to.idx, x_from.idx);
  const Complex ay = y_to.sign * y_from.sign * hd(y_to.idx, y_from.idx);
  if (std::abs(ax) < 1e-14 || std::abs(ay) < 1e-14) {
    throw path_broken_error("two_path_interference: a component amplitude vanished");
  }
  if (std::abs(ax - ay) > 1e-12 * std::abs(ax)) {
    throw path_broken_error("two_path_interference: component amplitudes diverged");
  }
  return std::arg(ax);
}

}  // namespace

TwoPathPhases two_path_interference(const ModelParams& p,
                                    const TwoExcitationBasis& basis, int l, int j) {
  const int n = basis.n_sites();
  if (n % 2 != 0) {
    throw std::invalid_argument("two_path_interference: requires an even ring");
  }
  if (j < 1 || j > n - 3) {
    throw std::invalid_argument("two_path_interference: separation out of range");
  }
  const Eigen::MatrixXcd hd = build_hamiltonian(p, basis).dense();

  auto pa = [&](int ph, int at) { return basis.photon_atom(ph, at); };
  auto pp = [&](int a, int b) { return basis.photon_pair(a, b); };

  // |psi(l, l')> = (|1>_l |e>_l' - |1>_{l+1} |e>_{l'+1}) / sqrt(2)
  const SignedState src_x{pa(l, l + j), +1.0}, src_y{pa(l + 1, l + j + 1), -1.0};
  const SignedState fin_x{pa(l + j, l), +1.0}, fin_y{pa(l + j + 1, l + 1), -1.0};

  TwoPathPhases out{};

  // Path I: photon pair intermediate, two JC steps.
  {
    const SignedState m_x{pp(l, l + j), +1.0}, m_y{pp(l + 1, l + j + 1), -1.0};
    double ph = 0.0;
    ph += step_phase(hd, src_x, m_x, src_y, m_y);
    ph += step_phase(hd, m_x, fin_x, m_y, fin_y);
    out.phase_1 = wrap_to_pi(ph);
  }

  // Path II: hop, JC, hop, JC; the final hop exchanges the two components.
  {
    const SignedState a_x{pa(l + 1, l + j), +1.0}, a_y{pa(l, l + j + 1), -1.0};
    const SignedState b_x{pp(l + 1, l + j), +1.0}, b_y{pp(l, l + j + 1), -1.0};
    const SignedState c_x{pp(l + 1, l + j + 1), +1.0}, c_y{pp(l, l + j), -1.0};
    double ph = 0.0;
    ph += step_phase(hd, src_x, a_x, src_y, a_y);
    ph += step_phase(hd, a_x, b_x, a_y, b_y);
    ph += step_phase(hd, b_x, c_x, b_y, c_y);
    // c_x lands on the second component of the final state and c_y on the
    // first: the exchange is where the path picks up its sign.
    ph += step_phase(hd, c_x, fin_y, c_y, fin_x);
    out.phase_2 = wrap_to_pi(ph);
  }
  return out;
}

GaugeAlignment align_gauge(const Eigen::Ref<const Eigen::MatrixXcd>& a,
                           const Eigen::Ref<const Eigen::MatrixXcd>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("align_gauge: shape mismatch");
  }
  const Eigen::Index n = a.rows();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  GaugeAlignment out;
  out.phases = Eigen::VectorXcd::Ones(n);

  // BFS over the nonzero graph of `a`, propagating d_q = d_p a_pq / b_pq.
  std::vector<bool> vis(static_cast<std::size_t>(n), false);
  for (Eigen::Index root = 0; root < n; ++root) {
    if (vis[static_cast<std::size_t>(root)]) continue;
    vis[static_cast<std::size_t>(root)] = true;
    std::queue<Eigen::Index> q;
    q.push(root);
    while (!q.empty()) {
      const Eigen::Index p = q.front();
      q.pop();
      for (Eigen::Index r = 0; r < n; ++r) {
        if (vis[static_cast<std::size_t>(r)]) continue;
        if (std::abs(a(p, r)) > 1e-12 * scale && std::abs(b(p, r)) > 1e-12 * scale) {
          Complex ratio = out.phases[p] * a(p, r) / b(p, r);
          out.phases[r] = ratio / std::abs(ratio);
          vis[static_cast<std::size_t>(r)] = true;
          q.push(r);
        }
      }
    }
  }
  const Eigen::MatrixXcd d = out.phases.asDiagonal();
  out.residual = (b - d * a * d.adjoint()).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace jch
