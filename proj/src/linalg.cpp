#include "jch/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace jch {

Spectrum eig_hermitian(const Eigen::Ref<const Eigen::MatrixXcd>& a, bool with_vectors) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_hermitian: matrix not square");
  if (!a.allFinite()) throw std::invalid_argument("eig_hermitian: non-finite entries");

  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double herm = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12 * scale) {
    throw std::invalid_argument("eig_hermitian: hermiticity residual above tolerance");
  }
  Eigen::MatrixXcd sym = 0.5 * (a + a.adjoint());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      sym, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: solver failed to converge");
  }

  Spectrum out;
  out.values = solver.eigenvalues();
  out.symmetrization_adjustment = herm / 2.0;
  if (with_vectors) {
    Eigen::MatrixXcd vecs = solver.eigenvectors();
    for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
      Eigen::Index imax = 0;
      vecs.col(c).cwiseAbs().maxCoeff(&imax);
      const std::complex<double> pivot = vecs(imax, c);
      if (std::abs(pivot) > 0.0) vecs.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
    out.vectors = std::move(vecs);
  }
  return out;
}

MultisetReport multiset_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                              double tol) {
  MultisetReport rep;
  if (a.size() != b.size()) {
    rep.structural_mismatch = true;
    rep.max_gap = std::numeric_limits<double>::infinity();
    return rep;
  }
  Eigen::VectorXd sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  rep.max_gap = (sa - sb).cwiseAbs().maxCoeff();
  rep.equal = rep.max_gap < tol;
  return rep;
}

}  // namespace jch
