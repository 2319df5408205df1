#include "jch/sparse.hpp"

#include <stdexcept>

namespace jch {

SparseOperator::SparseOperator(Eigen::Index dim, const std::vector<Triplet>& entries,
                               bool hermitian)
    : mat_(dim, dim), hermitian_(hermitian) {
  for (const auto& t : entries) {
    if (t.row() < 0 || t.row() >= dim || t.col() < 0 || t.col() >= dim) {
      throw std::out_of_range("SparseOperator: entry index outside [0, dim)");
    }
  }
  mat_.setFromTriplets(entries.begin(), entries.end());
  mat_.prune([](Eigen::Index, Eigen::Index, const Complex& v) {
    return v != Complex(0.0, 0.0);
  });
  mat_.makeCompressed();
}

std::vector<Triplet> SparseOperator::entries() const {
  std::vector<Triplet> out;
  out.reserve(static_cast<std::size_t>(mat_.nonZeros()));
  for (Eigen::Index c = 0; c < mat_.outerSize(); ++c) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(mat_, c); it; ++it) {
      out.emplace_back(it.row(), it.col(), it.value());
    }
  }
  return out;
}

Eigen::VectorXcd SparseOperator::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != mat_.cols()) {
    throw std::invalid_argument("SparseOperator::apply: dimension mismatch");
  }
  return mat_ * v;
}

double SparseOperator::hermiticity_residual() const {
  Eigen::SparseMatrix<Complex> diff = mat_ - Eigen::SparseMatrix<Complex>(mat_.adjoint());
  double worst = 0.0;
  for (Eigen::Index c = 0; c < diff.outerSize(); ++c) {
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(diff, c); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

}  // namespace jch
