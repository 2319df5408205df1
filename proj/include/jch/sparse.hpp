#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace jch {

using Complex = std::complex<double>;
using Triplet = Eigen::Triplet<Complex>;

/// Complex amplitude vector tagged with the basis it lives in. The tag is
/// purely descriptive; dimension agreement is what gets checked.
struct StateVector {
  Eigen::VectorXcd amplitudes;
  std::string basis_tag;

  Eigen::Index size() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
};

/// Hermitian (or general) operator in coordinate form over a fixed basis.
/// Entries are coalesced and stored column-major sorted, so exports are
/// deterministic. Application is matrix-free from the caller's viewpoint.
class SparseOperator {
 public:
  SparseOperator(Eigen::Index dim, const std::vector<Triplet>& entries,
                 bool hermitian);

  Eigen::Index dim() const { return mat_.rows(); }
  bool hermitian() const { return hermitian_; }

  /// Coalesced entries in deterministic (col, row) order.
  std::vector<Triplet> entries() const;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

  /// max_{(r,c)} |A_rc - conj(A_cr)|; 0 for an exactly Hermitian operator.
  double hermiticity_residual() const;

  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(mat_); }

  const Eigen::SparseMatrix<Complex>& matrix() const { return mat_; }

 private:
  Eigen::SparseMatrix<Complex> mat_;
  bool hermitian_;
};

}  // namespace jch
