#pragma once

#include <optional>

#include <Eigen/Dense>

namespace jch {

/// Full real spectrum of a Hermitian matrix, ascending. Eigenvector phases
/// are fixed deterministically (largest-magnitude component real positive).
struct Spectrum {
  Eigen::VectorXd values;
  std::optional<Eigen::MatrixXcd> vectors;
  double symmetrization_adjustment = 0.0;  // max |A - A^dag|/2 absorbed before solving
};

Spectrum eig_hermitian(const Eigen::Ref<const Eigen::MatrixXcd>& a,
                       bool with_vectors = false);

struct MultisetReport {
  bool equal = false;
  bool structural_mismatch = false;  // length mismatch: reported, not matched
  double max_gap = 0.0;
};

/// Greedy sorted matching of two real multisets; equal iff max pairwise gap
/// after sorting is below tol (absolute).
MultisetReport multiset_equal(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                              double tol);

}  // namespace jch
