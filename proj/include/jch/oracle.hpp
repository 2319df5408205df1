#pragma once

#include "jch/model.hpp"

namespace jch {

/// Independent reference construction of the two-excitation Hamiltonian: the
/// full per-site tensor space (photon 0..2 x atom g/e per cavity) is built
/// from Kronecker products of 6x6 single-site operators and the canonical
/// basis states are read off as tensor indices. Shares no code with the
/// sparse builder; exists purely so the two constructions can be compared.
/// Dense over 6^N, so n_sites <= 5.
Eigen::MatrixXcd dense_tensor_oracle(const ModelParams&, const TwoExcitationBasis&);

}  // namespace jch
