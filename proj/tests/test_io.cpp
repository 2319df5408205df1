#include <doctest.h>

#include "jch/io.hpp"
#include "jch/model.hpp"

using namespace jch;

TEST_CASE("15-significant-digit formatting is stable") {
  CHECK(format_g15(1.0) == "1");
  CHECK(format_g15(0.5) == "0.5");
  CHECK(format_g15(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_g15(-2.5e-13) == "-2.5e-13");
}

TEST_CASE("operator JSON schema and determinism") {
  const ModelParams p{4, 1.0, 1.0, 0.9, 0.6};
  const TwoExcitationBasis basis = enumerate_basis(p);
  const SparseOperator h = build_hamiltonian(p, basis);
  const nlohmann::json j1 = operator_to_json(h);
  const nlohmann::json j2 = operator_to_json(build_hamiltonian(p, basis));
  CHECK(j1["dim"] == 32);
  CHECK(j1.dump() == j2.dump());
  // every entry is [row, col, re, im]
  for (const auto& e : j1["entries"]) {
    REQUIRE(e.size() == 4);
    CHECK(e[0].is_number_integer());
    CHECK(e[3].is_number());
  }
}

TEST_CASE("spectrum CSV is one ascending value per line") {
  Eigen::VectorXd v(3);
  v << -1.25, 0.0, 3.5;
  CHECK(spectrum_to_csv(v) == "-1.25\n0\n3.5\n");
}
