#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "jch/linalg.hpp"
#include "jch/sparse.hpp"

namespace jch {

/// Fixed 15-significant-digit formatting used everywhere a report is
/// written, so identical configs produce byte-identical files.
std::string format_g15(double x);

/// {dim, entries: [[row, col, re, im], ...]}, deterministic entry order.
nlohmann::json operator_to_json(const SparseOperator&);

nlohmann::json matrix_to_json(const Eigen::Ref<const Eigen::MatrixXcd>&,
                              double drop_below = 0.0);

/// One eigenvalue per line, ascending.
std::string spectrum_to_csv(const Eigen::VectorXd& ascending_values);

void write_text_file(const std::filesystem::path&, const std::string& content);
void write_json_file(const std::filesystem::path&, const nlohmann::json&);

}  // namespace jch
