#include "jch/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace jch {

std::string format_g15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

nlohmann::json operator_to_json(const SparseOperator& op) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& t : op.entries()) {
    entries.push_back({t.row(), t.col(), t.value().real(), t.value().imag()});
  }
  return {{"dim", op.dim()}, {"entries", entries}};
}

nlohmann::json matrix_to_json(const Eigen::Ref<const Eigen::MatrixXcd>& m,
                              double drop_below) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (std::abs(m(r, c)) > drop_below) {
        entries.push_back({r, c, m(r, c).real(), m(r, c).imag()});
      }
    }
  }
  return {{"dim", m.rows()}, {"entries", entries}};
}

std::string spectrum_to_csv(const Eigen::VectorXd& values) {
  std::string out;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    out += format_g15(values[i]);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
  f << content;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace jch
