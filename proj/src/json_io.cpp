#include "entroqubit/json_io.hpp"

#include <cstdio>

namespace entroqubit {

Json vector_to_json(const Eigen::VectorXd& v) {
  Json j;
  j["d"] = static_cast<int>(v.size());
  j["entries"] = std::vector<double>(v.data(), v.data() + v.size());
  return j;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix serialization expects a square matrix");
  }
  Json j;
  j["d"] = static_cast<int>(m.rows());
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      entries.push_back(m(i, k));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

Eigen::VectorXd vector_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  const auto entries = j.at("entries").get<std::vector<double>>();
  if (static_cast<int>(entries.size()) != d) {
    throw std::invalid_argument("entry count does not match d");
  }
  return Eigen::Map<const Eigen::VectorXd>(entries.data(), d);
}

Eigen::MatrixXd matrix_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  const auto entries = j.at("entries").get<std::vector<double>>();
  if (static_cast<int>(entries.size()) != d * d) {
    throw std::invalid_argument("entry count does not match d*d");
  }
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      m(i, k) = entries[static_cast<std::size_t>(i) * d + k];
    }
  }
  return m;
}

Json bloch_to_json(const BlochPoint& b) {
  Json j;
  j["x"] = b.x;
  j["y"] = b.y;
  j["z"] = b.z;
  return j;
}

BlochPoint bloch_from_json(const Json& j) {
  return {j.at("x").get<double>(), j.at("y").get<double>(),
          j.at("z").get<double>()};
}

Json frame_to_json(const Frame& f) {
  Json vectors = Json::array();
  for (int k = 0; k < f.dim(); ++k) {
    const Eigen::VectorXd v = f.vector(k);
    vectors.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  }
  return vectors;
}

Json effect_to_json(const Effect& e) {
  Json j;
  j["d"] = e.d;
  j["m_hat"] =
      std::vector<double>(e.m_hat.data(), e.m_hat.data() + e.m_hat.size());
  j["outcome"] = e.outcome > 0 ? "+" : "-";
  j["e"] = std::vector<double>(e.e.data(), e.e.data() + e.e.size());
  return j;
}

std::string format_double(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

}  // namespace entroqubit
