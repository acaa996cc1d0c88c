#include "entroqubit/geometry.hpp"

#include <cmath>

namespace entroqubit {

Eigen::MatrixXd complete_basis(int n) {
  check_dimension(n);
  Eigen::MatrixXd u(n, n);
  u.col(n - 1) = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  int filled = 0;
  for (int seed = 0; seed < n && filled < n - 1; ++seed) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, seed);
    // two projection passes keep the residual orthogonal to working precision
    for (int pass = 0; pass < 2; ++pass) {
      v -= u.col(n - 1).dot(v) * u.col(n - 1);
      for (int j = 0; j < filled; ++j) {
        v -= u.col(j).dot(v) * u.col(j);
      }
    }
    const double norm = v.norm();
    if (norm < 1e-10) continue;
    u.col(filled++) = v / norm;
  }
  if (filled != n - 1) {
    throw StructuralError("basis completion failed to span");
  }
  return u;
}

Eigen::VectorXd sphere_point(int n, const std::vector<double>& angles,
                             double radius) {
  if (n < 2) {
    throw std::invalid_argument("sphere dimension must be at least 2");
  }
  if (static_cast<int>(angles.size()) != n - 2) {
    throw std::invalid_argument("expected n-2 angles");
  }
  Eigen::VectorXd b(n - 1);
  double running = radius;
  for (int i = 0; i < n - 2; ++i) {
    b[i] = running * std::cos(angles[i]);
    running *= std::sin(angles[i]);
  }
  b[n - 2] = running;
  return b;
}

Eigen::VectorXd simplex_sphere_point(int n, const std::vector<double>& angles,
                                     int branch) {
  check_dimension(n);
  if (branch != +1 && branch != -1) {
    throw std::invalid_argument("branch must be +1 or -1");
  }
  const double radius = branch * std::sqrt(1.0 - 1.0 / n);
  Eigen::VectorXd b(n);
  b.head(n - 1) = sphere_point(n, angles, radius);
  b[n - 1] = 1.0 / std::sqrt(double(n));
  return complete_basis(n) * b;
}

}  // namespace entroqubit
