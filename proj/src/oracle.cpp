#include "entroqubit/oracle.hpp"

#include <cmath>
#include <numbers>

namespace entroqubit {

namespace {

constexpr double kOrthTol = 1e-12;

void require_orthogonal(const Eigen::MatrixXd& m, double det_target) {
  const auto n = m.rows();
  if ((n != 2 && n != 3) || m.cols() != n) {
    throw std::invalid_argument("bloch map must be 2x2 or 3x3");
  }
  const Eigen::MatrixXd gram = m * m.transpose() -
      Eigen::MatrixXd::Identity(n, n);
  if (gram.cwiseAbs().maxCoeff() > kOrthTol) {
    throw std::invalid_argument("bloch map must be orthogonal");
  }
  if (std::abs(m.determinant() - det_target) > kOrthTol) {
    throw std::invalid_argument(det_target > 0
                                    ? "rotation must have det +1"
                                    : "reflection must have det -1");
  }
}

Eigen::MatrixXd conjugate_through_frame(const Eigen::MatrixXd& o,
                                        const Frame& frame) {
  if (o.rows() != frame.bloch_dim()) {
    throw std::invalid_argument("bloch map dimension does not match frame");
  }
  const int d = frame.dim();
  const Eigen::MatrixXd& f = frame.vectors();
  return Eigen::MatrixXd::Constant(d, d, 1.0 / d) +
         (d - 1.0) / d * f * o * f.transpose();
}

}  // namespace

BlochRotation::BlochRotation(Eigen::MatrixXd m) : m_(std::move(m)) {
  require_orthogonal(m_, +1.0);
}

BlochRotation BlochRotation::planar(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix2d m;
  m << c, -s,
       s, c;
  return BlochRotation(m);
}

BlochRotation BlochRotation::axis_angle(const Eigen::Vector3d& axis,
                                        double angle) {
  const double norm = axis.norm();
  if (norm < 1e-12) {
    throw std::invalid_argument("rotation axis must be nonzero");
  }
  const Eigen::Vector3d k = axis / norm;
  Eigen::Matrix3d cross;
  cross << 0, -k.z(), k.y(),
           k.z(), 0, -k.x(),
           -k.y(), k.x(), 0;
  const Eigen::Matrix3d m = std::cos(angle) * Eigen::Matrix3d::Identity() +
                            std::sin(angle) * cross +
                            (1.0 - std::cos(angle)) * k * k.transpose();
  return BlochRotation(m);
}

BlochRotation BlochRotation::rotation_between(const Eigen::VectorXd& from,
                                              const Eigen::VectorXd& to) {
  if (from.size() != to.size() || (from.size() != 2 && from.size() != 3)) {
    throw std::invalid_argument("endpoints must both be 2D or both 3D");
  }
  if (std::abs(from.norm() - 1.0) > 1e-9 || std::abs(to.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("endpoints must be unit vectors");
  }
  if (from.size() == 2) {
    return planar(std::atan2(to[1], to[0]) - std::atan2(from[1], from[0]));
  }
  const Eigen::Vector3d a = from;
  const Eigen::Vector3d b = to;
  const Eigen::Vector3d cross = a.cross(b);
  const double sin_angle = cross.norm();
  const double cos_angle = a.dot(b);
  if (sin_angle < 1e-12) {
    if (cos_angle > 0.0) {
      return BlochRotation(Eigen::Matrix3d::Identity());
    }
    // antipodal: any axis perpendicular to `a` turns it around
    int least = 0;
    a.cwiseAbs().minCoeff(&least);
    const Eigen::Vector3d axis =
        a.cross(Eigen::Vector3d::Unit(least)).normalized();
    return axis_angle(axis, std::numbers::pi);
  }
  return axis_angle(cross, std::atan2(sin_angle, cos_angle));
}

BlochRotation BlochRotation::random_so3(Rng& rng) {
  Eigen::Vector4d q = rng.gaussian_vector(4);
  while (q.norm() < 1e-12) q = rng.gaussian_vector(4);
  q.normalize();
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Eigen::Matrix3d m;
  m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
       2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
       2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return BlochRotation(m);
}

QuasiBistochasticMatrix lift_to_lattice(const BlochRotation& rotation,
                                        const Frame& frame) {
  return QuasiBistochasticMatrix(
      conjugate_through_frame(rotation.matrix(), frame));
}

QuasiBistochasticMatrix reflection_lift(const Eigen::MatrixXd& reflection,
                                        const Frame& frame) {
  require_orthogonal(reflection, -1.0);
  return QuasiBistochasticMatrix(conjugate_through_frame(reflection, frame));
}

}  // namespace entroqubit
