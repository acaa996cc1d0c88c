// Independent qubit reference: real Bloch-space rotations and the frame
// conjugation that carries them onto the probability lattice. No complex
// numbers anywhere.
#pragma once

#include "entroqubit/core.hpp"
#include "entroqubit/rng.hpp"
#include "entroqubit/states.hpp"

namespace entroqubit {

// Real orthogonal matrix with det +1: a 2x2 planar rotation (trine use) or a
// 3x3 rotation (tetrahedron use). Both properties are checked at construction.
class BlochRotation {
 public:
  explicit BlochRotation(Eigen::MatrixXd m);

  static BlochRotation planar(double angle);  // counter-clockwise on (x, y)
  static BlochRotation axis_angle(const Eigen::Vector3d& axis, double angle);
  // rotation mapping unit vector `from` onto unit vector `to` (2D or 3D)
  static BlochRotation rotation_between(const Eigen::VectorXd& from,
                                        const Eigen::VectorXd& to);
  static BlochRotation random_so3(Rng& rng);  // uniform via quaternions

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

// Conjugate an orthogonal Bloch map through the frame:
//   S = (1/d) J + ((d-1)/d) F O F^T
// with F the d x (d-1) matrix of frame rows. The scalar is fixed by the
// requirement S p(b) = p(O b) for every Bloch point b.
QuasiBistochasticMatrix lift_to_lattice(const BlochRotation& rotation,
                                        const Frame& frame);

// The same conjugation for det -1 orthogonal maps (reflections, including the
// Bloch inversion). For d=3 the result lies in the discontinuous minus branch.
QuasiBistochasticMatrix reflection_lift(const Eigen::MatrixXd& reflection,
                                        const Frame& frame);

}  // namespace entroqubit
