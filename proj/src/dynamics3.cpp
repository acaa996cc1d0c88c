#include "entroqubit/dynamics3.hpp"

#include <cmath>
#include <numbers>

namespace entroqubit {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix3d splus_pattern(const std::array<double, 3>& q) {
  Eigen::Matrix3d m;
  m << q[0], q[2], q[1],
       q[1], q[0], q[2],
       q[2], q[1], q[0];
  return m;
}

Eigen::Matrix3d sminus_pattern(const std::array<double, 3>& q) {
  Eigen::Matrix3d m;
  m << q[0], q[1], q[2],
       q[1], q[2], q[0],
       q[2], q[0], q[1];
  return m;
}

// phi from q0 and the antisymmetric combination of q1, q2
double angle_from_coefficients(double q0, double q1, double q2) {
  const double c = (3.0 * q0 - 1.0) / 2.0;
  const double s = std::sqrt(3.0) * (q2 - q1) / 2.0;
  return normalize_angle(std::atan2(s, c));
}

}  // namespace

double normalize_angle(double phi) {
  double r = std::fmod(phi, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  return r;
}

std::array<double, 3> splus_coefficients(double phi) {
  return {1.0 / 3.0 + (2.0 / 3.0) * std::cos(phi),
          1.0 / 3.0 - (2.0 / 3.0) * std::sin(kPi / 6.0 + phi),
          1.0 / 3.0 - (2.0 / 3.0) * std::sin(kPi / 6.0 - phi)};
}

std::array<double, 3> splus_coefficient_derivatives(double phi) {
  return {-(2.0 / 3.0) * std::sin(phi),
          -(2.0 / 3.0) * std::cos(kPi / 6.0 + phi),
          (2.0 / 3.0) * std::cos(kPi / 6.0 - phi)};
}

QuasiBistochasticMatrix make_splus(double phi) {
  return QuasiBistochasticMatrix(splus_pattern(splus_coefficients(phi)));
}

QuasiBistochasticMatrix make_sminus(double phi) {
  return QuasiBistochasticMatrix(sminus_pattern(splus_coefficients(phi)));
}

QuasiBistochasticMatrix realize(const RotationGenerator3& g) {
  return g.chirality == Chirality::plus ? make_splus(g.phi)
                                        : make_sminus(g.phi);
}

ComposeResult compose(const RotationGenerator3& a, const RotationGenerator3& b) {
  if (a.chirality == Chirality::plus && b.chirality == Chirality::plus) {
    const double phi = normalize_angle(a.phi + b.phi);
    return {RotationGenerator3{phi, Chirality::plus}, make_splus(phi)};
  }
  const QuasiBistochasticMatrix product(realize(a).entries() *
                                        realize(b).entries());
  const Classification3 c = classify_orthogonal_qbistoch3(product);
  const Chirality chir = c.family == Classification3::Family::splus
                             ? Chirality::plus
                             : Chirality::minus;
  return {RotationGenerator3{c.phi, chir}, product};
}

Eigen::Matrix3d BvnDecomposition3::reconstruct() const {
  const Eigen::Matrix3d cyc = PermutationMatrix::cycle(3).matrix();
  const Eigen::Matrix3d swap = PermutationMatrix::swap_last_two(3).matrix();
  Eigen::Matrix3d out = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d power = Eigen::Matrix3d::Identity();
  for (int k = 0; k < 3; ++k) {
    out += q(k) * power + r(k) * power * swap;
    power = cyc * power;
  }
  return out;
}

BvnDecomposition3 BvnDecomposition3::shifted(double t) const {
  return {Eigen::Vector3d(q.array() + t), Eigen::Vector3d(r.array() - t)};
}

BvnDecomposition3 decompose_bvn(const QuasiBistochasticMatrix& s) {
  if (s.dim() != 3) throw std::invalid_argument("decompose_bvn needs d = 3");

  const Eigen::Matrix3d cyc = PermutationMatrix::cycle(3).matrix();
  const Eigen::Matrix3d swap = PermutationMatrix::swap_last_two(3).matrix();

  Eigen::Matrix<double, 9, 6> basis;
  Eigen::Matrix3d power = Eigen::Matrix3d::Identity();
  for (int k = 0; k < 3; ++k) {
    basis.col(k) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(power.data());
    const Eigen::Matrix3d reflected = power * swap;
    basis.col(3 + k) =
        Eigen::Map<const Eigen::Matrix<double, 9, 1>>(reflected.data());
    power = cyc * power;
  }

  const Eigen::Map<const Eigen::Matrix<double, 9, 1>> target(
      s.entries().data());
  // rank-deficient by exactly one; this solve returns the min-norm coefficients
  const Eigen::Matrix<double, 6, 1> coeff =
      basis.completeOrthogonalDecomposition().solve(target);

  BvnDecomposition3 result{coeff.head<3>(), coeff.tail<3>()};
  const double residual =
      (result.reconstruct() - s.entries()).cwiseAbs().maxCoeff();
  if (residual > 1e-10)
    throw StructuralError("permutation span failed to reproduce the matrix");
  return result;
}

Classification3 classify_orthogonal_qbistoch3(const QuasiBistochasticMatrix& s,
                                              const Tolerances& tol) {
  if (s.dim() != 3) throw std::invalid_argument("classification needs d = 3");
  if (!s.orthogonal(tol)) return {Classification3::Family::not_orthogonal, 0.0};

  const Eigen::MatrixXd& m = s.entries();
  const double det = s.determinant();
  if (det > 0.0) {
    const double q0 = (m(0, 0) + m(1, 1) + m(2, 2)) / 3.0;
    const double q1 = (m(1, 0) + m(2, 1) + m(0, 2)) / 3.0;
    const double q2 = (m(2, 0) + m(0, 1) + m(1, 2)) / 3.0;
    const double phi = angle_from_coefficients(q0, q1, q2);
    if ((make_splus(phi).entries() - m).cwiseAbs().maxCoeff() <= 1e-10)
      return {Classification3::Family::splus, phi};
  } else {
    const double q0 = (m(0, 0) + m(1, 2) + m(2, 1)) / 3.0;
    const double q1 = (m(0, 1) + m(1, 0) + m(2, 2)) / 3.0;
    const double q2 = (m(0, 2) + m(1, 1) + m(2, 0)) / 3.0;
    const double phi = angle_from_coefficients(q0, q1, q2);
    if ((make_sminus(phi).entries() - m).cwiseAbs().maxCoeff() <= 1e-10)
      return {Classification3::Family::sminus, phi};
  }
  throw StructuralError(
      "orthogonal quasi-bistochastic 3x3 matrix fits neither branch");
}

D2NoGoReport d2_nogo_check(double step, const Tolerances& tol) {
  D2NoGoReport report;
  report.step = step;
  // integer-indexed grid over [-1, 2] so that q = 0 and q = 1 land exactly
  const int lo = static_cast<int>(std::llround(-1.0 / step));
  const int hi = static_cast<int>(std::llround(2.0 / step));
  report.n_grid = hi - lo + 1;
  for (int k = lo; k <= hi; ++k) {
    const double q = k * step;
    Eigen::Matrix2d s;
    s << q, 1.0 - q, 1.0 - q, q;
    if (orthogonality_residual(s) <= tol.orth)
      report.orthogonal_points.push_back(q);
  }
  return report;
}

}  // namespace entroqubit
