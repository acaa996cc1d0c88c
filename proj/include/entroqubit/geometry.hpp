// Intersection of the unit n-sphere with the unit-sum hyperplane: recursive
// spherical coordinates rotated into place by a deterministic basis completion.
#pragma once

#include <vector>

#include "entroqubit/core.hpp"

namespace entroqubit {

// Angles live on the (n-2)-sphere of solutions; the last coefficient in the
// rotated basis is pinned to 1/sqrt(n), the rest carry radius^2 = 1 - 1/n.
struct SphereParam {
  int n = 2;
  std::vector<double> angles;  // n-2 entries
  double radius_sq() const { return 1.0 - 1.0 / n; }
};

// Orthogonal n x n matrix whose last column is (1,...,1)/sqrt(n); the other
// columns come from Gram-Schmidt over e_1, e_2, ... in index order, so the
// output is a fixed function of n (bit-identical across runs).
Eigen::MatrixXd complete_basis(int n);

// (b_1, ..., b_{n-1}) with sum of squares radius^2 via the recursion
// b_i = radius * sin(t_1)...sin(t_{i-1}) cos(t_i), last entry all-sines.
// `radius` may be negative: for n = 2 the solution set is the 0-sphere
// {+radius, -radius} and the sign is the only remaining coordinate.
Eigen::VectorXd sphere_point(int n, const std::vector<double>& angles,
                             double radius);

// Length-n vector a with sum(a) = 1 and sum(a^2) = 1: the rotated image of
// (sphere_point(n, angles, branch * sqrt(1 - 1/n)), 1/sqrt(n)).
// `branch` (+1/-1) selects the 0-sphere point when n = 2; for n >= 3 the
// negative branch is redundant but still valid.
Eigen::VectorXd simplex_sphere_point(int n, const std::vector<double>& angles,
                                     int branch = +1);

}  // namespace entroqubit
