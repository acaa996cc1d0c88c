// The d=3 family of orthogonal quasi-bistochastic matrices: construction,
// group structure, classification, signed Birkhoff-von Neumann decomposition,
// and the d=2 no-go sweep.
#pragma once

#include <array>
#include <vector>

#include "entroqubit/core.hpp"

namespace entroqubit {

enum class Chirality { plus, minus };  // determinant +1 / -1

// One element of the continuous d=3 family: angle phi (mod 2pi) plus the
// chirality selecting the rotation (plus) or reflection (minus) branch.
// The minus branch is a discontinuous, unphysical dynamics; it is modeled
// anyway because its exclusion-by-continuity is itself checkable.
struct RotationGenerator3 {
  double phi = 0.0;
  Chirality chirality = Chirality::plus;
};

// [0, 2pi) representative
double normalize_angle(double phi);

// q_k(phi) = (1 + 2 Re(w^k e^{i phi})) / 3, w = e^{i 2pi/3}:
//   q0 = 1/3 + (2/3) cos(phi)
//   q1 = 1/3 - (2/3) sin(pi/6 + phi)
//   q2 = 1/3 - (2/3) sin(pi/6 - phi)
// Each q_k lies in [-1/3, 1]; at most one is negative for any phi.
std::array<double, 3> splus_coefficients(double phi);
std::array<double, 3> splus_coefficient_derivatives(double phi);

// q0 I + q1 P + q2 P^2 with P the 3-cycle; circulant, orthogonal, det +1
QuasiBistochasticMatrix make_splus(double phi);
// the same coefficients in the symmetric anti-circulant pattern; det -1,
// an involution for every phi
QuasiBistochasticMatrix make_sminus(double phi);

QuasiBistochasticMatrix realize(const RotationGenerator3& g);

struct ComposeResult {
  RotationGenerator3 generator;
  QuasiBistochasticMatrix matrix;
};

// Product a*b within the family. plus*plus adds angles mod 2pi; products
// involving the minus branch are classified from the explicit matrix product.
ComposeResult compose(const RotationGenerator3& a, const RotationGenerator3& b);

// Coefficients of S = sum_k q_k P^k + sum_k r_k P^k R over the six d=3
// permutations. The six matrices are linearly dependent (I+P+P^2 = R+PR+P^2R),
// so coefficients carry a 1-dimensional gauge; the canonical representative is
// the minimum-Euclidean-norm solution, for which sum(q) = sum(r) = 1/2.
struct BvnDecomposition3 {
  Eigen::Vector3d q;
  Eigen::Vector3d r;
  Eigen::Matrix3d reconstruct() const;
  // gauge motion: (q + t, r - t) represents the same matrix
  BvnDecomposition3 shifted(double t) const;
};

BvnDecomposition3 decompose_bvn(const QuasiBistochasticMatrix& s);

struct Classification3 {
  enum class Family { splus, sminus, not_orthogonal };
  Family family = Family::not_orthogonal;
  double phi = 0.0;  // meaningful for splus/sminus only
};

// Fit an orthogonal quasi-bistochastic 3x3 matrix to one of the two branches
// and recover its angle. An orthogonal input matching neither branch within
// tolerance throws StructuralError (it would falsify the classification).
Classification3 classify_orthogonal_qbistoch3(const QuasiBistochasticMatrix& s,
                                              const Tolerances& tol = {});

struct D2NoGoReport {
  std::vector<double> orthogonal_points;  // q values found orthogonal
  double step = 0.0;
  int n_grid = 0;
};

// Sweep S = [[q, 1-q], [1-q, q]] over q in [-1, 2]; orthogonality should
// survive only at the permutation points q = 0 and q = 1.
D2NoGoReport d2_nogo_check(double step = 1e-4, const Tolerances& tol = {});

}  // namespace entroqubit
