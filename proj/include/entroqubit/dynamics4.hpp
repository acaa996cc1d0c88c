// The d=4 dynamics: four elementary one-parameter rotation families, their
// ordered composition, and numerical factorization back into angles.
#pragma once

#include <array>
#include <cstdint>

#include "entroqubit/core.hpp"

namespace entroqubit {

// Elementary rotation fixing coordinate `axis` (1-based, 1..4) and carrying
// the d=3 circulant q_k(phi) on the remaining three indices in increasing
// order. Orthogonal, quasi-bistochastic, det +1; abelian in phi per axis.
QuasiBistochasticMatrix make_elementary(int axis, double phi);

// R1(a1) R2(a2) R3(a3) R4(a4) in this fixed order (R4 hits a state first).
QuasiBistochasticMatrix make_composed(const std::array<double, 4>& angles);

struct FactorizeOptions {
  int max_starts = 64;          // start budget before declaring no-convergence
  int max_iterations = 80;      // damped Gauss-Newton iterations per start
  double residual_target = 1e-8;
  std::uint64_t seed = 0x2545f491ULL;
};

struct FactorizeResult {
  bool converged = false;
  std::array<double, 4> angles{};  // a fiber point, each in [0, 2pi)
  double residual = 0.0;           // ||make_composed(angles) - S||_max
  int starts_used = 0;
};

// Find angles with make_composed(angles) == S up to residual_target.
// Multi-start least squares over the 4-torus: a coarse 3^4 grid ordered by
// initial residual, then random starts, deterministic for a fixed seed.
// The angle map is 4-to-3 dimensional, so the returned fiber point is one of
// infinitely many valid ones; only the residual is contractual.
// A det -1 input is rejected: the family covers the det +1 component only.
FactorizeResult factorize(const QuasiBistochasticMatrix& s,
                          const FactorizeOptions& opts = {},
                          const Tolerances& tol = {});

}  // namespace entroqubit
