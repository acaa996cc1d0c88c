// Two-outcome measurements on the lattice: effect vectors, Born-type
// probabilities, and the validity characterization over the state domain.
#pragma once

#include "entroqubit/core.hpp"
#include "entroqubit/states.hpp"

namespace entroqubit {

// e(+/-|m_hat) paired against states by a plain dot product. The entries may
// be negative even though every probability it produces is in [0, 1].
struct Effect {
  int d = 0;
  Eigen::VectorXd m_hat;  // unit Bloch direction (2D for d=3, 3D for d=4)
  int outcome = +1;       // +1 or -1
  Eigen::VectorXd e;      // length-d lattice effect
};

// e = (1/2)(1 +/- (d-1) v) with v_k = m_hat . frame_k. The (d-1) factor is
// the dual-frame weight that makes e . p(b) = (1/2)(1 +/- m_hat . b) exact.
Effect make_effect(const Eigen::VectorXd& m_hat, int outcome,
                   const Frame& frame);

struct ProbabilityResult {
  double value = 0.0;
  // set when p lies outside the state domain; the value is still returned
  bool domain_warning = false;
};

ProbabilityResult probability(const Effect& e, const ProbVector& p,
                              const Tolerances& tol = {});

struct EffectExtrema {
  double min = 0.0;  // smallest m . p over the state domain
  double max = 0.0;  // largest
};

// Closed form: m . p over the unit Bloch ball spans
//   (sum(m) -/+ |F^T m|) / d
// with F the frame matrix. Cross-checked against grid search in the tests.
EffectExtrema effect_extrema(const Eigen::VectorXd& m, int d);

// true iff 0 <= m . p <= 1 over the whole state domain (within tol.pos)
bool is_valid_effect(const Eigen::VectorXd& m, int d,
                     const Tolerances& tol = {});

}  // namespace entroqubit
