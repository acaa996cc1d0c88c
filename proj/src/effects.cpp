#include "entroqubit/effects.hpp"

#include <cmath>

namespace entroqubit {

Effect make_effect(const Eigen::VectorXd& m_hat, int outcome,
                   const Frame& frame) {
  if (std::abs(m_hat.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("measurement direction must be a unit vector");
  }
  if (m_hat.size() != frame.bloch_dim()) {
    throw std::invalid_argument("measurement direction dimension mismatch");
  }
  if (outcome != +1 && outcome != -1) {
    throw std::invalid_argument("outcome must be +1 or -1");
  }
  const int d = frame.dim();
  Effect eff;
  eff.d = d;
  eff.m_hat = m_hat;
  eff.outcome = outcome;
  const Eigen::VectorXd v = frame.vectors() * m_hat;
  eff.e = 0.5 * (Eigen::VectorXd::Ones(d) + outcome * (d - 1.0) * v);
  return eff;
}

ProbabilityResult probability(const Effect& e, const ProbVector& p,
                              const Tolerances& tol) {
  if (p.dim() != e.d) {
    throw std::invalid_argument("state dimension does not match effect");
  }
  ProbabilityResult result;
  result.value = e.e.dot(p.entries());
  if (e.d == 3 || e.d == 4) {
    const Membership m = domain_membership(p, e.d);
    result.domain_warning = m == Membership::outside_simplex ||
                            m == Membership::outside_ball;
  } else {
    result.domain_warning = !(p.normalized() && p.positive());
  }
  (void)tol;
  return result;
}

EffectExtrema effect_extrema(const Eigen::VectorXd& m, int d) {
  if (m.size() != d) {
    throw std::invalid_argument("effect vector must have length d");
  }
  const Frame frame = Frame::standard(d);
  const double mean = m.sum();
  const double swing = (frame.vectors().transpose() * m).norm();
  return {(mean - swing) / d, (mean + swing) / d};
}

bool is_valid_effect(const Eigen::VectorXd& m, int d, const Tolerances& tol) {
  const EffectExtrema ex = effect_extrema(m, d);
  return ex.min >= -tol.pos && ex.max <= 1.0 + tol.pos;
}

}  // namespace entroqubit
