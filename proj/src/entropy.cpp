#include "entroqubit/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace entroqubit {

double renyi_entropy(const ProbVector& p, double alpha, const Tolerances& tol) {
  if (alpha < 0.0) throw std::domain_error("Renyi order must be >= 0");
  if (!p.positive())
    throw std::domain_error("entropy of a quasi-distribution is undefined");
  if (!p.normalized())
    throw std::domain_error("entropy requires a normalized distribution");

  // boundary round-off: entries in (-tol.pos, 0) count as 0
  Eigen::VectorXd q = p.entries().cwiseMax(0.0);

  if (alpha == 0.0) {
    int support = 0;
    for (int i = 0; i < q.size(); ++i)
      if (q(i) > tol.pos) ++support;
    return std::log(static_cast<double>(support));
  }
  if (alpha == 1.0) {
    double h = 0.0;
    for (int i = 0; i < q.size(); ++i)
      if (q(i) > 0.0) h -= q(i) * std::log(q(i));
    return h;
  }
  double power_sum = 0.0;
  for (int i = 0; i < q.size(); ++i)
    if (q(i) > 0.0) power_sum += std::pow(q(i), alpha);
  return std::log(power_sum) / (1.0 - alpha);
}

double collision_norm(const Eigen::VectorXd& v) { return v.squaredNorm(); }

double collision_entropy(const ProbVector& p, const Tolerances& tol) {
  return renyi_entropy(p, 2.0, tol);
}

ConservationCheck conserves_renyi(const QuasiBistochasticMatrix& s,
                                  double alpha, const StateSampler& sampler,
                                  int n_samples, Rng& rng,
                                  const Tolerances& tol) {
  ConservationCheck result;
  for (int i = 0; i < n_samples; ++i) {
    const ProbVector p = sampler(rng);
    const ProbVector evolved = apply(s, p, tol);
    if (!evolved.positive()) {
      ++result.domain_violations;
      continue;
    }
    const double before = renyi_entropy(p, alpha, tol);
    const double after = renyi_entropy(evolved, alpha, tol);
    result.max_deviation = std::max(result.max_deviation,
                                    std::abs(after - before));
  }
  result.conserved =
      result.domain_violations == 0 && result.max_deviation <= tol.ent;
  return result;
}

}  // namespace entroqubit
