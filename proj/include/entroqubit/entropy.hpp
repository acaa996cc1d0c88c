// Renyi-alpha entropies and the conservation predicate.
#pragma once

#include <functional>

#include "entroqubit/core.hpp"
#include "entroqubit/rng.hpp"

namespace entroqubit {

// H_alpha(p) = log(sum_i p_i^alpha) / (1 - alpha), natural log.
// alpha = 1 takes the Shannon limit, alpha = 0 counts the support.
// Requires p positive and normalized; entries inside (-tol.pos, 0) are
// clamped to 0 before evaluation.
double renyi_entropy(const ProbVector& p, double alpha,
                     const Tolerances& tol = {});

// |v|^2 = sum v_i^2 on an arbitrary real vector (no positivity assumed).
double collision_norm(const Eigen::VectorXd& v);

// H_2(p) = -log |p|^2
double collision_entropy(const ProbVector& p, const Tolerances& tol = {});

struct ConservationCheck {
  bool conserved = false;     // max_deviation <= tol.ent and no violations
  double max_deviation = 0.0; // max |H_a(Sp) - H_a(p)| over valid samples
  int domain_violations = 0;  // samples where S*p left the positive simplex
};

using StateSampler = std::function<ProbVector(Rng&)>;

// Scan |H_alpha(S p) - H_alpha(p)| over n_samples draws from `sampler`.
// A draw for which S*p has an entry below -tol.pos is counted as a domain
// violation (the sampler broke its contract), not as an entropy failure.
ConservationCheck conserves_renyi(const QuasiBistochasticMatrix& s,
                                  double alpha, const StateSampler& sampler,
                                  int n_samples, Rng& rng,
                                  const Tolerances& tol = {});

}  // namespace entroqubit
