// State spaces: the trine (d=3) and tetrahedron (d=4) frames, Bloch
// conversions, the positivity domain and its measured bounds, and the
// rotation correspondence between lattice dynamics and Bloch rotations.
#pragma once

#include <cstdint>

#include "entroqubit/core.hpp"
#include "entroqubit/rng.hpp"

namespace entroqubit {

// d unit vectors in dimension d-1 with zero sum and the overcompleteness
// identity sum_k v_k v_k^T = (d/(d-1)) I. Rows of vectors() are the frame
// directions.
class Frame {
 public:
  Frame(Eigen::MatrixXd vectors, const Tolerances& tol = {});

  static Frame trine();
  static Frame tetrahedron();
  static Frame standard(int d);  // d in {3, 4}

  int dim() const { return static_cast<int>(vectors_.rows()); }
  int bloch_dim() const { return static_cast<int>(vectors_.cols()); }
  Eigen::VectorXd vector(int k) const { return vectors_.row(k); }
  const Eigen::MatrixXd& vectors() const { return vectors_; }
  double overcompleteness_constant() const {
    return static_cast<double>(dim()) / (dim() - 1);
  }

 private:
  Eigen::MatrixXd vectors_;
};

struct BlochPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm() const;
  Eigen::VectorXd coords(int bloch_dim) const;  // (x,y) or (x,y,z)
  static BlochPoint from_coords(const Eigen::VectorXd& v);
};

// p_k = (1/d)(1 + frame_k . b). Requires |b| <= 1 (and b.z = 0 for d=3).
// The collision norm obeys |p|^2 = 1/d + |b|^2 / (d (d-1)).
ProbVector bloch_to_state(const BlochPoint& b, const Frame& frame,
                          const Tolerances& tol = {});

struct BlochResult {
  BlochPoint point;
  bool in_ball = false;  // |b| <= 1 + tol; quasi-states land outside
};

// Inverse via overcompleteness: b = (d-1) sum_k (p_k - 1/d) frame_k.
BlochResult state_to_bloch(const ProbVector& p, const Frame& frame,
                           const Tolerances& tol = {});

struct StateDomain {
  int d = 3;
  double norm_lo = 0.0;    // 1/d, at the uniform state
  double norm_hi = 0.0;    // K: 1/2 for d=3, 1/3 for d=4
  double lambda_max = 0.0; // 1/2 for d=3, 1/3 for d=4
  static StateDomain standard(int d);
};

enum class Membership { interior, extremal, outside_simplex, outside_ball };

// Classify against the standard domain with 1e-9 tolerance bands.
Membership domain_membership(const ProbVector& p, int d,
                             double band = 1e-9);

enum class DynamicsSet { full, permutations_only };

struct DomainBoundResult {
  double lambda_max = 0.0;       // on the vertex ray r = l*vertex + (1-l)*uniform
  double K = 0.0;                // |p|^2 at the tightest mixing over all rays
  double lambda_min_over_dirs = 0.0;  // robustness stats over random directions
  double lambda_max_over_dirs = 0.0;
  int directions_tested = 0;
};

struct DomainSearchOptions {
  DynamicsSet dynamics = DynamicsSet::full;
  int n_random_directions = 1000;
  int n_grid = 2048;          // angle grid per branch (d=3) / random rotations (d=4)
  double bisect_tol = 1e-8;
  std::uint64_t seed = 0x9d2c5680u;
};

// Largest mixing parameter lambda for which every sampled dynamics keeps
// r(lambda) = lambda*vertex + (1-lambda)*uniform inside the positive simplex.
// Each direction's sample set includes the exactly anti-aligning rotations,
// so the reported bound does not depend on grid luck.
DomainBoundResult domain_bound_search(int d,
                                      const DomainSearchOptions& opts = {},
                                      const Tolerances& tol = {});

struct CorrespondenceReport {
  int sigma = 0;              // +1 or -1, the pinned global rotation sign
  double max_deviation = 0.0;
  bool consistent = false;
};

// Verify S_plus(phi) p(b) = p(Rot(sigma*phi) b) over a (phi, theta, t) grid
// and pin the single global sign sigma. Throws StructuralError if no sign
// works across the whole grid.
CorrespondenceReport rotation_correspondence_check(
    int phi_steps = 100, int theta_steps = 100, int radius_steps = 10,
    const Tolerances& tol = {});

// Uniform sample of the full probability simplex (all of it, not the ball).
ProbVector sample_simplex(int d, Rng& rng);

// Uniform Bloch-ball sample mapped through the frame; always a domain state.
BlochPoint sample_bloch(const Frame& frame, Rng& rng);
ProbVector sample_domain_state(const Frame& frame, Rng& rng);

}  // namespace entroqubit
