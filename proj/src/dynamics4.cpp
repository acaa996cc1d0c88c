#include "entroqubit/dynamics4.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "entroqubit/dynamics3.hpp"
#include "entroqubit/rng.hpp"

namespace entroqubit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Place the three-index circulant c_{(i-j) mod 3} on the non-fixed indices
// (increasing order) of a 4x4 matrix; `diag` fills the fixed position.
Eigen::Matrix4d embed(const std::array<double, 3>& c, int axis0, double diag) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(axis0, axis0) = diag;
  int idx[3];
  int n = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != axis0) idx[n++] = i;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(idx[i], idx[j]) = c[(i - j + 3) % 3];
    }
  }
  return m;
}

Eigen::Matrix4d elementary(int axis0, double phi) {
  return embed(splus_coefficients(phi), axis0, 1.0);
}

Eigen::Matrix4d elementary_derivative(int axis0, double phi) {
  return embed(splus_coefficient_derivatives(phi), axis0, 0.0);
}

Eigen::Matrix4d composed(const std::array<double, 4>& a) {
  return elementary(0, a[0]) * elementary(1, a[1]) * elementary(2, a[2]) *
         elementary(3, a[3]);
}

}  // namespace

QuasiBistochasticMatrix make_elementary(int axis, double phi) {
  if (axis < 1 || axis > 4) {
    throw std::invalid_argument("axis must be in 1..4");
  }
  return QuasiBistochasticMatrix(elementary(axis - 1, phi));
}

QuasiBistochasticMatrix make_composed(const std::array<double, 4>& angles) {
  return QuasiBistochasticMatrix(composed(angles));
}

namespace {

using Vec4 = Eigen::Vector4d;
using Residual = Eigen::Matrix<double, 16, 1>;

Residual residual_vector(const std::array<double, 4>& a,
                         const Eigen::Matrix4d& target) {
  const Eigen::Matrix4d diff = composed(a) - target;
  return Residual(Eigen::Map<const Residual>(diff.data()));
}

// Damped Gauss-Newton on the 16 entry residuals with the analytic Jacobian
// d(R1 R2 R3 R4)/d(phi_k) = prefix_k * R_k' * suffix_k.
struct LocalFit {
  std::array<double, 4> angles;
  double max_residual;
};

LocalFit refine(std::array<double, 4> a, const Eigen::Matrix4d& target,
                int max_iterations, double target_residual) {
  double damping = 1e-3;
  Residual r = residual_vector(a, target);
  double cost = r.squaredNorm();
  for (int iter = 0; iter < max_iterations; ++iter) {
    if (r.cwiseAbs().maxCoeff() <= 1e-2 * target_residual) break;
    Eigen::Matrix4d rot[4];
    Eigen::Matrix4d drot[4];
    for (int k = 0; k < 4; ++k) {
      rot[k] = elementary(k, a[k]);
      drot[k] = elementary_derivative(k, a[k]);
    }
    Eigen::Matrix4d prefix[4];
    Eigen::Matrix4d suffix[4];
    prefix[0] = Eigen::Matrix4d::Identity();
    for (int k = 1; k < 4; ++k) prefix[k] = prefix[k - 1] * rot[k - 1];
    suffix[3] = Eigen::Matrix4d::Identity();
    for (int k = 2; k >= 0; --k) suffix[k] = rot[k + 1] * suffix[k + 1];
    Eigen::Matrix<double, 16, 4> jac;
    for (int k = 0; k < 4; ++k) {
      const Eigen::Matrix4d dk = prefix[k] * drot[k] * suffix[k];
      jac.col(k) = Eigen::Map<const Residual>(dk.data());
    }
    const Eigen::Matrix4d jtj = jac.transpose() * jac;
    const Vec4 jtr = jac.transpose() * r;
    bool stepped = false;
    for (int attempt = 0; attempt < 12; ++attempt) {
      const Vec4 delta =
          (jtj + damping * Eigen::Matrix4d::Identity()).ldlt().solve(-jtr);
      std::array<double, 4> trial = a;
      for (int k = 0; k < 4; ++k) trial[k] += delta[k];
      const Residual rt = residual_vector(trial, target);
      const double trial_cost = rt.squaredNorm();
      if (trial_cost < cost) {
        a = trial;
        r = rt;
        cost = trial_cost;
        damping = std::max(damping / 3.0, 1e-14);
        stepped = delta.cwiseAbs().maxCoeff() > 1e-15;
        break;
      }
      damping *= 4.0;
    }
    if (!stepped) break;
  }
  return {a, r.cwiseAbs().maxCoeff()};
}

}  // namespace

FactorizeResult factorize(const QuasiBistochasticMatrix& s,
                          const FactorizeOptions& opts,
                          const Tolerances& tol) {
  if (s.dim() != 4) {
    throw std::invalid_argument("factorize expects a 4x4 matrix");
  }
  if (!s.orthogonal(tol)) {
    throw std::invalid_argument("factorize expects an orthogonal matrix");
  }
  if (std::abs(s.determinant() - 1.0) > 1e-8) {
    throw std::domain_error(
        "factorize covers the det +1 component only; reflections rejected");
  }
  const Eigen::Matrix4d target = s.entries();

  // Coarse 3^4 torus grid ranked by initial residual, then random starts.
  struct Seed {
    std::array<double, 4> angles;
    double score;
  };
  std::vector<Seed> seeds;
  seeds.reserve(81);
  const double steps[3] = {0.0, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0};
  for (int i = 0; i < 81; ++i) {
    std::array<double, 4> a = {steps[i % 3], steps[(i / 3) % 3],
                               steps[(i / 9) % 3], steps[(i / 27) % 3]};
    seeds.push_back({a, residual_vector(a, target).cwiseAbs().maxCoeff()});
  }
  std::sort(seeds.begin(), seeds.end(),
            [](const Seed& x, const Seed& y) { return x.score < y.score; });

  Rng rng(opts.seed);
  FactorizeResult result;
  result.residual = std::numeric_limits<double>::infinity();
  for (int start = 0; start < opts.max_starts; ++start) {
    std::array<double, 4> a;
    if (start < static_cast<int>(seeds.size())) {
      a = seeds[start].angles;
    } else {
      for (auto& v : a) v = rng.uniform(0.0, kTwoPi);
    }
    const LocalFit fit =
        refine(a, target, opts.max_iterations, opts.residual_target);
    ++result.starts_used;
    if (fit.max_residual < result.residual) {
      result.residual = fit.max_residual;
      result.angles = fit.angles;
    }
    if (result.residual <= opts.residual_target) {
      result.converged = true;
      break;
    }
  }
  for (auto& v : result.angles) {
    v = std::fmod(v, kTwoPi);
    if (v < 0.0) v += kTwoPi;
  }
  return result;
}

}  // namespace entroqubit
