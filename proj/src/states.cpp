#include "entroqubit/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "entroqubit/dynamics3.hpp"
#include "entroqubit/entropy.hpp"
#include "entroqubit/oracle.hpp"

namespace entroqubit {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_frame(const Eigen::MatrixXd& vectors, const Tolerances& tol) {
  const int d = static_cast<int>(vectors.rows());
  if (d < 2 || vectors.cols() != d - 1) {
    throw std::invalid_argument("frame must hold d unit vectors in R^(d-1)");
  }
  for (int k = 0; k < d; ++k) {
    if (std::abs(vectors.row(k).norm() - 1.0) > tol.pos) {
      throw std::invalid_argument("frame vectors must have unit norm");
    }
  }
  if (vectors.colwise().sum().cwiseAbs().maxCoeff() > d * tol.pos) {
    throw std::invalid_argument("frame vectors must sum to zero");
  }
  const double scale = static_cast<double>(d) / (d - 1);
  const Eigen::MatrixXd gram = vectors.transpose() * vectors -
      scale * Eigen::MatrixXd::Identity(d - 1, d - 1);
  if (gram.cwiseAbs().maxCoeff() > d * d * tol.pos) {
    throw std::invalid_argument("frame must resolve the identity");
  }
}

}  // namespace

Frame::Frame(Eigen::MatrixXd vectors, const Tolerances& tol)
    : vectors_(std::move(vectors)) {
  validate_frame(vectors_, tol);
}

Frame Frame::trine() {
  const double s = std::sqrt(3.0) / 2.0;
  Eigen::MatrixXd v(3, 2);
  v << 0.0, 1.0,
       s, -0.5,
       -s, -0.5;
  return Frame(std::move(v));
}

Frame Frame::tetrahedron() {
  Eigen::MatrixXd v(4, 3);
  const double a = std::sqrt(8.0 / 9.0);
  const double b = std::sqrt(2.0 / 9.0);
  const double c = std::sqrt(2.0 / 3.0);
  v << 0.0, 0.0, 1.0,
       a, 0.0, -1.0 / 3.0,
       -b, c, -1.0 / 3.0,
       -b, -c, -1.0 / 3.0;
  return Frame(std::move(v));
}

Frame Frame::standard(int d) {
  if (d == 3) return trine();
  if (d == 4) return tetrahedron();
  throw std::invalid_argument("standard frames exist for d=3 and d=4 only");
}

double BlochPoint::norm() const { return std::sqrt(x * x + y * y + z * z); }

Eigen::VectorXd BlochPoint::coords(int bloch_dim) const {
  if (bloch_dim == 2) {
    if (std::abs(z) > 1e-12) {
      throw std::invalid_argument("planar coordinates requested off the plane");
    }
    return Eigen::Vector2d(x, y);
  }
  if (bloch_dim == 3) return Eigen::Vector3d(x, y, z);
  throw std::invalid_argument("bloch dimension must be 2 or 3");
}

BlochPoint BlochPoint::from_coords(const Eigen::VectorXd& v) {
  if (v.size() == 2) return {v[0], v[1], 0.0};
  if (v.size() == 3) return {v[0], v[1], v[2]};
  throw std::invalid_argument("bloch coordinates must have 2 or 3 entries");
}

ProbVector bloch_to_state(const BlochPoint& b, const Frame& frame,
                          const Tolerances& tol) {
  if (frame.bloch_dim() == 2 && std::abs(b.z) > 1e-12) {
    throw std::invalid_argument("planar frame requires b.z = 0");
  }
  if (b.norm() > 1.0 + tol.pos) {
    throw std::domain_error("bloch point lies outside the unit ball");
  }
  const Eigen::VectorXd coords = b.coords(frame.bloch_dim());
  const int d = frame.dim();
  Eigen::VectorXd p(d);
  for (int k = 0; k < d; ++k) {
    p[k] = (1.0 + frame.vector(k).dot(coords)) / d;
  }
  return ProbVector(p, tol);
}

BlochResult state_to_bloch(const ProbVector& p, const Frame& frame,
                           const Tolerances& tol) {
  const int d = frame.dim();
  if (p.dim() != d) {
    throw std::invalid_argument("state dimension does not match frame");
  }
  if (!p.normalized()) {
    throw std::invalid_argument("state must be normalized");
  }
  Eigen::VectorXd coords = Eigen::VectorXd::Zero(frame.bloch_dim());
  for (int k = 0; k < d; ++k) {
    coords += (d - 1.0) * (p[k] - 1.0 / d) * frame.vector(k);
  }
  BlochResult result;
  result.point = BlochPoint::from_coords(coords);
  result.in_ball = result.point.norm() <= 1.0 + tol.pos;
  return result;
}

StateDomain StateDomain::standard(int d) {
  if (d == 3) return {3, 1.0 / 3.0, 0.5, 0.5};
  if (d == 4) return {4, 0.25, 1.0 / 3.0, 1.0 / 3.0};
  throw std::invalid_argument("standard domains exist for d=3 and d=4 only");
}

Membership domain_membership(const ProbVector& p, int d, double band) {
  if (p.dim() != d) {
    throw std::invalid_argument("state dimension mismatch");
  }
  const StateDomain dom = StateDomain::standard(d);
  if (std::abs(p.entries().sum() - 1.0) > band ||
      p.entries().minCoeff() < -band) {
    return Membership::outside_simplex;
  }
  const double norm2 = collision_norm(p.entries());
  if (norm2 > dom.norm_hi + band) return Membership::outside_ball;
  if (norm2 >= dom.norm_hi - band) return Membership::extremal;
  return Membership::interior;
}

namespace {

std::vector<Eigen::MatrixXd> all_permutation_matrices(int d) {
  std::vector<int> image(d);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Eigen::MatrixXd> out;
  do {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j < d; ++j) m(image[j], j) = 1.0;
    out.push_back(std::move(m));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// Matrices probed against every ray. The grid covers the dynamics densely;
// the per-direction worst cases are added separately below.
std::vector<Eigen::MatrixXd> grid_dynamics(int d, DynamicsSet set, int n_grid,
                                           Rng& rng) {
  if (set == DynamicsSet::permutations_only) {
    return all_permutation_matrices(d);
  }
  std::vector<Eigen::MatrixXd> out;
  if (d == 3) {
    out.reserve(2 * static_cast<std::size_t>(n_grid));
    for (int j = 0; j < n_grid; ++j) {
      const double phi = 2.0 * kPi * j / n_grid;
      out.push_back(make_splus(phi).entries());
      out.push_back(make_sminus(phi).entries());
    }
  } else {
    const Frame frame = Frame::tetrahedron();
    out.reserve(static_cast<std::size_t>(n_grid) + 1);
    out.push_back(Eigen::MatrixXd::Identity(4, 4));
    for (int j = 0; j + 1 < n_grid; ++j) {
      out.push_back(
          lift_to_lattice(BlochRotation::random_so3(rng), frame).entries());
    }
  }
  return out;
}

// Rotations sending the ray direction u exactly onto -frame_k; these realize
// the most negative reachable entry on the ray, independent of grid luck.
std::vector<Eigen::MatrixXd> worst_case_dynamics(const Frame& frame,
                                                 const Eigen::VectorXd& u) {
  std::vector<Eigen::MatrixXd> out;
  const int d = frame.dim();
  for (int k = 0; k < d; ++k) {
    const Eigen::VectorXd target = -frame.vector(k);
    if (d == 3) {
      const double phi =
          std::atan2(target[1], target[0]) - std::atan2(u[1], u[0]);
      out.push_back(make_splus(phi).entries());
      out.push_back(make_splus(-phi).entries());
    } else {
      out.push_back(
          lift_to_lattice(BlochRotation::rotation_between(u, target), frame)
              .entries());
    }
  }
  return out;
}

struct RayBound {
  double lambda = 1.0;
  double norm2 = 0.0;
};

// Along p(l) = uniform + l * dir every entry of S p(l) equals 1/d + l * w for
// a slope w fixed by (S, entry), so one pass collects the most negative slope
// and feasibility of any l is a single comparison inside the bisection.
RayBound lambda_for_direction(const Eigen::VectorXd& u, const Frame& frame,
                              const std::vector<Eigen::MatrixXd>& grid,
                              bool add_worst_cases, double bisect_tol,
                              const Tolerances& tol) {
  const int d = frame.dim();
  const Eigen::VectorXd dir = (d - 1.0) / d * (frame.vectors() * u);
  double slope_min = 0.0;
  auto absorb = [&](const Eigen::MatrixXd& s) {
    slope_min = std::min(slope_min, (s * dir).minCoeff());
  };
  for (const auto& s : grid) absorb(s);
  if (add_worst_cases) {
    for (const auto& s : worst_case_dynamics(frame, u)) absorb(s);
  }
  const auto feasible = [&](double l) {
    return 1.0 / d + l * slope_min >= -tol.pos;
  };
  RayBound bound;
  if (!feasible(1.0)) {
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > bisect_tol) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
    }
    bound.lambda = lo;
  }
  const Eigen::VectorXd p =
      Eigen::VectorXd::Constant(d, 1.0 / d) + bound.lambda * dir;
  bound.norm2 = collision_norm(p);
  return bound;
}

}  // namespace

DomainBoundResult domain_bound_search(int d, const DomainSearchOptions& opts,
                                      const Tolerances& tol) {
  if (d != 3 && d != 4) {
    throw std::invalid_argument("domain search supports d=3 and d=4 only");
  }
  const Frame frame = Frame::standard(d);
  Rng rng(opts.seed);
  const auto grid = grid_dynamics(d, opts.dynamics, opts.n_grid, rng);
  const bool worst = opts.dynamics == DynamicsSet::full;

  const Eigen::VectorXd vertex_dir = frame.vector(0);
  const RayBound vertex = lambda_for_direction(vertex_dir, frame, grid, worst,
                                               opts.bisect_tol, tol);

  DomainBoundResult result;
  result.lambda_max = vertex.lambda;
  result.K = vertex.norm2;
  result.lambda_min_over_dirs = vertex.lambda;
  result.lambda_max_over_dirs = vertex.lambda;
  result.directions_tested = 1;

  for (int i = 0; i < opts.n_random_directions; ++i) {
    const Eigen::VectorXd u = rng.unit_vector(d - 1);
    const RayBound b =
        lambda_for_direction(u, frame, grid, worst, opts.bisect_tol, tol);
    result.lambda_min_over_dirs =
        std::min(result.lambda_min_over_dirs, b.lambda);
    result.lambda_max_over_dirs =
        std::max(result.lambda_max_over_dirs, b.lambda);
    result.K = std::max(result.K, b.norm2);
    ++result.directions_tested;
  }
  return result;
}

CorrespondenceReport rotation_correspondence_check(int phi_steps,
                                                   int theta_steps,
                                                   int radius_steps,
                                                   const Tolerances& tol) {
  const Frame frame = Frame::trine();
  double worst_dev[2] = {0.0, 0.0};  // index 0: sigma = +1, index 1: sigma = -1
  for (int a = 0; a < phi_steps; ++a) {
    const double phi = 2.0 * kPi * a / phi_steps;
    const QuasiBistochasticMatrix s = make_splus(phi);
    const double c = std::cos(phi);
    const double sn = std::sin(phi);
    for (int b = 0; b < theta_steps; ++b) {
      const double theta = 2.0 * kPi * b / theta_steps;
      for (int r = 1; r <= radius_steps; ++r) {
        const double t = static_cast<double>(r) / radius_steps;
        const BlochPoint point{t * std::sin(theta), t * std::cos(theta), 0.0};
        const ProbVector p = bloch_to_state(point, frame, tol);
        const Eigen::VectorXd evolved = s.entries() * p.entries();
        for (int sign = 0; sign < 2; ++sign) {
          const double sg = sign == 0 ? 1.0 : -1.0;
          const BlochPoint rotated{c * point.x - sg * sn * point.y,
                                   sg * sn * point.x + c * point.y, 0.0};
          const ProbVector expected = bloch_to_state(rotated, frame, tol);
          const double dev =
              (evolved - expected.entries()).cwiseAbs().maxCoeff();
          worst_dev[sign] = std::max(worst_dev[sign], dev);
        }
      }
    }
  }
  CorrespondenceReport result;
  if (worst_dev[0] <= worst_dev[1]) {
    result.sigma = +1;
    result.max_deviation = worst_dev[0];
  } else {
    result.sigma = -1;
    result.max_deviation = worst_dev[1];
  }
  result.consistent = result.max_deviation <= 1e-12;
  if (!result.consistent) {
    throw StructuralError("no rotation direction matches the dynamics");
  }
  return result;
}

ProbVector sample_simplex(int d, Rng& rng) {
  check_dimension(d);
  Eigen::VectorXd g(d);
  for (int k = 0; k < d; ++k) {
    g[k] = -std::log(1.0 - rng.uniform01());
  }
  g /= g.sum();
  return ProbVector(g);
}

BlochPoint sample_bloch(const Frame& frame, Rng& rng) {
  const int n = frame.bloch_dim();
  const double radius = std::pow(rng.uniform01(), 1.0 / n);
  return BlochPoint::from_coords(radius * rng.unit_vector(n));
}

ProbVector sample_domain_state(const Frame& frame, Rng& rng) {
  return bloch_to_state(sample_bloch(frame, rng), frame);
}

}  // namespace entroqubit
