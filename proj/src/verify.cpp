#include "entroqubit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "entroqubit/dynamics3.hpp"
#include "entroqubit/dynamics4.hpp"
#include "entroqubit/effects.hpp"
#include "entroqubit/entropy.hpp"
#include "entroqubit/geometry.hpp"
#include "entroqubit/oracle.hpp"
#include "entroqubit/rng.hpp"
#include "entroqubit/states.hpp"

namespace entroqubit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Eigen::MatrixXd;
using Eigen::VectorXd;

ClaimResult claim(std::string id, bool pass, double measured, double tolerance,
                  std::string detail) {
  return {std::move(id), pass, measured, tolerance, std::move(detail)};
}

// pass iff measured <= tolerance
ClaimResult bound_claim(std::string id, double measured, double tolerance,
                        std::string detail) {
  return claim(std::move(id), measured <= tolerance, measured, tolerance,
               std::move(detail));
}

double max_abs(const MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

double angle_gap(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

// ---------------------------------------------------------------- d2nogo ---

SuiteReport suite_d2nogo(const VerifyConfig& cfg) {
  SuiteReport rep{"d2nogo", {}};
  const double step = cfg.grid > 0 ? 1.0 / cfg.grid : 1e-4;
  const D2NoGoReport r = d2_nogo_check(step, cfg.tol);
  bool found0 = false;
  bool found1 = false;
  double worst = 0.0;
  for (double q : r.orthogonal_points) {
    const double dist = std::min(std::abs(q), std::abs(q - 1.0));
    worst = std::max(worst, dist);
    found0 = found0 || std::abs(q) <= 1e-6;
    found1 = found1 || std::abs(q - 1.0) <= 1e-6;
  }
  std::ostringstream detail;
  detail << r.orthogonal_points.size() << " orthogonal points on "
         << r.n_grid << "-point sweep of [-1,2]; all at q in {0,1}";
  rep.claims.push_back(claim("d2-orthogonal-only-at-permutations",
                             found0 && found1 && worst <= 1e-6, worst, 1e-6,
                             detail.str()));
  return rep;
}

// -------------------------------------------------------------------- d3 ---

// zeroth-order ascent on the sphere; only ever evaluates m . p(b)
VectorXd polish_on_sphere(const VectorXd& start, const Frame& frame,
                          const VectorXd& m, double sign) {
  const auto value = [&](const VectorXd& b) {
    return sign *
           m.dot(bloch_to_state(BlochPoint::from_coords(b), frame).entries());
  };
  const int n = static_cast<int>(start.size());
  VectorXd b = start;
  double best = value(b);
  double rho = 0.02;
  while (rho > 1e-9) {
    // orthonormal tangent directions at b
    std::vector<VectorXd> tangents;
    for (int i = 0; i < n && static_cast<int>(tangents.size()) < n - 1; ++i) {
      VectorXd t = VectorXd::Unit(n, i);
      t -= b.dot(t) * b;
      for (const auto& u : tangents) t -= u.dot(t) * u;
      if (t.norm() > 1e-8) tangents.push_back(t.normalized());
    }
    bool improved = false;
    for (const auto& t : tangents) {
      for (double s : {+1.0, -1.0}) {
        const VectorXd cand = std::cos(rho) * b + s * std::sin(rho) * t;
        const double v = value(cand);
        if (v > best) {
          best = v;
          b = cand;
          improved = true;
        }
      }
    }
    if (!improved) rho *= 0.5;
  }
  return b;
}

// grid + ascent extrema of m . p over the domain boundary, no closed form
EffectExtrema brute_force_extrema(const VectorXd& m, const Frame& frame,
                                  int n_grid) {
  const int n = frame.bloch_dim();
  const auto value = [&](const VectorXd& b) {
    return m.dot(bloch_to_state(BlochPoint::from_coords(b), frame).entries());
  };
  VectorXd best_hi, best_lo;
  double hi = -1e300;
  double lo = 1e300;
  for (int j = 0; j < n_grid; ++j) {
    VectorXd b(n);
    if (n == 2) {
      const double t = kTwoPi * j / n_grid;
      b << std::cos(t), std::sin(t);
    } else {
      const double z = 1.0 - (2.0 * j + 1.0) / n_grid;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double t = kPi * (3.0 - std::sqrt(5.0)) * j;
      b << r * std::cos(t), r * std::sin(t), z;
    }
    const double v = value(b);
    if (v > hi) {
      hi = v;
      best_hi = b;
    }
    if (v < lo) {
      lo = v;
      best_lo = b;
    }
  }
  best_hi = polish_on_sphere(best_hi, frame, m, +1.0);
  best_lo = polish_on_sphere(best_lo, frame, m, -1.0);
  return {value(best_lo), value(best_hi)};
}

ClaimResult frame_identity_claim(std::string id, const Frame& frame) {
  const int d = frame.dim();
  const double sum_res = frame.vectors().colwise().sum().cwiseAbs().maxCoeff();
  const MatrixXd second = frame.vectors().transpose() * frame.vectors() -
      frame.overcompleteness_constant() *
          MatrixXd::Identity(d - 1, d - 1);
  std::ostringstream detail;
  detail << "sum and rank-1 sum identities for the d=" << d << " frame";
  return bound_claim(std::move(id), std::max(sum_res, max_abs(second)), 1e-12,
                     detail.str());
}

ClaimResult effect_consistency_claim(std::string id, const Frame& frame,
                                     int n_samples, Rng& rng,
                                     const Tolerances& tol) {
  const int n = frame.bloch_dim();
  double worst = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const VectorXd m_hat = rng.unit_vector(n);
    const VectorXd b = std::pow(rng.uniform01(), 1.0 / n) * rng.unit_vector(n);
    const ProbVector p =
        bloch_to_state(BlochPoint::from_coords(b), frame, tol);
    const double along = m_hat.dot(b);
    for (int outcome : {+1, -1}) {
      const Effect e = make_effect(m_hat, outcome, frame);
      const double born = probability(e, p, tol).value;
      const double bloch_side = 0.5 * (1.0 + outcome * along);
      worst = std::max(worst, std::abs(born - bloch_side));
    }
  }
  return bound_claim(std::move(id), worst, 1e-12,
                     "dot-product probabilities match the two-outcome "
                     "direction formula on random (direction, state) pairs");
}

ClaimResult validity_closed_form_claim(std::string id, const Frame& frame,
                                       int n_effects, int n_grid, Rng& rng) {
  const int d = frame.dim();
  double worst = 0.0;
  for (int i = 0; i < n_effects; ++i) {
    VectorXd m(d);
    for (int k = 0; k < d; ++k) m[k] = rng.uniform(-1.5, 1.5);
    const EffectExtrema closed = effect_extrema(m, d);
    const EffectExtrema brute = brute_force_extrema(m, frame, n_grid);
    worst = std::max({worst, std::abs(closed.min - brute.min),
                      std::abs(closed.max - brute.max)});
  }
  std::ostringstream detail;
  detail << "closed-form range of e.p over the domain vs " << n_grid
         << "-point boundary grid with local ascent, " << n_effects
         << " random effect vectors";
  return bound_claim(std::move(id), worst, 1e-9, detail.str());
}

SuiteReport suite_d3(const VerifyConfig& cfg) {
  SuiteReport rep{"d3", {}};
  Rng rng = Rng::for_stream(cfg.seed, 2);
  const Tolerances& tol = cfg.tol;
  const Frame trine = Frame::trine();
  const int sweep = cfg.grid > 0 ? cfg.grid : 10000;

  rep.claims.push_back(frame_identity_claim("d3-frame-identities", trine));

  {
    double orth = 0.0, sums = 0.0;
    for (int i = 0; i < sweep; ++i) {
      const double phi = rng.angle();
      const MatrixXd s = make_splus(phi).entries();
      orth = std::max({orth, orthogonality_residual(s),
                       std::abs(s.determinant() - 1.0)});
      sums = std::max(sums, bistochastic_residual(s));
    }
    rep.claims.push_back(bound_claim(
        "d3-splus-orthogonal", orth, tol.orth,
        "orthogonality and det +1 across " + std::to_string(sweep) +
            " sampled angles"));
    rep.claims.push_back(bound_claim("d3-splus-bistochastic", sums, tol.sum,
                                     "unit row/column sums on the same sweep"));
  }

  {
    double orth = 0.0, sums = 0.0;
    for (int i = 0; i < sweep; ++i) {
      const double phi = rng.angle();
      const MatrixXd s = make_sminus(phi).entries();
      orth = std::max({orth, orthogonality_residual(s),
                       std::abs(s.determinant() + 1.0),
                       max_abs(s * s - MatrixXd::Identity(3, 3))});
      sums = std::max(sums, bistochastic_residual(s));
    }
    rep.claims.push_back(bound_claim(
        "d3-sminus-orthogonal-involution", orth, tol.orth,
        "orthogonality, det -1 and S*S = I across " + std::to_string(sweep) +
            " sampled angles"));
    rep.claims.push_back(bound_claim("d3-sminus-bistochastic", sums, tol.sum,
                                     "unit row/column sums on the same sweep"));
  }

  {
    double low = 1e300, high = -1e300;
    int worst_negatives = 0;
    for (int j = 0; j < sweep; ++j) {
      const auto q = splus_coefficients(kTwoPi * j / sweep);
      int negatives = 0;
      for (double v : q) {
        low = std::min(low, v);
        high = std::max(high, v);
        if (v < 0.0) ++negatives;
      }
      worst_negatives = std::max(worst_negatives, negatives);
    }
    const double overshoot =
        std::max(-1.0 / 3.0 - low, high - 1.0);
    std::ostringstream detail;
    detail << "coefficients in [-1/3, 1] with at most one negative; observed "
           << "range [" << fmt(low) << ", " << fmt(high) << "], max "
           << worst_negatives << " negative";
    rep.claims.push_back(claim("d3-coefficient-range-single-negative",
                               overshoot <= 1e-12 && worst_negatives <= 1,
                               overshoot, 1e-12, detail.str()));
  }

  {
    const MatrixXd pi1 = PermutationMatrix::cycle(3).matrix();
    const double dev = std::max(
        {max_abs(make_splus(2.0 * kPi / 3.0).entries() - pi1 * pi1),
         max_abs(make_splus(4.0 * kPi / 3.0).entries() - pi1),
         max_abs(make_sminus(0.0).entries() -
                 PermutationMatrix::swap_last_two(3).matrix())});
    rep.claims.push_back(bound_claim(
        "d3-special-angles-permutations", dev, 1e-14,
        "the three permutation points of the continuous family"));
  }

  {
    double dev = 0.0;
    for (int i = 0; i < 400; ++i) {
      const RotationGenerator3 a{rng.angle(), rng.uniform01() < 0.5
                                                 ? Chirality::plus
                                                 : Chirality::minus};
      const RotationGenerator3 b{rng.angle(), rng.uniform01() < 0.5
                                                 ? Chirality::plus
                                                 : Chirality::minus};
      const ComposeResult c = compose(a, b);
      const MatrixXd product = realize(a).entries() * realize(b).entries();
      dev = std::max(dev, max_abs(c.matrix.entries() - product));
      dev = std::max(dev,
                     max_abs(realize(c.generator).entries() - product));
    }
    rep.claims.push_back(bound_claim(
        "d3-group-closure", dev, 1e-12,
        "products of family members stay in the family with the composed "
        "generator, 400 random pairs"));
  }

  {
    double dev = 0.0;
    for (int i = 0; i < sweep; ++i) {
      const double phi = rng.angle();
      const QuasiBistochasticMatrix s =
          rng.uniform01() < 0.5 ? make_splus(phi) : make_sminus(phi);
      const ProbVector p = sample_domain_state(trine, rng);
      const ProbVector evolved = apply(s, p, tol);
      dev = std::max(dev, std::abs(collision_entropy(evolved, tol) -
                                   collision_entropy(p, tol)));
    }
    rep.claims.push_back(bound_claim(
        "d3-collision-entropy-conserved", dev, tol.ent,
        "order-2 entropy invariant over " + std::to_string(sweep) +
            " (dynamics, state) pairs"));
  }

  {
    Eigen::Vector3d w;
    w << 2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0;
    const ProbVector p(w, tol);
    const ProbVector evolved = apply(make_splus(1.0), p, tol);
    const double dev =
        std::abs(renyi_entropy(evolved, 1.0, tol) - renyi_entropy(p, 1.0, tol));
    rep.claims.push_back(claim(
        "d3-shannon-not-conserved", dev > 1e-3, dev, 1e-3,
        "order-1 entropy moves by more than the threshold for a "
        "non-permutation rotation on an extremal state"));
  }

  {
    DomainSearchOptions opts;
    opts.seed = cfg.seed + 101;
    const DomainBoundResult full = domain_bound_search(3, opts, tol);
    rep.claims.push_back(bound_claim(
        "d3-domain-lambda-max", std::abs(full.lambda_max - 0.5), 1e-6,
        "largest positivity-preserving vertex mixing, " +
            std::to_string(full.directions_tested) + " rays; lambda = " +
            fmt(full.lambda_max)));
    rep.claims.push_back(bound_claim(
        "d3-domain-collision-cap", std::abs(full.K - 0.5), 1e-6,
        "squared-norm cap at the binding mixing; K = " + fmt(full.K)));

    DomainSearchOptions perm = opts;
    perm.dynamics = DynamicsSet::permutations_only;
    const DomainBoundResult p = domain_bound_search(3, perm, tol);
    rep.claims.push_back(bound_claim(
        "d3-permutations-only-lambda", std::abs(p.lambda_max - 1.0), 1e-9,
        "restricting dynamics to permutations frees the whole simplex"));
  }

  {
    const CorrespondenceReport corr = rotation_correspondence_check(
        100, 100, 10, tol);
    std::ostringstream detail;
    detail << "single global sign sigma = " << (corr.sigma > 0 ? "+1" : "-1")
           << " over the angle/direction/radius grid";
    rep.claims.push_back(bound_claim("d3-rotation-correspondence",
                                     corr.max_deviation, 1e-12, detail.str()));
  }

  {
    double dev = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double phi = rng.angle();
      const QuasiBistochasticMatrix s =
          rng.uniform01() < 0.5 ? make_splus(phi) : make_sminus(phi);
      const BvnDecomposition3 dec = decompose_bvn(s);
      dev = std::max({dev, max_abs(dec.reconstruct() - s.entries()),
                      std::abs(dec.q.sum() - 0.5),
                      std::abs(dec.r.sum() - 0.5)});
    }
    rep.claims.push_back(bound_claim(
        "d3-bvn-minimum-norm-gauge", dev, 1e-10,
        "signed permutation decomposition reconstructs and sits at the "
        "sum(q) = sum(r) = 1/2 gauge point, 200 random members"));
  }

  {
    double dev = 0.0;
    bool families_ok = true;
    for (int i = 0; i < 400; ++i) {
      const double phi = normalize_angle(rng.angle());
      const bool plus = rng.uniform01() < 0.5;
      const QuasiBistochasticMatrix s =
          plus ? make_splus(phi) : make_sminus(phi);
      const Classification3 c = classify_orthogonal_qbistoch3(s, tol);
      families_ok = families_ok &&
          c.family == (plus ? Classification3::Family::splus
                            : Classification3::Family::sminus);
      dev = std::max(dev, angle_gap(c.phi, phi));
    }
    rep.claims.push_back(claim("d3-classification-roundtrip",
                               families_ok && dev <= 1e-9, dev, 1e-9,
                               "family and angle recovered for 400 random "
                               "members of both branches"));
  }

  rep.claims.push_back(effect_consistency_claim("d3-effect-consistency", trine,
                                                sweep, rng, tol));

  {
    const Effect minus = make_effect(Eigen::Vector2d(0.0, 1.0), -1, trine);
    const double min_entry = minus.e.minCoeff();
    const bool valid = is_valid_effect(minus.e, 3, tol);
    const Effect plus = make_effect(Eigen::Vector2d(0.0, 1.0), +1, trine);
    const double completeness =
        (plus.e + minus.e - Eigen::Vector3d::Ones()).cwiseAbs().maxCoeff();
    std::ostringstream detail;
    detail << "a valid effect carries a negative entry (min " << fmt(min_entry)
           << "); the outcome pair sums to the unit effect";
    rep.claims.push_back(claim("d3-effect-negative-entry-valid",
                               valid && min_entry < 0.0 &&
                                   completeness <= 1e-15,
                               min_entry, 0.0, detail.str()));
  }

  {
    double dev = 0.0;
    for (int i = 0; i < 400; ++i) {
      const double phi = rng.angle();
      const double psi = rng.angle();
      const Eigen::Vector2d m_hat(std::cos(psi), std::sin(psi));
      const ProbVector p = sample_domain_state(trine, rng);
      const ProbVector rotated = apply(make_splus(phi), p, tol);
      const double c = std::cos(phi);
      const double s = std::sin(phi);
      const Eigen::Vector2d counter(c * m_hat.x() + s * m_hat.y(),
                                    -s * m_hat.x() + c * m_hat.y());
      const double lhs =
          probability(make_effect(m_hat, +1, trine), rotated, tol).value;
      const double rhs =
          probability(make_effect(counter, +1, trine), p, tol).value;
      dev = std::max(dev, std::abs(lhs - rhs));
    }
    rep.claims.push_back(bound_claim(
        "d3-effect-covariance", dev, 1e-12,
        "rotating the state equals counter-rotating the measurement, 400 "
        "random triples"));
  }

  rep.claims.push_back(validity_closed_form_claim(
      "d3-effect-validity-closed-form", trine, 25, 100000, rng));

  return rep;
}

// -------------------------------------------------------------------- d4 ---

SuiteReport suite_d4(const VerifyConfig& cfg) {
  SuiteReport rep{"d4", {}};
  Rng rng = Rng::for_stream(cfg.seed, 3);
  const Tolerances& tol = cfg.tol;
  const Frame tetra = Frame::tetrahedron();
  const int sweep = cfg.grid > 0 ? cfg.grid : 10000;

  rep.claims.push_back(frame_identity_claim("d4-frame-identities", tetra));

  {
    double orth = 0.0, sums = 0.0;
    const int per_axis = std::max(1, sweep / 4);
    for (int axis = 1; axis <= 4; ++axis) {
      for (int i = 0; i < per_axis; ++i) {
        const MatrixXd r = make_elementary(axis, rng.angle()).entries();
        orth = std::max({orth, orthogonality_residual(r),
                         std::abs(r.determinant() - 1.0)});
        sums = std::max(sums, bistochastic_residual(r));
      }
    }
    rep.claims.push_back(bound_claim(
        "d4-elementary-orthogonal", std::max(orth, sums), tol.orth,
        "orthogonality, det +1 and unit sums for all four axes"));
  }

  {
    const MatrixXd expected =
        PermutationMatrix(std::vector<int>{2, 0, 1, 3}).matrix();
    const double dev =
        max_abs(make_elementary(4, 2.0 * kPi / 3.0).entries() - expected);
    rep.claims.push_back(bound_claim(
        "d4-elementary-permutation-point", dev, 1e-14,
        "the third-turn angle gives the block 3-cycle fixing the last index"));
  }

  {
    double dev = 0.0;
    for (int i = 0; i < 400; ++i) {
      const int axis = 1 + static_cast<int>(rng.uniform01() * 4.0);
      const double a = rng.angle();
      const double b = rng.angle();
      dev = std::max(
          dev, max_abs(make_elementary(axis, a).entries() *
                           make_elementary(axis, b).entries() -
                       make_elementary(axis, a + b).entries()));
    }
    rep.claims.push_back(bound_claim(
        "d4-abelian-per-axis", dev, 1e-12,
        "each axis family is a one-parameter abelian group, 400 random "
        "pairs"));
  }

  {
    double orth = 0.0, sums = 0.0;
    const VectorXd uniform = VectorXd::Constant(4, 0.25);
    for (int i = 0; i < sweep; ++i) {
      const std::array<double, 4> angles = {rng.angle(), rng.angle(),
                                            rng.angle(), rng.angle()};
      const MatrixXd s = make_composed(angles).entries();
      const VectorXd v = rng.gaussian_vector(4);
      orth = std::max({orth, orthogonality_residual(s),
                       std::abs(s.determinant() - 1.0),
                       (s * uniform - uniform).cwiseAbs().maxCoeff(),
                       std::abs((s * v).squaredNorm() - v.squaredNorm())});
      sums = std::max(sums, bistochastic_residual(s));
    }
    rep.claims.push_back(bound_claim(
        "d4-composed-orthogonal", orth, tol.orth,
        "orthogonality, det +1, uniform fixed point and norm transport over " +
            std::to_string(sweep) + " random angle tuples"));
    rep.claims.push_back(bound_claim("d4-composed-bistochastic", sums, tol.sum,
                                     "unit row/column sums on the same sweep"));
  }

  {
    double dev = 0.0;
    for (int i = 0; i < sweep; ++i) {
      const std::array<double, 4> angles = {rng.angle(), rng.angle(),
                                            rng.angle(), rng.angle()};
      const QuasiBistochasticMatrix s = make_composed(angles);
      const ProbVector p = sample_domain_state(tetra, rng);
      const ProbVector evolved = apply(s, p, tol);
      dev = std::max(dev, std::abs(collision_entropy(evolved, tol) -
                                   collision_entropy(p, tol)));
    }
    rep.claims.push_back(bound_claim(
        "d4-collision-entropy-conserved", dev, tol.ent,
        "order-2 entropy invariant over " + std::to_string(sweep) +
            " (dynamics, state) pairs"));
  }

  rep.claims.push_back(effect_consistency_claim("d4-effect-consistency", tetra,
                                                sweep, rng, tol));

  rep.claims.push_back(validity_closed_form_claim(
      "d4-effect-validity-closed-form", tetra, 10, 20000, rng));

  {
    DomainSearchOptions opts;
    opts.seed = cfg.seed + 102;
    const DomainBoundResult full = domain_bound_search(4, opts, tol);
    rep.claims.push_back(bound_claim(
        "d4-domain-lambda-max", std::abs(full.lambda_max - 1.0 / 3.0), 1e-6,
        "largest positivity-preserving vertex mixing, " +
            std::to_string(full.directions_tested) + " rays; lambda = " +
            fmt(full.lambda_max)));
    rep.claims.push_back(bound_claim(
        "d4-domain-collision-cap", std::abs(full.K - 1.0 / 3.0), 1e-6,
        "squared-norm cap at the binding mixing; K = " + fmt(full.K)));
  }

  {
    FactorizeOptions fopts;
    fopts.seed = cfg.seed + 103;
    double worst = 0.0;
    int failures = 0;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
      const std::array<double, 4> angles = {rng.angle(), rng.angle(),
                                            rng.angle(), rng.angle()};
      const FactorizeResult r = factorize(make_composed(angles), fopts, tol);
      worst = std::max(worst, r.residual);
      failures += r.converged ? 0 : 1;
    }
    std::ostringstream detail;
    detail << "round-trip through the four-angle product, " << n
           << " random tuples, " << failures << " no-convergence";
    rep.claims.push_back(claim("d4-factorize-roundtrip",
                               failures == 0 && worst <= fopts.residual_target,
                               worst, fopts.residual_target, detail.str()));
  }

  {
    FactorizeOptions fopts;
    fopts.seed = cfg.seed + 104;
    double worst = 0.0;
    int failures = 0;
    const int n = 100;
    for (int i = 0; i < n; ++i) {
      const QuasiBistochasticMatrix s =
          lift_to_lattice(BlochRotation::random_so3(rng), tetra);
      const FactorizeResult r = factorize(s, fopts, tol);
      worst = std::max(worst, r.residual);
      failures += r.converged ? 0 : 1;
    }
    std::ostringstream detail;
    detail << "factorization coverage of lifted rotations, " << n
           << " random samples, " << failures << " no-convergence";
    rep.claims.push_back(claim("d4-factorize-lifted-rotations",
                               failures == 0 && worst <= fopts.residual_target,
                               worst, fopts.residual_target, detail.str()));
  }

  {
    const QuasiBistochasticMatrix lifted =
        reflection_lift(-Eigen::Matrix3d::Identity(), tetra);
    bool rejected_lift = false;
    try {
      factorize(lifted, {}, tol);
    } catch (const std::domain_error&) {
      rejected_lift = true;
    }
    bool rejected_perm = false;
    try {
      factorize(PermutationMatrix::swap_last_two(4).as_quasi_bistochastic(),
                {}, tol);
    } catch (const std::domain_error&) {
      rejected_perm = true;
    }
    const double det_gap = std::abs(lifted.determinant() + 1.0);
    rep.claims.push_back(claim(
        "d4-reflections-rejected", rejected_lift && rejected_perm &&
            det_gap <= 1e-12, det_gap, 1e-12,
        "the lifted point inversion and an odd permutation both carry det -1 "
        "and are refused by factorize"));
  }

  return rep;
}

// -------------------------------------------------------------- geometry ---

SuiteReport suite_geometry(const VerifyConfig& cfg) {
  SuiteReport rep{"geometry", {}};
  Rng rng = Rng::for_stream(cfg.seed, 4);
  const int tuples = cfg.grid > 0 ? cfg.grid : 1000;

  {
    double orth = 0.0;
    double last_col = 0.0;
    for (int n = kMinDim; n <= kMaxDim; ++n) {
      const MatrixXd u = complete_basis(n);
      orth = std::max(orth, max_abs(u.transpose() * u -
                                    MatrixXd::Identity(n, n)));
      last_col = std::max(
          last_col,
          (u.col(n - 1) -
           VectorXd::Constant(n, 1.0 / std::sqrt(double(n))))
              .cwiseAbs()
              .maxCoeff());
    }
    rep.claims.push_back(bound_claim(
        "geometry-basis-orthonormal", std::max(orth, last_col), 1e-13,
        "completed bases are orthonormal with the uniform direction last, "
        "n = 2..16"));
  }

  {
    double dev = 0.0;
    for (int n = kMinDim; n <= kMaxDim; ++n) {
      for (int i = 0; i < tuples; ++i) {
        std::vector<double> angles(static_cast<std::size_t>(n - 2));
        for (auto& a : angles) a = rng.angle();
        const int branch = rng.uniform01() < 0.5 ? +1 : -1;
        const VectorXd a = simplex_sphere_point(n, angles, branch);
        dev = std::max({dev, std::abs(a.sum() - 1.0),
                        std::abs(a.squaredNorm() - 1.0)});
      }
    }
    rep.claims.push_back(bound_claim(
        "geometry-constraints-hold", dev, 1e-12,
        "unit sum and unit squared norm for " + std::to_string(tuples) +
            " random angle tuples at every n = 2..16"));
  }

  {
    const VectorXd a_plus = simplex_sphere_point(2, {}, +1);
    const VectorXd a_minus = simplex_sphere_point(2, {}, -1);
    const double dev =
        std::max((a_plus - Eigen::Vector2d(1.0, 0.0)).cwiseAbs().maxCoeff(),
                 (a_minus - Eigen::Vector2d(0.0, 1.0)).cwiseAbs().maxCoeff());
    rep.claims.push_back(bound_claim(
        "geometry-n2-branches-exact", dev, 1e-15,
        "the 0-sphere solutions are the two basis vectors"));
  }

  {
    const int n_grid = 10000;
    double mismatch = 0.0;
    double gap = 0.0;
    VectorXd prev, first;
    for (int j = 0; j < n_grid; ++j) {
      const double t = kTwoPi * j / n_grid;
      const VectorXd a = simplex_sphere_point(3, {t});
      const double phi = std::atan2(std::sqrt(3.0) * (a[2] - a[1]) / 2.0,
                                    (3.0 * a[0] - 1.0) / 2.0);
      const auto q = splus_coefficients(phi);
      mismatch = std::max({mismatch, std::abs(a[0] - q[0]),
                           std::abs(a[1] - q[1]), std::abs(a[2] - q[2])});
      if (j == 0) {
        first = a;
      } else {
        gap = std::max(gap, (a - prev).norm());
      }
      prev = a;
    }
    gap = std::max(gap, (first - prev).norm());
    rep.claims.push_back(bound_claim(
        "geometry-n3-matches-angle-family", mismatch, 1e-10,
        "every point of the n=3 solution circle is a coefficient triple of "
        "the continuous d=3 family"));
    rep.claims.push_back(bound_claim(
        "geometry-n3-covering", gap, 0.01,
        "consecutive sweep points cover the circle without gaps"));
  }

  return rep;
}

// ---------------------------------------------------------------- oracle ---

SuiteReport suite_oracle(const VerifyConfig& cfg) {
  SuiteReport rep{"oracle", {}};
  Rng rng = Rng::for_stream(cfg.seed, 5);
  const Tolerances& tol = cfg.tol;
  const Frame trine = Frame::trine();
  const Frame tetra = Frame::tetrahedron();

  const auto random_rotation = [&](int bloch_dim) {
    return bloch_dim == 2 ? BlochRotation::planar(rng.angle())
                          : BlochRotation::random_so3(rng);
  };
  const auto random_ball = [&](int bloch_dim) {
    return VectorXd(std::pow(rng.uniform01(), 1.0 / bloch_dim) *
                    rng.unit_vector(bloch_dim));
  };

  {
    const double dev = std::max(
        max_abs(lift_to_lattice(BlochRotation(Eigen::Matrix2d::Identity()),
                                trine)
                    .entries() -
                MatrixXd::Identity(3, 3)),
        max_abs(lift_to_lattice(BlochRotation(Eigen::Matrix3d::Identity()),
                                tetra)
                    .entries() -
                MatrixXd::Identity(4, 4)));
    rep.claims.push_back(bound_claim("oracle-lift-identity", dev, 1e-15,
                                     "the identity lifts to the identity"));
  }

  {
    double dev = 0.0;
    for (const Frame* frame : {&trine, &tetra}) {
      const int n = frame->bloch_dim();
      for (int i = 0; i < 1000; ++i) {
        const BlochRotation o = random_rotation(n);
        const VectorXd b = random_ball(n);
        const ProbVector p =
            bloch_to_state(BlochPoint::from_coords(b), *frame, tol);
        const ProbVector expected = bloch_to_state(
            BlochPoint::from_coords(o.matrix() * b), *frame, tol);
        dev = std::max(dev, (lift_to_lattice(o, *frame).entries() *
                                 p.entries() -
                             expected.entries())
                                .cwiseAbs()
                                .maxCoeff());
      }
    }
    rep.claims.push_back(bound_claim(
        "oracle-lift-defining-identity", dev, 1e-12,
        "lifted action equals rotated-target construction on 1000 random "
        "(rotation, point) pairs per frame"));
  }

  {
    double dev = 0.0;
    for (int j = 0; j < 720; ++j) {
      const double phi = kTwoPi * j / 720;
      dev = std::max(
          dev, max_abs(lift_to_lattice(BlochRotation::planar(phi), trine)
                           .entries() -
                       make_splus(phi).entries()));
    }
    rep.claims.push_back(bound_claim(
        "oracle-planar-lift-matches-family", dev, 1e-12,
        "lifting a planar rotation reproduces the d=3 plus branch"));
  }

  {
    const double dev = max_abs(
        lift_to_lattice(BlochRotation(-Eigen::Matrix2d::Identity()), trine)
            .entries() -
        make_splus(kPi).entries());
    rep.claims.push_back(bound_claim(
        "oracle-planar-point-reflection-is-rotation", dev, 1e-12,
        "planar -I has det +1 and lands at the half-turn rotation, not in "
        "the reflection branch"));
  }

  {
    double dev = 0.0;
    for (const Frame* frame : {&trine, &tetra}) {
      const int n = frame->bloch_dim();
      for (int i = 0; i < 300; ++i) {
        const BlochRotation a = random_rotation(n);
        const BlochRotation b = random_rotation(n);
        const BlochRotation ab(a.matrix() * b.matrix());
        dev = std::max(dev, max_abs(lift_to_lattice(ab, *frame).entries() -
                                    lift_to_lattice(a, *frame).entries() *
                                        lift_to_lattice(b, *frame).entries()));
      }
    }
    rep.claims.push_back(bound_claim(
        "oracle-lift-homomorphism", dev, 1e-12,
        "the lift is a group homomorphism, 300 random pairs per frame"));
  }

  {
    double dev = 0.0;
    for (const Frame* frame : {&trine, &tetra}) {
      const int n = frame->bloch_dim();
      for (int i = 0; i < 1000; ++i) {
        const MatrixXd s =
            lift_to_lattice(random_rotation(n), *frame).entries();
        const VectorXd v = rng.gaussian_vector(frame->dim());
        dev = std::max(dev,
                       std::abs((s * v).squaredNorm() - v.squaredNorm()));
      }
    }
    rep.claims.push_back(bound_claim(
        "oracle-norm-transport", dev, 1e-12,
        "lifted maps preserve the squared norm of arbitrary vectors"));
  }

  {
    double dev = 0.0;
    for (const Frame* frame : {&trine, &tetra}) {
      const int n = frame->bloch_dim();
      for (int i = 0; i < 1000; ++i) {
        const BlochRotation o = random_rotation(n);
        const VectorXd b = random_ball(n);
        const ProbVector p =
            bloch_to_state(BlochPoint::from_coords(b), *frame, tol);
        const ProbVector evolved =
            apply(lift_to_lattice(o, *frame), p, tol);
        const BlochResult round = state_to_bloch(evolved, *frame, tol);
        dev = std::max(dev, (round.point.coords(n) - o.matrix() * b)
                                .cwiseAbs()
                                .maxCoeff());
      }
    }
    rep.claims.push_back(bound_claim(
        "oracle-roundtrip-bloch", dev, 1e-12,
        "lift, evolve, read back: the round trip is the rotation itself"));
  }

  {
    int mismatches = 0;
    for (int i = 0; i < 200; ++i) {
      const double psi = rng.angle();
      Eigen::Matrix2d refl;
      refl << std::cos(2.0 * psi), std::sin(2.0 * psi),
              std::sin(2.0 * psi), -std::cos(2.0 * psi);
      const Classification3 c = classify_orthogonal_qbistoch3(
          reflection_lift(refl, trine), tol);
      if (c.family != Classification3::Family::sminus) ++mismatches;
    }
    rep.claims.push_back(claim(
        "oracle-reflections-land-in-minus-branch", mismatches == 0,
        static_cast<double>(mismatches), 0.0,
        "every lifted planar reflection classifies into the reflection "
        "branch, 200 random axes"));
  }

  return rep;
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"d2nogo", "d3", "d4",
                                                 "geometry", "oracle"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  SuiteReport (*suite_fn)(const VerifyConfig&) = nullptr;
  if (name == "d2nogo") suite_fn = suite_d2nogo;
  else if (name == "d3") suite_fn = suite_d3;
  else if (name == "d4") suite_fn = suite_d4;
  else if (name == "geometry") suite_fn = suite_geometry;
  else if (name == "oracle") suite_fn = suite_oracle;
  else throw std::invalid_argument("unknown suite: " + name);
  // A claim whose computation throws (a structural falsification or an
  // invariant violation caught at construction) is reported as a failed
  // claim rather than aborting the other suites.
  try {
    return suite_fn(cfg);
  } catch (const std::exception& e) {
    SuiteReport report;
    report.suite = name;
    ClaimResult aborted;
    aborted.id = name + "-aborted";
    aborted.pass = false;
    aborted.measured = std::numeric_limits<double>::quiet_NaN();
    aborted.tolerance = 0.0;
    aborted.detail = e.what();
    report.claims.push_back(std::move(aborted));
    return report;
  }
}

std::vector<SuiteReport> run_suites(const std::string& name,
                                    const VerifyConfig& cfg) {
  std::vector<SuiteReport> reports;
  if (name == "all") {
    for (const auto& suite : suite_names()) {
      reports.push_back(run_suite(suite, cfg));
    }
  } else {
    reports.push_back(run_suite(name, cfg));
  }
  return reports;
}

bool all_pass(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const SuiteReport& r) { return r.all_pass(); });
}

Json verify_report_json(const std::vector<SuiteReport>& reports,
                        const VerifyConfig& cfg, const std::string& requested) {
  Json root;
  root["schema_version"] = 1;
  root["tool"] = "entroqubit";
  root["report"] = "verify";
  root["requested_suite"] = requested;
  root["seed"] = cfg.seed;
  root["grid"] = cfg.grid;
  root["tolerances"] = {{"sum", cfg.tol.sum},
                        {"orth", cfg.tol.orth},
                        {"pos", cfg.tol.pos},
                        {"ent", cfg.tol.ent}};
  root["pass"] = all_pass(reports);
  Json suites = Json::array();
  for (const auto& rep : reports) {
    Json s;
    s["suite"] = rep.suite;
    s["pass"] = rep.all_pass();
    Json claims = Json::array();
    for (const auto& c : rep.claims) {
      Json row;
      row["id"] = c.id;
      row["pass"] = c.pass;
      row["measured"] = c.measured;
      row["tolerance"] = c.tolerance;
      row["detail"] = c.detail;
      claims.push_back(std::move(row));
    }
    s["claims"] = std::move(claims);
    suites.push_back(std::move(s));
  }
  root["suites"] = std::move(suites);
  return root;
}

std::string verify_report_csv(const std::vector<SuiteReport>& reports) {
  std::string out = "suite,claim,pass,measured,tolerance\n";
  for (const auto& rep : reports) {
    for (const auto& c : rep.claims) {
      out += rep.suite;
      out += ',';
      out += c.id;
      out += ',';
      out += c.pass ? "true" : "false";
      out += ',';
      out += format_double(c.measured);
      out += ',';
      out += format_double(c.tolerance);
      out += '\n';
    }
  }
  return out;
}

}  // namespace entroqubit
