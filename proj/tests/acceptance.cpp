// Acceptance gate: eleven end-to-end criteria over the whole library, each
// printed as a single PASS/FAIL line with its measured value and pinned
// tolerance. Exits nonzero if any criterion fails.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "entroqubit/dynamics3.hpp"
#include "entroqubit/dynamics4.hpp"
#include "entroqubit/effects.hpp"
#include "entroqubit/entropy.hpp"
#include "entroqubit/geometry.hpp"
#include "entroqubit/oracle.hpp"
#include "entroqubit/rng.hpp"
#include "entroqubit/states.hpp"

namespace {

using namespace entroqubit;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string label;
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double v) {
  std::ostringstream out;
  out.precision(3);
  out << v;
  return out.str();
}

// 1. Every family member is orthogonal and quasi-bistochastic.
Criterion criterion_well_formed() {
  const auto start = Clock::now();
  Rng rng = Rng::for_stream(42, 101);
  double orth = 0.0;
  double sums = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double phi = rng.angle();
    for (const auto& s : {make_splus(phi), make_sminus(phi)}) {
      orth = std::max(orth, orthogonality_residual(s.entries()));
      sums = std::max(sums, bistochastic_residual(s.entries()));
    }
  }
  for (int i = 0; i < 10000; ++i) {
    const QuasiBistochasticMatrix s = make_composed(
        {rng.angle(), rng.angle(), rng.angle(), rng.angle()});
    orth = std::max(orth, orthogonality_residual(s.entries()));
    sums = std::max(sums, bistochastic_residual(s.entries()));
  }
  const double elapsed = seconds_since(start);
  Criterion c;
  c.label = "orthogonality + bistochasticity, 10^4 angles per family";
  c.pass = orth <= 1e-10 && sums <= 1e-12 && elapsed < 5.0;
  c.detail = "max orth residual " + num(orth) + " (tol 1e-10), max sum residual " +
             num(sums) + " (tol 1e-12), " + num(elapsed) + " s (limit 5 s)";
  return c;
}

// 2. Order-2 entropy is conserved on the domain; order-1 is not.
Criterion criterion_collision_conservation() {
  Rng rng = Rng::for_stream(42, 102);
  const Frame trine = Frame::trine();
  const Frame tetra = Frame::tetrahedron();
  double dev2 = 0.0;
  for (int i = 0; i < 5000; ++i) {
    const double phi = rng.angle();
    const QuasiBistochasticMatrix s =
        (i % 2 == 0) ? make_splus(phi) : make_sminus(phi);
    const ProbVector p = sample_domain_state(trine, rng);
    dev2 = std::max(dev2, std::abs(collision_entropy(apply(s, p)) -
                                   collision_entropy(p)));
  }
  for (int i = 0; i < 5000; ++i) {
    const QuasiBistochasticMatrix s = make_composed(
        {rng.angle(), rng.angle(), rng.angle(), rng.angle()});
    const ProbVector p = sample_domain_state(tetra, rng);
    dev2 = std::max(dev2, std::abs(collision_entropy(apply(s, p)) -
                                   collision_entropy(p)));
  }
  // order-1 counter-check on a non-permutation member and a boundary state
  const ProbVector witness(Eigen::Vector3d(2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0));
  const double dev1 = std::abs(
      renyi_entropy(apply(make_splus(1.0), witness), 1.0) -
      renyi_entropy(witness, 1.0));
  Criterion c;
  c.label = "order-2 entropy conserved over 10^4 (S, p) pairs; order-1 is not";
  c.pass = dev2 <= 1e-9 && dev1 > 1e-3;
  c.detail = "max order-2 deviation " + num(dev2) +
             " (tol 1e-9), order-1 witness deviation " + num(dev1) +
             " (must exceed 1e-3)";
  return c;
}

// 3. Coefficient range and single negativity on a dense angle grid.
Criterion criterion_coefficient_range() {
  double lo = 1.0;
  double hi = 0.0;
  int worst_negatives = 0;
  for (int i = 0; i < 10000; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / 10000.0;
    const auto q = splus_coefficients(phi);
    int negatives = 0;
    for (const double qk : q) {
      lo = std::min(lo, qk);
      hi = std::max(hi, qk);
      if (qk < 0.0) ++negatives;
    }
    worst_negatives = std::max(worst_negatives, negatives);
  }
  Criterion c;
  c.label = "coefficients stay in [-1/3, 1] with at most one negative";
  c.pass = lo >= -1.0 / 3.0 - 1e-12 && hi <= 1.0 + 1e-12 &&
           worst_negatives <= 1;
  c.detail = "min " + num(lo) + " (floor -1/3 - 1e-12), max " + num(hi) +
             " (cap 1 + 1e-12), most simultaneous negatives " +
             std::to_string(worst_negatives);
  return c;
}

// 4. The d=2 sweep finds orthogonality only at the two permutations.
Criterion criterion_d2_nogo() {
  const D2NoGoReport report = d2_nogo_check();
  bool only_permutations = !report.orthogonal_points.empty();
  double worst_distance = 0.0;
  bool found_zero = false;
  bool found_one = false;
  for (const double q : report.orthogonal_points) {
    const double distance = std::min(std::abs(q), std::abs(q - 1.0));
    worst_distance = std::max(worst_distance, distance);
    only_permutations = only_permutations && distance <= 1e-6;
    found_zero = found_zero || std::abs(q) <= 1e-6;
    found_one = found_one || std::abs(q - 1.0) <= 1e-6;
  }
  Criterion c;
  c.label = "d=2 sweep: orthogonality only at q in {0, 1}";
  c.pass = only_permutations && found_zero && found_one;
  c.detail = std::to_string(report.orthogonal_points.size()) +
             " orthogonal points over " + std::to_string(report.n_grid) +
             " grid values, max distance from {0,1} " + num(worst_distance) +
             " (tol 1e-6)";
  return c;
}

// 5. Measured positivity-domain bounds match the closed forms.
Criterion criterion_domain_bounds() {
  const auto start3 = Clock::now();
  const DomainBoundResult d3 = domain_bound_search(3);
  const double t3 = seconds_since(start3);
  const auto start4 = Clock::now();
  const DomainBoundResult d4 = domain_bound_search(4);
  const double t4 = seconds_since(start4);
  const double err_lambda3 = std::abs(d3.lambda_max - 0.5);
  const double err_k3 = std::abs(d3.K - 0.5);
  const double err_k4 = std::abs(d4.K - 1.0 / 3.0);
  Criterion c;
  c.label = "domain bounds: lambda_max and K at 0.5 (d=3), K at 1/3 (d=4)";
  c.pass = err_lambda3 <= 1e-6 && err_k3 <= 1e-6 && err_k4 <= 1e-6 &&
           t3 < 30.0 && t4 < 30.0;
  c.detail = "|lambda_max - 0.5| = " + num(err_lambda3) + ", |K - 0.5| = " +
             num(err_k3) + ", d=4 |K - 1/3| = " + num(err_k4) +
             " (tol 1e-6 each), " + num(t3) + " s / " + num(t4) +
             " s (limit 30 s each)";
  return c;
}

// 6. Frame identities: zero sum and the overcompleteness constant.
Criterion criterion_frame_identities() {
  double worst = 0.0;
  for (const int d : {3, 4}) {
    const Frame frame = Frame::standard(d);
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(d - 1);
    Eigen::MatrixXd outer = Eigen::MatrixXd::Zero(d - 1, d - 1);
    for (int k = 0; k < d; ++k) {
      sum += frame.vector(k);
      outer += frame.vector(k) * frame.vector(k).transpose();
    }
    worst = std::max(worst, sum.cwiseAbs().maxCoeff());
    const Eigen::MatrixXd target = frame.overcompleteness_constant() *
                                   Eigen::MatrixXd::Identity(d - 1, d - 1);
    worst = std::max(worst, (outer - target).cwiseAbs().maxCoeff());
  }
  Criterion c;
  c.label = "frame identities: zero sum, sum of outer products = d/(d-1) I";
  c.pass = worst <= 1e-12;
  c.detail = "max identity residual " + num(worst) + " (tol 1e-12)";
  return c;
}

// 7. Effect probabilities equal the closed two-outcome form.
Criterion criterion_effect_consistency() {
  Rng rng = Rng::for_stream(42, 107);
  double worst = 0.0;
  for (const int d : {3, 4}) {
    const Frame frame = Frame::standard(d);
    for (int i = 0; i < 5000; ++i) {
      const Eigen::VectorXd m_hat = rng.unit_vector(d - 1);
      const BlochPoint b = sample_bloch(frame, rng);
      const ProbVector p = bloch_to_state(b, frame);
      const double dot = m_hat.dot(b.coords(d - 1));
      for (const int outcome : {+1, -1}) {
        const Effect e = make_effect(m_hat, outcome, frame);
        const double expected = 0.5 * (1.0 + outcome * dot);
        worst = std::max(worst,
                         std::abs(probability(e, p).value - expected));
      }
    }
  }
  Criterion c;
  c.label = "effect probabilities match (1/2)(1 +/- m.b) over 10^4 pairs";
  c.pass = worst <= 1e-12;
  c.detail = "max |e.p - closed form| = " + num(worst) + " (tol 1e-12)";
  return c;
}

// 8. One global sign relates the d=3 family to planar Bloch rotations.
Criterion criterion_rotation_correspondence() {
  Criterion c;
  c.label = "single global sign ties the d=3 family to planar rotations";
  try {
    const CorrespondenceReport r = rotation_correspondence_check(100, 100, 10);
    c.pass = r.consistent && r.max_deviation <= 1e-12;
    c.detail = "sigma = " + std::to_string(r.sigma) + ", max deviation " +
               num(r.max_deviation) + " (tol 1e-12)";
  } catch (const StructuralError& e) {
    c.pass = false;
    c.detail = std::string("no consistent sign: ") + e.what();
  }
  return c;
}

// 9. Every random rotation lifts cleanly and factorizes back into angles.
Criterion criterion_lift_factorize() {
  const auto start = Clock::now();
  Rng rng = Rng::for_stream(42, 109);
  const Frame tetra = Frame::tetrahedron();
  double orth = 0.0;
  double sums = 0.0;
  double worst_residual = 0.0;
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const BlochRotation rot = BlochRotation::random_so3(rng);
    const QuasiBistochasticMatrix s = lift_to_lattice(rot, tetra);
    orth = std::max(orth, orthogonality_residual(s.entries()));
    sums = std::max(sums, bistochastic_residual(s.entries()));
    const FactorizeResult f = factorize(s);
    if (!f.converged) ++failures;
    worst_residual = std::max(worst_residual, f.residual);
  }
  const double elapsed = seconds_since(start);
  Criterion c;
  c.label = "10^3 random rotations lift and factorize to residual 1e-8";
  c.pass = failures == 0 && worst_residual <= 1e-8 && orth <= 1e-10 &&
           sums <= 1e-12 && elapsed < 120.0;
  c.detail = std::to_string(failures) +
             " non-convergent (must be 0), worst residual " +
             num(worst_residual) + " (tol 1e-8), lift residuals " + num(orth) +
             " / " + num(sums) + ", " + num(elapsed) + " s (limit 120 s)";
  return c;
}

// 10. The constraint-sphere parameterization holds for n = 2..16 and its
//     n = 3 circle is exactly the d=3 coefficient family.
Criterion criterion_sphere_parameterization() {
  Rng rng = Rng::for_stream(42, 110);
  double constraint = 0.0;
  for (int n = 2; n <= 16; ++n) {
    for (int i = 0; i < 1000; ++i) {
      std::vector<double> angles(n - 2);
      for (double& t : angles) t = rng.angle();
      const int branch = rng.uniform01() < 0.5 ? +1 : -1;
      const Eigen::VectorXd a = simplex_sphere_point(n, angles, branch);
      constraint = std::max(constraint, std::abs(a.sum() - 1.0));
      constraint = std::max(constraint, std::abs(a.squaredNorm() - 1.0));
    }
  }
  double circle = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Eigen::VectorXd a = simplex_sphere_point(3, {rng.angle()});
    // recover the family angle from the point, then compare all coefficients
    const double phi = std::atan2(std::sqrt(3.0) * (a[2] - a[1]) / 2.0,
                                  (3.0 * a[0] - 1.0) / 2.0);
    const auto q = splus_coefficients(phi);
    for (int k = 0; k < 3; ++k) {
      circle = std::max(circle, std::abs(a[k] - q[k]));
    }
  }
  Criterion c;
  c.label = "sum-one unit vectors for n=2..16; n=3 circle equals the family";
  c.pass = constraint <= 1e-12 && circle <= 1e-10;
  c.detail = "max constraint residual " + num(constraint) +
             " (tol 1e-12), max n=3 reparameterization gap " + num(circle) +
             " (tol 1e-10)";
  return c;
}

// 11. The full verify report is byte-identical across runs.
Criterion criterion_determinism() {
  const fs::path dir =
      fs::temp_directory_path() /
      ("entroqubit_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path a = dir / "run_a.json";
  const fs::path b = dir / "run_b.json";
  const std::string base = std::string("\"") + ENTROQUBIT_CLI_PATH +
                           "\" verify all --seed 42 --out \"";
  const std::string quiet = "\" > /dev/null 2>&1";
  const int status_a = std::system((base + a.string() + quiet).c_str());
  const int status_b = std::system((base + b.string() + quiet).c_str());
  const bool both_green = status_a != -1 && status_b != -1 &&
                          WIFEXITED(status_a) && WEXITSTATUS(status_a) == 0 &&
                          WIFEXITED(status_b) && WEXITSTATUS(status_b) == 0;
  std::string bytes_a;
  std::string bytes_b;
  for (const auto& [path, target] : {std::pair{a, &bytes_a}, {b, &bytes_b}}) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    *target = buf.str();
  }
  Criterion c;
  c.label = "two `verify all --seed 42` runs are byte-identical";
  c.pass = both_green && !bytes_a.empty() && bytes_a == bytes_b;
  c.detail = "exit codes " +
             std::to_string(WIFEXITED(status_a) ? WEXITSTATUS(status_a) : -1) +
             " / " +
             std::to_string(WIFEXITED(status_b) ? WEXITSTATUS(status_b) : -1) +
             ", " + std::to_string(bytes_a.size()) + " vs " +
             std::to_string(bytes_b.size()) + " bytes, identical: " +
             (bytes_a == bytes_b && !bytes_a.empty() ? "yes" : "no");
  return c;
}

}  // namespace

int main() {
  const std::vector<Criterion> results = {
      criterion_well_formed(),
      criterion_collision_conservation(),
      criterion_coefficient_range(),
      criterion_d2_nogo(),
      criterion_domain_bounds(),
      criterion_frame_identities(),
      criterion_effect_consistency(),
      criterion_rotation_correspondence(),
      criterion_lift_factorize(),
      criterion_sphere_parameterization(),
      criterion_determinism(),
  };

  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Criterion& c = results[i];
    if (!c.pass) ++failed;
    std::cout << "[" << (i + 1 < 10 ? " " : "") << (i + 1) << "] "
              << (c.pass ? "PASS" : "FAIL") << "  " << c.label << " — "
              << c.detail << "\n";
  }
  std::cout << (results.size() - failed) << "/" << results.size()
            << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
