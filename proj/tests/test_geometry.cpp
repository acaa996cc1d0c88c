#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "entroqubit/dynamics3.hpp"
#include "entroqubit/geometry.hpp"
#include "entroqubit/rng.hpp"

using namespace entroqubit;

TEST_CASE("completed basis is orthonormal with the pinned last column") {
  for (int n = 2; n <= 16; ++n) {
    const Eigen::MatrixXd u = complete_basis(n);
    CHECK((u.transpose() * u - Eigen::MatrixXd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() < 1e-13);
    const Eigen::VectorXd last = u.col(n - 1);
    CHECK((last - Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n))))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  }
  CHECK_THROWS_AS(complete_basis(1), std::invalid_argument);
}

TEST_CASE("basis completion is bit-identical across calls") {
  for (const int n : {3, 7, 16}) {
    const Eigen::MatrixXd a = complete_basis(n);
    const Eigen::MatrixXd b = complete_basis(n);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("spherical coordinates reproduce the closed recursion") {
  // n = 3: one angle on a circle of the given radius
  const double r3 = std::sqrt(2.0 / 3.0);
  const Eigen::VectorXd p3 = sphere_point(3, {0.7}, r3);
  CHECK(p3.size() == 2);
  CHECK(p3[0] == doctest::Approx(r3 * std::cos(0.7)));
  CHECK(p3[1] == doctest::Approx(r3 * std::sin(0.7)));

  // n = 4: standard two-angle parametrization
  const Eigen::VectorXd p4 = sphere_point(4, {0.5, 1.3}, 1.0);
  CHECK(p4.size() == 3);
  CHECK(p4[0] == doctest::Approx(std::cos(0.5)));
  CHECK(p4[1] == doctest::Approx(std::sin(0.5) * std::cos(1.3)));
  CHECK(p4[2] == doctest::Approx(std::sin(0.5) * std::sin(1.3)));

  CHECK_THROWS_AS(sphere_point(4, {0.5}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sphere_point(2, {0.5}, 1.0), std::invalid_argument);
}

TEST_CASE("negative radius flips the n=2 point") {
  const Eigen::VectorXd plus = sphere_point(2, {}, 0.5);
  const Eigen::VectorXd minus = sphere_point(2, {}, -0.5);
  CHECK(plus[0] == 0.5);
  CHECK(minus[0] == -0.5);
}

TEST_CASE("n=2 branches are exactly the two permutation points") {
  const Eigen::VectorXd a = simplex_sphere_point(2, {}, +1);
  const Eigen::VectorXd b = simplex_sphere_point(2, {}, -1);
  const double split = std::abs(a[0] - a[1]);
  CHECK(split == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a[0] + a[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(b[0] == doctest::Approx(a[1]).epsilon(1e-14));
  CHECK(b[1] == doctest::Approx(a[0]).epsilon(1e-14));
}

TEST_CASE("both constraints hold across dimensions and angles") {
  Rng rng(51);
  for (int n = 2; n <= 16; ++n) {
    for (int i = 0; i < 100; ++i) {
      std::vector<double> angles(n - 2);
      for (double& t : angles) t = rng.angle();
      const int branch = rng.uniform01() < 0.5 ? +1 : -1;
      const Eigen::VectorXd a = simplex_sphere_point(n, angles, branch);
      REQUIRE(a.size() == n);
      CHECK(a.sum() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(a.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(simplex_sphere_point(3, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(simplex_sphere_point(3, {0.1}, 0), std::invalid_argument);
}

TEST_CASE("the n=3 circle is the d=3 coefficient family") {
  // every point of the circle matches some angle of the rotation family,
  // recovered analytically from the leading coefficients
  for (int i = 0; i < 500; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 500.0;
    const Eigen::VectorXd a = simplex_sphere_point(3, {t});
    const double phi = std::atan2(std::sqrt(3.0) * (a[2] - a[1]) / 2.0,
                                  (3.0 * a[0] - 1.0) / 2.0);
    const auto q = splus_coefficients(phi);
    CHECK(a[0] == doctest::Approx(q[0]).epsilon(1e-10));
    CHECK(a[1] == doctest::Approx(q[1]).epsilon(1e-10));
    CHECK(a[2] == doctest::Approx(q[2]).epsilon(1e-10));
  }
}
