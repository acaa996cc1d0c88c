#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "entroqubit/dynamics3.hpp"
#include "entroqubit/dynamics4.hpp"
#include "entroqubit/entropy.hpp"
#include "entroqubit/rng.hpp"
#include "entroqubit/states.hpp"

using namespace entroqubit;

TEST_CASE("standard frames satisfy the defining identities") {
  for (const int d : {3, 4}) {
    const Frame frame = Frame::standard(d);
    CHECK(frame.dim() == d);
    CHECK(frame.bloch_dim() == d - 1);
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(d - 1);
    Eigen::MatrixXd outer = Eigen::MatrixXd::Zero(d - 1, d - 1);
    for (int k = 0; k < d; ++k) {
      const Eigen::VectorXd v = frame.vector(k);
      CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
      sum += v;
      outer += v * v.transpose();
    }
    CHECK(sum.cwiseAbs().maxCoeff() < 1e-14);
    const Eigen::MatrixXd target =
        frame.overcompleteness_constant() *
        Eigen::MatrixXd::Identity(d - 1, d - 1);
    CHECK((outer - target).cwiseAbs().maxCoeff() < 1e-14);
  }
  CHECK_THROWS_AS(Frame::standard(5), std::invalid_argument);
}

TEST_CASE("frame construction rejects broken vector sets") {
  Eigen::MatrixXd not_unit(3, 2);
  not_unit << 0, 2,
              1.7320508075688772 / 2.0, -0.5,
              -1.7320508075688772 / 2.0, -0.5;
  CHECK_THROWS_AS(Frame{not_unit}, std::invalid_argument);

  Eigen::MatrixXd not_zero_sum(3, 2);
  not_zero_sum << 0, 1,
                  0, 1,
                  1, 0;
  CHECK_THROWS_AS(Frame{not_zero_sum}, std::invalid_argument);
}

TEST_CASE("bloch map at a landmark point") {
  const Frame trine = Frame::trine();
  const ProbVector p = bloch_to_state({0.0, 1.0, 0.0}, trine);
  CHECK(p[0] == doctest::Approx(2.0 / 3.0));
  CHECK(p[1] == doctest::Approx(1.0 / 6.0));
  CHECK(p[2] == doctest::Approx(1.0 / 6.0));

  const BlochResult back = state_to_bloch(p, trine);
  CHECK(back.in_ball);
  CHECK(back.point.x == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(back.point.y == doctest::Approx(1.0));
}

TEST_CASE("simplex vertices sit well outside the ball") {
  const Frame trine = Frame::trine();
  const BlochResult vertex = state_to_bloch(ProbVector::basis(3, 0), trine);
  CHECK_FALSE(vertex.in_ball);
  CHECK(vertex.point.norm() == doctest::Approx(2.0));
  CHECK(vertex.point.x == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(vertex.point.y == doctest::Approx(2.0));

  const Frame tetra = Frame::tetrahedron();
  const BlochResult v4 = state_to_bloch(ProbVector::basis(4, 2), tetra);
  CHECK_FALSE(v4.in_ball);
  CHECK(v4.point.norm() == doctest::Approx(3.0));
}

TEST_CASE("collision norm identity links state and bloch radius") {
  Rng rng(17);
  for (const int d : {3, 4}) {
    const Frame frame = Frame::standard(d);
    for (int i = 0; i < 200; ++i) {
      const BlochPoint b = sample_bloch(frame, rng);
      const ProbVector p = bloch_to_state(b, frame);
      const double expected =
          1.0 / d + b.norm() * b.norm() / (d * (d - 1.0));
      CHECK(p.entries().squaredNorm() ==
            doctest::Approx(expected).epsilon(1e-12));
      const BlochResult back = state_to_bloch(p, frame);
      CHECK(back.in_ball);
      CHECK((back.point.coords(d - 1) - b.coords(d - 1)).cwiseAbs().maxCoeff() <
            1e-13);
    }
  }
}

TEST_CASE("bloch map rejects points outside its domain") {
  const Frame trine = Frame::trine();
  CHECK_THROWS_AS(bloch_to_state({0.0, 1.5, 0.0}, trine), std::domain_error);
  // trine points must stay in the plane
  CHECK_THROWS_AS(bloch_to_state({0.0, 0.5, 0.1}, trine),
                  std::invalid_argument);
  CHECK_THROWS_AS(state_to_bloch(ProbVector::uniform(4), trine),
                  std::invalid_argument);
}

TEST_CASE("membership classification over the standard domain") {
  CHECK(domain_membership(ProbVector::uniform(3), 3) == Membership::interior);
  CHECK(domain_membership(ProbVector::basis(3, 0), 3) ==
        Membership::outside_ball);
  // the ball-boundary witness state
  const ProbVector boundary(Eigen::Vector3d(2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0));
  CHECK(domain_membership(boundary, 3) == Membership::extremal);
  const ProbVector quasi(Eigen::Vector3d(1.2, -0.1, -0.1));
  CHECK(domain_membership(quasi, 3) == Membership::outside_simplex);
  CHECK(domain_membership(ProbVector::uniform(4), 4) == Membership::interior);
}

TEST_CASE("standard domain constants") {
  const StateDomain d3 = StateDomain::standard(3);
  CHECK(d3.norm_lo == doctest::Approx(1.0 / 3.0));
  CHECK(d3.norm_hi == doctest::Approx(0.5));
  CHECK(d3.lambda_max == doctest::Approx(0.5));
  const StateDomain d4 = StateDomain::standard(4);
  CHECK(d4.norm_lo == doctest::Approx(0.25));
  CHECK(d4.norm_hi == doctest::Approx(1.0 / 3.0));
  CHECK(d4.lambda_max == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("samplers respect their advertised supports") {
  Rng rng(23);
  for (const int d : {3, 4}) {
    const Frame frame = Frame::standard(d);
    for (int i = 0; i < 200; ++i) {
      const ProbVector s = sample_simplex(d, rng);
      CHECK(s.normalized());
      CHECK(s.positive());
      const ProbVector in_domain = sample_domain_state(frame, rng);
      const Membership m = domain_membership(in_domain, d);
      CHECK((m == Membership::interior || m == Membership::extremal));
    }
  }
}

TEST_CASE("measured positivity bound matches the closed form for d=3") {
  DomainSearchOptions opts;
  opts.n_random_directions = 40;
  opts.n_grid = 256;
  const DomainBoundResult r = domain_bound_search(3, opts);
  CHECK(r.lambda_max == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(r.K == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(r.directions_tested == 41);  // the vertex ray plus 40 random rays
  // the bound is direction-independent
  CHECK(r.lambda_max_over_dirs - r.lambda_min_over_dirs < 1e-6);
}

TEST_CASE("permutations alone leave the whole simplex available") {
  DomainSearchOptions opts;
  opts.dynamics = DynamicsSet::permutations_only;
  opts.n_random_directions = 10;
  const DomainBoundResult r = domain_bound_search(3, opts);
  CHECK(r.lambda_max == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("the domain is closed under both d=3 branches") {
  Rng rng(43);
  const Frame trine = Frame::trine();
  for (int i = 0; i < 300; ++i) {
    const ProbVector p = sample_domain_state(trine, rng);
    const double phi = rng.angle();
    for (const auto& s : {make_splus(phi), make_sminus(phi)}) {
      const ProbVector evolved = apply(s, p);
      CHECK(evolved.positive());
      CHECK(state_to_bloch(evolved, trine).in_ball);
    }
  }
}

TEST_CASE("d=4 composed rotations act as bloch isometries") {
  Rng rng(47);
  const Frame tetra = Frame::tetrahedron();
  for (int i = 0; i < 200; ++i) {
    const QuasiBistochasticMatrix s = make_composed(
        {rng.angle(), rng.angle(), rng.angle(), rng.angle()});
    const BlochPoint b = sample_bloch(tetra, rng);
    const ProbVector evolved = apply(s, bloch_to_state(b, tetra));
    CHECK(evolved.positive());
    const BlochResult image = state_to_bloch(evolved, tetra);
    CHECK(image.in_ball);
    CHECK(image.point.norm() == doctest::Approx(b.norm()).epsilon(1e-11));
  }
}

TEST_CASE("lattice dynamics track bloch rotations with one global sign") {
  const CorrespondenceReport r = rotation_correspondence_check(24, 24, 5);
  CHECK(r.consistent);
  CHECK(r.sigma == 1);
  CHECK(r.max_deviation < 1e-12);
}
