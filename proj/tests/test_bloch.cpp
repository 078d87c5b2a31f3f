#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lgk3/bloch.hpp"
#include "lgk3/channel.hpp"

using namespace lgk3;

TEST_CASE("bloch_to_density on eigenstates and the maximally mixed state") {
  const DensityMatrix up = bloch_to_density({0, 0, 1});
  CHECK(std::abs(up(0, 0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(up(1, 1)) < 1e-15);
  CHECK(std::abs(up(0, 1)) < 1e-15);

  const DensityMatrix mixed = bloch_to_density({0, 0, 0});
  CHECK((mixed - 0.5 * Mat2c::Identity()).norm() < 1e-15);
}

TEST_CASE("states on the unit sphere are pure") {
  // The image of the z eigenstate under the unitary-like family map.
  const double s3 = std::sqrt(3.0) / 2.0;
  const DensityMatrix rho = bloch_to_density({s3, 0.0, 0.5});
  Eigen::SelfAdjointEigenSolver<Mat2c> es(rho, Eigen::EigenvaluesOnly);
  CHECK(std::abs(es.eigenvalues()(1) - 1.0) < 1e-12);
  CHECK(std::abs(es.eigenvalues()(0)) < 1e-12);
}

TEST_CASE("density_to_bloch inverts the decomposition") {
  CHECK(density_to_bloch(bloch_to_density({0, 0, 1})).z == doctest::Approx(1.0));
  const BlochVector w = density_to_bloch(0.5 * Mat2c::Identity());
  CHECK(w.norm() < 1e-15);

  Rng rng(421);
  for (int i = 0; i < 100; ++i) {
    const BlochVector v = random_state(rng);
    const BlochVector back = density_to_bloch(bloch_to_density(v));
    CHECK(std::abs(back.x - v.x) < 1e-14);
    CHECK(std::abs(back.y - v.y) < 1e-14);
    CHECK(std::abs(back.z - v.z) < 1e-14);
  }
}

TEST_CASE("density_to_bloch rejects malformed input") {
  Mat2c bad;
  bad << Complex(1, 0), Complex(0.5, 0), Complex(0, 0), Complex(0, 0);
  CHECK_THROWS_AS(density_to_bloch(bad), std::invalid_argument);
  CHECK_THROWS_AS(density_to_bloch(Mat2c::Identity()), std::invalid_argument);
}

TEST_CASE("projection probabilities along z") {
  for (double s3 : {-1.0, -0.25, 0.0, 0.6, 1.0}) {
    const auto res = project({0, 0, s3});
    CHECK(std::abs(res.prob_plus - 0.5 * (1.0 + s3)) < 1e-15);
  }

  const auto mixed = project({0, 0, 0});
  CHECK(mixed.prob_plus == doctest::Approx(0.5));

  const auto ortho = project({1, 0, 0});
  CHECK(ortho.prob_plus == doctest::Approx(0.5));
  CHECK(ortho.post_plus.z == doctest::Approx(1.0));
  CHECK(ortho.post_minus.z == doctest::Approx(-1.0));

  CHECK_THROWS_AS(project({1.5, 0, 0}), std::invalid_argument);
}

TEST_CASE("projection along an arbitrary axis") {
  const MeasurementAxis axis(Vec3(1.0, 1.0, 0.0));
  const auto res = project({1, 0, 0}, axis);
  CHECK(std::abs(res.prob_plus - 0.5 * (1.0 + 1.0 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(res.post_plus.norm() - 1.0) < 1e-15);

  // Conjugating by rotation_to_z lands the axis on +z.
  const Vec3 rotated = axis.rotation_to_z() * axis.direction();
  CHECK((rotated - Vec3(0, 0, 1)).norm() < 1e-12);

  CHECK_THROWS_AS(MeasurementAxis(Vec3::Zero()), std::invalid_argument);
}

TEST_CASE("round trip, probability normalization and purity over seeded states") {
  Rng rng(20260808);
  for (int i = 0; i < 1000; ++i) {
    const BlochVector w = random_state(rng);
    const DensityMatrix rho = bloch_to_density(w);
    CHECK(is_valid_density(rho, 1e-12));

    const BlochVector back = density_to_bloch(rho);
    CHECK((back.vec() - w.vec()).norm() < 1e-12);

    const auto res = project(w);
    const double p_minus = 0.5 * (1.0 - w.z);
    CHECK(std::abs(res.prob_plus + p_minus - 1.0) <= 1e-15);
    CHECK(res.prob_plus >= 0.0);
    CHECK(res.prob_plus <= 1.0);

    // Eigenvalues of (I + w.sigma)/2 are (1 +- |w|)/2.
    Eigen::SelfAdjointEigenSolver<Mat2c> es(rho, Eigen::EigenvaluesOnly);
    CHECK(std::abs(es.eigenvalues()(1) - 0.5 * (1.0 + w.norm())) < 1e-12);
    CHECK(std::abs(es.eigenvalues()(0) - 0.5 * (1.0 - w.norm())) < 1e-12);
  }
}
