#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lgk3/explorer.hpp"
#include "lgk3/protocol.hpp"

using namespace lgk3;

TEST_CASE("identity dynamics from an eigenstate") {
  ProtocolSpec spec;
  spec.initial_state = bloch_to_density({0, 0, 1});
  const ProtocolResult res = simulate_protocol(spec);
  CHECK(res.p12.pp == doctest::Approx(1.0));
  CHECK(res.p12.pm == doctest::Approx(0.0));
  CHECK(res.lg.k3 == doctest::Approx(1.0));
}

TEST_CASE("family maps reach 3/2 from any initial state") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto [d12, d23] = make_lueders_pair({rng.uniform(0, 2 * M_PI),
                                               rng.uniform(0, 2 * M_PI),
                                               rng.uniform(0, 2 * M_PI),
                                               rng.uniform(0, 1 - 1e-6),
                                               rng.uniform(0, 1 - 1e-6)});
    ProtocolSpec spec;
    spec.initial_state = bloch_to_density(random_state(rng));
    spec.map12 = d12;
    spec.map23 = d23;
    const ProtocolResult res = simulate_protocol(spec);
    CHECK(std::abs(res.lg.k3 - 1.5) < 1e-12);
  }
}

TEST_CASE("joint probability of the first pair factorizes through z components") {
  Rng rng(44);
  for (int i = 0; i < 50; ++i) {
    const BlochVector w0 = random_state(rng);
    const UnitalMap d12 = random_positive_unital(rng);
    ProtocolSpec spec;
    spec.initial_state = bloch_to_density(w0);
    spec.map12 = d12;
    spec.map23 = random_positive_unital(rng);
    const ProtocolResult res = simulate_protocol(spec);
    const double s3 = w0.z;
    const double d33 = d12.delta(2, 2);
    CHECK(std::abs(res.p12.pp - 0.5 * (1 + s3) * 0.5 * (1 + d33)) < 1e-12);
    CHECK(std::abs(res.p12.pm - 0.5 * (1 + s3) * 0.5 * (1 - d33)) < 1e-12);
    CHECK(std::abs(res.p12.mp - 0.5 * (1 - s3) * 0.5 * (1 - d33)) < 1e-12);
    CHECK(std::abs(res.p12.mm - 0.5 * (1 - s3) * 0.5 * (1 + d33)) < 1e-12);
  }
}

TEST_CASE("distributions normalize and oracle matches the closed forms") {
  Rng rng(20260807);
  for (int i = 0; i < 1000; ++i) {
    ProtocolSpec spec;
    spec.initial_state = bloch_to_density(random_state(rng));
    if (i % 2 == 0) spec.pre_map = AffineQubitMap(random_cptp_unital(rng));
    spec.map12 = random_positive_unital(rng);
    spec.map23 = random_positive_unital(rng);
    const ProtocolResult res = simulate_protocol(spec);

    for (const auto* jd : {&res.p12, &res.p23, &res.p13}) {
      CHECK(std::abs(jd->sum() - 1.0) < 1e-12);
      for (double p : {jd->pp, jd->pm, jd->mp, jd->mm}) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
      }
    }

    const LGResult closed = correlators_from_maps(spec.map12, spec.map23);
    CHECK(std::abs(res.lg.k3 - closed.k3) < 1e-12);
    CHECK(std::abs(res.lg.c12 - closed.c12) < 1e-12);
    CHECK(std::abs(res.lg.c23 - closed.c23) < 1e-12);
    CHECK(std::abs(res.lg.c13 - closed.c13) < 1e-12);

    const double via_params = k3_algebraic(params_from_maps(spec.map12, spec.map23));
    CHECK(std::abs(res.lg.k3 - via_params) < 1e-12);
  }
}

TEST_CASE("C12 is independent of the initial state and the pre-map") {
  Rng rng(606);
  const UnitalMap d12 = random_positive_unital(rng);
  const UnitalMap d23 = random_positive_unital(rng);
  double first_c12 = 0.0;
  for (int i = 0; i < 50; ++i) {
    ProtocolSpec spec;
    spec.initial_state = bloch_to_density(random_state(rng));
    spec.pre_map = AffineQubitMap(random_cptp_unital(rng));
    spec.map12 = d12;
    spec.map23 = d23;
    const double c12 = simulate_protocol(spec).lg.c12;
    if (i == 0)
      first_c12 = c12;
    else
      CHECK(std::abs(c12 - first_c12) < 1e-12);
  }
}

TEST_CASE("invalid protocol specs are rejected") {
  ProtocolSpec spec;
  spec.map12 = UnitalMap{Vec3(1.2, 0, 0).asDiagonal()};
  CHECK_THROWS_AS(simulate_protocol(spec), std::invalid_argument);

  ProtocolSpec bad_state;
  bad_state.initial_state = Mat2c::Identity();  // trace 2
  CHECK_THROWS_AS(simulate_protocol(bad_state), std::invalid_argument);
}

TEST_CASE("unitary protocol: trivial and maximal points") {
  const LGResult trivial = simulate_unitary_protocol(EulerAngles{}, EulerAngles{}, 0.3);
  CHECK(trivial.c12 == doctest::Approx(1.0));
  CHECK(trivial.c23 == doctest::Approx(1.0));
  CHECK(trivial.c13 == doctest::Approx(1.0));
  CHECK(trivial.k3 == doctest::Approx(1.0));

  // theta1 = theta2 = pi/6 with all phases zero is the textbook maximum.
  const LGResult precession = simulate_unitary_protocol(
      EulerAngles{0, M_PI / 6, 0}, EulerAngles{0, M_PI / 6, 0}, 0.5);
  CHECK(std::abs(precession.k3 - 1.5) < 1e-12);

  // The xi1 + phi2 combination multiplies in as a global phase, so setting
  // it to pi/2 leaves the maximum in place.
  const LGResult shifted = simulate_unitary_protocol(
      EulerAngles{0, M_PI / 6, M_PI / 4}, EulerAngles{M_PI / 4, M_PI / 6, 0}, 0.5);
  CHECK(std::abs(shifted.k3 - 1.5) < 1e-12);

  CHECK_THROWS_AS(simulate_unitary_protocol(EulerAngles{}, EulerAngles{}, 1.5),
                  std::invalid_argument);
}

TEST_CASE("unitary protocol: outer phases never matter, alpha never matters") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double t1 = rng.uniform(0, M_PI), t2 = rng.uniform(0, M_PI);
    const double phi1 = rng.uniform(0, 2 * M_PI), xi2 = rng.uniform(0, 2 * M_PI);
    const LGResult base = simulate_unitary_protocol(EulerAngles{phi1, t1, 0},
                                                    EulerAngles{0, t2, xi2}, 0.5);
    const LGResult jittered = simulate_unitary_protocol(
        EulerAngles{phi1, t1, rng.uniform(0, 2 * M_PI)},
        EulerAngles{rng.uniform(0, 2 * M_PI), t2, xi2}, rng.uniform(0, 1));
    CHECK(std::abs(base.k3 - jittered.k3) < 1e-12);
    CHECK(std::abs(base.c13 - jittered.c13) < 1e-12);
  }
}

TEST_CASE("unitary oracle equals the closed form over seeded parameters") {
  Rng rng(90210);
  for (int i = 0; i < 1000; ++i) {
    const UnitaryParams p{rng.uniform(0, M_PI), rng.uniform(0, M_PI),
                          rng.uniform(0, 2 * M_PI)};
    const LGResult oracle = simulate_unitary_protocol(p, rng.uniform(0, 1));
    CHECK(std::abs(oracle.k3 - k3_unitary(p)) < 1e-12);
    CHECK(std::abs(oracle.c12 - std::cos(2 * p.theta1)) < 1e-12);
    CHECK(std::abs(oracle.c23 - std::cos(2 * p.theta2)) < 1e-12);
  }
}

TEST_CASE("C13 amplitude expression") {
  Rng rng(31337);
  for (int i = 0; i < 200; ++i) {
    const EulerAngles u1{rng.uniform(0, 2 * M_PI), rng.uniform(0, M_PI),
                         rng.uniform(0, 2 * M_PI)};
    const EulerAngles u2{rng.uniform(0, 2 * M_PI), rng.uniform(0, M_PI),
                         rng.uniform(0, 2 * M_PI)};
    const LGResult r = simulate_unitary_protocol(u1, u2, rng.uniform(0, 1));
    const Mat2c m21 = euler_unitary(u2) * euler_unitary(u1);
    CHECK(std::abs(r.c13 - (2.0 * std::norm(m21(0, 0)) - 1.0)) < 1e-12);
  }
}

TEST_CASE("arbitrary axis equals conjugation into the z convention") {
  Rng rng(1414);
  for (int i = 0; i < 50; ++i) {
    const Vec3 raw(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    if (raw.norm() < 0.1) continue;
    const MeasurementAxis axis(raw);
    const Mat3 r = axis.rotation_to_z();

    ProtocolSpec tilted;
    tilted.initial_state = bloch_to_density(random_state(rng));
    tilted.map12 = random_positive_unital(rng);
    tilted.map23 = random_positive_unital(rng);
    tilted.axis = axis;

    ProtocolSpec conjugated;
    conjugated.initial_state = bloch_to_density(
        BlochVector::from(r * density_to_bloch(tilted.initial_state).vec()));
    conjugated.map12 = UnitalMap{r * tilted.map12.delta * r.transpose()};
    conjugated.map23 = UnitalMap{r * tilted.map23.delta * r.transpose()};

    const LGResult a = simulate_protocol(tilted).lg;
    const LGResult b = simulate_protocol(conjugated).lg;
    CHECK(std::abs(a.k3 - b.k3) < 1e-12);
    CHECK(std::abs(a.c13 - b.c13) < 1e-12);

    // The z-convention closed form applies to the conjugated maps.
    const LGResult closed =
        correlators_from_maps(conjugated.map12, conjugated.map23);
    CHECK(std::abs(a.k3 - closed.k3) < 1e-12);
  }
}

TEST_CASE("state independence probe") {
  const auto [d12, d23] = make_lueders_pair({1.0, 0.2, -0.4, 0.35, 0.8});
  CHECK(state_independence_probe(d12, d23, 100, 17) <= 1e-12);
  CHECK(state_independence_probe(UnitalMap{}, UnitalMap{}, 10, 17) == 0.0);

  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    const UnitalMap a = random_positive_unital(rng);
    const UnitalMap b = random_positive_unital(rng);
    CHECK(state_independence_probe(a, b, 25, 1000 + i) <= 1e-12);
  }
}
