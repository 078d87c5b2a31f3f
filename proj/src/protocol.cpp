// Copyright 2026 The lgk3 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lgk3/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lgk3 {

namespace {

struct Projectors {
  Mat2c plus;
  Mat2c minus;
};

Projectors axis_projectors(const MeasurementAxis& axis) {
  const Vec3 n = axis.direction();
  const Mat2c nsigma = n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
  return {0.5 * (Mat2c::Identity() + nsigma), 0.5 * (Mat2c::Identity() - nsigma)};
}

double prob(const Mat2c& proj, const DensityMatrix& rho) {
  return std::clamp((proj * rho).trace().real(), 0.0, 1.0);
}

DensityMatrix collapse(const Mat2c& proj, const DensityMatrix& rho, double p) {
  if (p <= 0.0) return proj;  // weight-zero branch, state immaterial
  return (proj * rho * proj.adjoint()) / p;
}

/// Joint distribution of (measure, evolve, measure) starting from rho.
JointDistribution measure_evolve_measure(const DensityMatrix& rho,
                                         const AffineQubitMap& between,
                                         const Projectors& pr) {
  JointDistribution out;
  const double p_plus = prob(pr.plus, rho);
  const double p_minus = prob(pr.minus, rho);
  const DensityMatrix evolved_plus =
      apply_to_operator(between, collapse(pr.plus, rho, p_plus));
  const DensityMatrix evolved_minus =
      apply_to_operator(between, collapse(pr.minus, rho, p_minus));
  out.pp = p_plus * prob(pr.plus, evolved_plus);
  out.pm = p_plus * prob(pr.minus, evolved_plus);
  out.mp = p_minus * prob(pr.plus, evolved_minus);
  out.mm = p_minus * prob(pr.minus, evolved_minus);
  return out;
}

}  // namespace

ProtocolResult simulate_protocol(const ProtocolSpec& spec, double tol) {
  if (!is_valid_density(spec.initial_state, tol))
    throw std::invalid_argument("simulate_protocol: invalid initial state");
  if (!is_positive(spec.map12, tol))
    throw std::invalid_argument("simulate_protocol: map12 is not positive");
  if (!is_positive(spec.map23, tol))
    throw std::invalid_argument("simulate_protocol: map23 is not positive");
  if (spec.pre_map && max_image_norm(*spec.pre_map) > 1.0 + tol)
    throw std::invalid_argument("simulate_protocol: pre_map is not positive");

  const Projectors pr = axis_projectors(spec.axis);
  const DensityMatrix rho1 =
      spec.pre_map ? apply_to_operator(*spec.pre_map, spec.initial_state)
                   : spec.initial_state;

  const AffineQubitMap m12(spec.map12);
  const AffineQubitMap m23(spec.map23);

  ProtocolResult res;
  res.p12 = measure_evolve_measure(rho1, m12, pr);
  // Pair (2,3): first measurement happens at t2, after undisturbed evolution.
  res.p23 = measure_evolve_measure(apply_to_operator(m12, rho1), m23, pr);
  // Pair (1,3): no measurement at t2, so each post-t1 branch rides the
  // composed map.
  res.p13 = measure_evolve_measure(rho1, compose(m23, m12), pr);

  res.lg.c12 = res.p12.correlator();
  res.lg.c23 = res.p23.correlator();
  res.lg.c13 = res.p13.correlator();
  res.lg.k3 = res.lg.c12 + res.lg.c23 - res.lg.c13;
  return res;
}

Mat2c euler_unitary(const EulerAngles& e) {
  const Complex i(0.0, 1.0);
  Mat2c zl = Mat2c::Zero(), zr = Mat2c::Zero(), y;
  zl(0, 0) = std::exp(-i * e.phi);
  zl(1, 1) = std::exp(i * e.phi);
  zr(0, 0) = std::exp(-i * e.xi);
  zr(1, 1) = std::exp(i * e.xi);
  y << std::cos(e.theta), -std::sin(e.theta), std::sin(e.theta), std::cos(e.theta);
  return zl * y * zr;
}

LGResult simulate_unitary_protocol(const EulerAngles& u1, const EulerAngles& u2,
                                   double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("simulate_unitary_protocol: alpha outside [0,1]");
  const double beta = 1.0 - alpha;
  const Mat2c m1 = euler_unitary(u1);
  const Mat2c m2 = euler_unitary(u2);
  const Mat2c m21 = m2 * m1;

  auto table = [](const Mat2c& u, double a, double b) {
    JointDistribution d;
    d.pp = a * std::norm(u(0, 0));
    d.pm = a * std::norm(u(1, 0));
    d.mp = b * std::norm(u(0, 1));
    d.mm = b * std::norm(u(1, 1));
    return d;
  };

  const JointDistribution p12 = table(m1, alpha, beta);
  // Marginal of the t2 outcome feeds the (2,3) pair; C23 is independent of it.
  const JointDistribution p23 = table(m2, p12.pp + p12.mp, p12.pm + p12.mm);
  const JointDistribution p13 = table(m21, alpha, beta);

  LGResult r;
  r.c12 = p12.correlator();
  r.c23 = p23.correlator();
  r.c13 = p13.correlator();
  r.k3 = r.c12 + r.c23 - r.c13;
  return r;
}

LGResult simulate_unitary_protocol(const UnitaryParams& p, double alpha) {
  // The inner relative phase of <+|U2 U1|+> is phi1 + xi2; offsetting it by
  // pi/2 makes the amplitude pair interfere exactly as the closed form's
  // cos(2 gamma) term. The outer z factors are global phases.
  const EulerAngles u1{p.gamma + M_PI / 2.0, p.theta1, 0.0};
  const EulerAngles u2{0.0, p.theta2, 0.0};
  return simulate_unitary_protocol(u1, u2, alpha);
}

double state_independence_probe(const UnitalMap& map12, const UnitalMap& map23,
                                int n_states, std::uint64_t seed) {
  Rng rng(seed);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_states; ++i) {
    ProtocolSpec spec;
    spec.initial_state = bloch_to_density(random_state(rng));
    spec.pre_map = AffineQubitMap(random_cptp_unital(rng));
    spec.map12 = map12;
    spec.map23 = map23;
    const double k3 = simulate_protocol(spec).lg.k3;
    lo = std::min(lo, k3);
    hi = std::max(hi, k3);
  }
  return n_states > 0 ? hi - lo : 0.0;
}

}  // namespace lgk3
