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

#include "lgk3/correlator.hpp"

#include <cmath>

namespace lgk3 {

LGResult correlators_from_maps(const UnitalMap& d12, const UnitalMap& d23, double tol) {
  if (!is_positive(d12, tol))
    throw std::invalid_argument("correlators_from_maps: d12 is not a positive map");
  if (!is_positive(d23, tol))
    throw std::invalid_argument("correlators_from_maps: d23 is not a positive map");
  LGResult r;
  r.c12 = d12.delta(2, 2);
  r.c23 = d23.delta(2, 2);
  r.c13 = (d23.delta * d12.delta)(2, 2);
  r.k3 = r.c12 + r.c23 - r.c13;
  return r;
}

double k3_algebraic(const PositiveUnitalParams& p) {
  const double ct1 = std::cos(p.theta1), st1 = std::sin(p.theta1);
  const double ct2 = std::cos(p.theta2), st2 = std::sin(p.theta2);
  return p.r1 * ct1 + p.r2 * ct2 -
         p.r1 * p.r2 * (ct1 * ct2 + st1 * st2 * std::cos(p.phi1 - p.phi2));
}

namespace {

void polar_from_vec(double tx, double ty, double z, double& r, double& theta,
                    double& phi) {
  const double trans = std::hypot(tx, ty);
  r = std::hypot(trans, z);
  if (r <= 0.0) {
    theta = 0.0;
    phi = 0.0;
    return;
  }
  theta = std::atan2(trans, z);
  phi = std::atan2(ty, tx);
  if (phi < 0.0) phi += 2.0 * M_PI;
}

}  // namespace

PositiveUnitalParams params_from_maps(const UnitalMap& d12, const UnitalMap& d23) {
  PositiveUnitalParams p;
  polar_from_vec(d12.delta(0, 2), d12.delta(1, 2), d12.delta(2, 2), p.r1, p.theta1,
                 p.phi1);
  polar_from_vec(d23.delta(2, 0), d23.delta(2, 1), d23.delta(2, 2), p.r2, p.theta2,
                 p.phi2);
  return p;
}

double k3_unitary(const UnitaryParams& p) {
  const double c1 = std::cos(2.0 * p.theta1), s1 = std::sin(2.0 * p.theta1);
  const double c2 = std::cos(2.0 * p.theta2), s2 = std::sin(2.0 * p.theta2);
  return c1 + c2 - c1 * c2 - s1 * s2 * std::cos(2.0 * p.gamma);
}

}  // namespace lgk3
