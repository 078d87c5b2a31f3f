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

#ifndef LGK3_CORRELATOR_HPP
#define LGK3_CORRELATOR_HPP

#include "lgk3/channel.hpp"

namespace lgk3 {

// Two-time correlators of the +-1 observable measured along z at three
// times, with unital maps d12 and d23 driving the two intervals:
//
//   C12 = d12(3,3)   C23 = d23(3,3)   C13 = (d23 * d12)(3,3)
//
// and K3 = C12 + C23 - C13. The composition is time-ordered: d12 acts first.

struct LGResult {
  double c12 = 1.0;
  double c23 = 1.0;
  double c13 = 1.0;
  double k3 = 1.0;
};

/// Polar parametrization of the correlator-relevant entries: column 3 of
/// d12 is r1*(sin t1 cos p1, sin t1 sin p1, cos t1), row 3 of d23 likewise
/// with (r2, t2, p2). r in [0,1], theta in [0,pi], phi in [0,2pi).
struct PositiveUnitalParams {
  double r1 = 1.0;
  double r2 = 1.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

/// Parameters of the closed-form unitary K3. gamma enters only via cos(2 gamma).
struct UnitaryParams {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double gamma = 0.0;
};

/// Correlators and K3 straight from the matrix elements. Throws
/// std::invalid_argument if either map fails the positivity check.
LGResult correlators_from_maps(const UnitalMap& d12, const UnitalMap& d23,
                               double tol = kDefaultTol);

/// K3 = r1 cos t1 + r2 cos t2 - r1 r2 [cos t1 cos t2 + sin t1 sin t2 cos(p1-p2)].
double k3_algebraic(const PositiveUnitalParams& p);

/// Polar parameters recovered from a map pair. thetas come from atan2 of
/// (transverse norm, z entry) so the poles are stable; a vanishing radius
/// maps to theta = phi = 0 by convention.
PositiveUnitalParams params_from_maps(const UnitalMap& d12, const UnitalMap& d23);

/// K3 = cos 2t1 + cos 2t2 - cos 2t1 cos 2t2 - sin 2t1 sin 2t2 cos 2g.
double k3_unitary(const UnitaryParams& p);

}  // namespace lgk3

#endif  // LGK3_CORRELATOR_HPP
