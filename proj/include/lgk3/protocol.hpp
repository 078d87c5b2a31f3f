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

#ifndef LGK3_PROTOCOL_HPP
#define LGK3_PROTOCOL_HPP

#include <cstdint>
#include <optional>

#include "lgk3/correlator.hpp"

namespace lgk3 {

// Brute-force simulation of the three-time measurement protocol in the
// density-matrix picture. Nothing here reads a (3,3) matrix element; the
// correlators come out of explicit evolve / project / evolve propagation,
// which is what makes this module an independent check on the closed forms.

/// Full protocol description. pre_map covers the arbitrary evolution
/// between state preparation and the first measurement.
struct ProtocolSpec {
  DensityMatrix initial_state = 0.5 * Mat2c::Identity();
  std::optional<AffineQubitMap> pre_map;
  UnitalMap map12;
  UnitalMap map23;
  MeasurementAxis axis;
};

/// Joint outcome distribution of one measurement pair, outcomes +-1.
struct JointDistribution {
  double pp = 0.0;  // P(+1, +1)
  double pm = 0.0;  // P(+1, -1)
  double mp = 0.0;  // P(-1, +1)
  double mm = 0.0;  // P(-1, -1)

  double sum() const { return pp + pm + mp + mm; }
  double correlator() const { return pp - pm - mp + mm; }
};

struct ProtocolResult {
  JointDistribution p12;
  JointDistribution p23;
  JointDistribution p13;
  LGResult lg;
};

/// Runs all three measurement pairs. The 13 pair evolves each post-t1
/// branch through the composed map with no measurement at t2; it is not a
/// product of marginals. Throws std::invalid_argument on an invalid spec.
ProtocolResult simulate_protocol(const ProtocolSpec& spec, double tol = kDefaultTol);

/// z-y-z factored unitary U = exp(-i sz phi) exp(-i sy theta) exp(-i sz xi).
struct EulerAngles {
  double phi = 0.0;
  double theta = 0.0;
  double xi = 0.0;
};

Mat2c euler_unitary(const EulerAngles& e);

/// Unitary three-time protocol from amplitudes. alpha is the probability of
/// the + outcome at t1; correlators do not depend on it. The 13 correlator
/// is 2|<+|U2 U1|+>|^2 - 1.
LGResult simulate_unitary_protocol(const EulerAngles& u1, const EulerAngles& u2,
                                   double alpha);

/// Convenience entry point in the closed-form parametrization. The
/// correlators depend on the two unitaries only through theta1, theta2 and
/// the relative phase of the two amplitude paths in <+|U2 U1|+>; this
/// builds a pair realizing that family at parameter gamma.
LGResult simulate_unitary_protocol(const UnitaryParams& p, double alpha = 0.5);

/// Max - min spread of K3 over n_states random initial states and random
/// unital pre-maps, holding (map12, map23) fixed. Unital dynamics makes the
/// spread vanish to rounding.
double state_independence_probe(const UnitalMap& map12, const UnitalMap& map23,
                                int n_states, std::uint64_t seed);

}  // namespace lgk3

#endif  // LGK3_PROTOCOL_HPP
