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

#ifndef LGK3_EXPLORER_HPP
#define LGK3_EXPLORER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lgk3/correlator.hpp"
#include "lgk3/optimize.hpp"

namespace lgk3 {

// ---------------------------------------------------------------------------
// The maximal-violation family
// ---------------------------------------------------------------------------

/// Parameters of the CPTP, divisible map pair that attains K3 = 3/2:
///
///   d12 = Rz(phi) Ry(pi/3) Rz(gamma) diag(c, c, 1)
///   d23 = diag(c', c', 1) Rz(gamma') Ry(pi/3) Rz(-phi)
///
/// with c, c' in [0, 1). c = 1 is the unitary edge and is excluded here.
struct LuedersFamilyPoint {
  double phi = 0.0;
  double gamma = 0.0;
  double gamma_prime = 0.0;
  double c = 0.0;
  double c_prime = 0.0;
};

/// Builds (d12, d23) from a family point. Throws std::invalid_argument
/// when c or c' is outside [0, 1).
std::pair<UnitalMap, UnitalMap> make_lueders_pair(const LuedersFamilyPoint& p);

// ---------------------------------------------------------------------------
// Constrained K3 maximization
// ---------------------------------------------------------------------------

enum class ConstraintSet {
  /// Six-parameter box (r1, r2, theta1, theta2, phi1, phi2); every point is
  /// a positive unital pair by construction.
  PositiveUnital,
  /// Pairs d12 = Rz(dphi) Ry(theta1) diag(c,c,r1), d23 = diag(c,c,r2) Ry(theta2);
  /// lattice points failing the CP or determinant conditions are skipped.
  CptpDivisible,
  /// Family pair applied in reversed temporal order; search over the three
  /// angles with (c, c') fixed from the config.
  ReversedOrder,
  /// d12 an arbitrary rotation (unitary-like), d23 a uniform shrink by s
  /// composed with a rotation; search over (theta1, theta2, dphi).
  ShrinkLimited,
};

struct SearchConfig {
  ConstraintSet constraint = ConstraintSet::PositiveUnital;
  int grid = 25;             // >= 3 per dimension
  double refine_tol = 1e-8;  // > 0
  std::uint64_t seed = 0;    // echoed into outputs; the search is deterministic
  int threads = 0;           // 0 = hardware concurrency
  double shrink = 1.0;       // ShrinkLimited only, in (0, 1]
  double c = 0.99;           // ReversedOrder only, in [0, 1)
  double c_prime = 0.99;     // ReversedOrder only, in [0, 1)
};

struct SearchResult {
  double best_k3 = 0.0;
  std::vector<std::pair<std::string, double>> argmax;  // named parameters
  UnitalMap d12, d23;  // concrete maps at the argmax
  long long evaluations = 0;
  long long constraint_violations = 0;
};

/// Lattice scan plus derivative-free refinement over the configured
/// constraint set. Deterministic for fixed (grid, constraint set). Throws
/// std::invalid_argument on a bad config and EmptyFeasibleSetError when the
/// lattice contains no feasible point.
SearchResult maximize_k3(const SearchConfig& config);

// ---------------------------------------------------------------------------
// Sequencing asymmetry and decoherence threshold
// ---------------------------------------------------------------------------

/// z component of the measured eigenstate after the family pair is applied
/// in reversed order: (1 - 3 c c' cos(gamma + gamma')) / 4. Strictly above
/// -1/2 whenever c, c' < 1, which is what blocks the reversed-order bound.
double reversed_sequence_z(double c, double c_prime, double gamma, double gamma_prime);

struct SweepPoint {
  double s = 1.0;
  double max_k3 = 0.0;
  std::vector<std::pair<std::string, double>> argmax;
};

/// Maximal K3 as a function of the uniform shrink s of the second interval.
/// The stationary point sits at cos(theta2) = s/2, theta1 = pi - 2 theta2,
/// giving 1 + s^2/2.
std::vector<SweepPoint> shrink_sweep(const std::vector<double>& s_values,
                                     const SearchConfig& base = {});

// ---------------------------------------------------------------------------
// Trajectories and the threshold certificate
// ---------------------------------------------------------------------------

/// Samples the Bloch-sphere path of `start` through the given legs. Each leg
/// is rendered by interpolating its rotation factors along the geodesic and
/// its singular values linearly from 1; step 0 and the final step of a leg
/// are exact map applications, interior steps are visualization only.
/// Returns legs.size() * samples_per_leg points, leg-major.
std::vector<BlochVector> bloch_trajectory(const std::vector<UnitalMap>& legs,
                                          const BlochVector& start,
                                          int samples_per_leg);

/// One near-optimal candidate: the claimed K3 and the maps that produced it.
struct CandidateRecord {
  double k3 = 0.0;
  UnitalMap d12, d23;
};

struct CertificateReport {
  long long checked = 0;  // records with k3 above the threshold
  long long passed = 0;
  std::vector<std::size_t> counterexamples;  // indices into the input
  double min_norm = 0.0;  // smallest post-second-interval norm among checked
  bool ok() const { return counterexamples.empty(); }
};

/// Necessary condition for a near-maximal K3: the measured eigenstate,
/// pushed through the second-interval map, must keep at least half of its
/// length. Flags every record that claims K3 >= k3_threshold while
/// ||d23 * z|| < norm_threshold.
CertificateReport threshold_certificate(const std::vector<CandidateRecord>& records,
                                        double k3_threshold = 1.5 - 1e-6,
                                        double norm_threshold = 0.5 - 1e-6);

}  // namespace lgk3

#endif  // LGK3_EXPLORER_HPP
