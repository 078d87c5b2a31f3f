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

#ifndef LGK3_CHANNEL_HPP
#define LGK3_CHANNEL_HPP

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lgk3/bloch.hpp"

namespace lgk3 {

// ---------------------------------------------------------------------------
// Transfer-matrix representations
// ---------------------------------------------------------------------------
//
// A trace-preserving qubit map acts on Stokes vectors (1, w) through the
// 4x4 block matrix [[1, 0], [b, delta]]: w -> b + delta * w. The map is
// unital exactly when b = 0, in which case delta alone defines it.

/// Unital trace-preserving qubit map: w -> delta * w.
struct UnitalMap {
  Mat3 delta = Mat3::Identity();
};

/// General trace-preserving qubit map: w -> b + delta * w.
struct AffineQubitMap {
  Vec3 b = Vec3::Zero();
  Mat3 delta = Mat3::Identity();

  AffineQubitMap() = default;
  AffineQubitMap(const Vec3& b_, const Mat3& delta_) : b(b_), delta(delta_) {}
  explicit AffineQubitMap(const UnitalMap& m) : b(Vec3::Zero()), delta(m.delta) {}

  bool is_unital(double tol = kDefaultTol) const { return b.norm() <= tol; }
};

/// Rotation-scaling-rotation factorization delta = r1 * diag(d) * r2 with
/// proper rotations r1, r2. Entries of d are signed; |d_i| <= 1 for positive
/// maps.
struct RDRDecomposition {
  Mat3 r1 = Mat3::Identity();
  Vec3 d = Vec3::Ones();
  Mat3 r2 = Mat3::Identity();

  Mat3 reconstruct() const { return r1 * d.asDiagonal() * r2; }
};

/// Kraus operators A_k of a completely positive map:
/// rho -> sum_k A_k rho A_k^dagger.
struct KrausSet {
  std::vector<Mat2c> ops;
};

/// Aggregated classification of a trace-preserving qubit map.
struct ChannelReport {
  bool is_trace_preserving = true;
  bool is_unital = false;
  bool is_positive = false;
  bool is_completely_positive = false;
  bool divisibility_witness = false;
  std::array<double, 4> choi_eigenvalues{};  // ascending
  double determinant = 0.0;                  // det(delta)
};

/// Thrown when Kraus extraction is requested for a map that is not
/// completely positive. Carries the most negative Choi eigenvalue.
class NotCompletelyPositiveError : public std::domain_error {
 public:
  explicit NotCompletelyPositiveError(double min_eigenvalue);
  double min_choi_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// ---------------------------------------------------------------------------
// Rotations and construction
// ---------------------------------------------------------------------------

/// Active right-handed rotation about the z axis.
Mat3 rot_z(double angle);

/// Active right-handed rotation about the y axis; rot_y(b) * z = (sin b, 0, cos b).
Mat3 rot_y(double angle);

/// rot_z(alpha) * rot_y(beta) * rot_z(gamma).
Mat3 rot_zyz(double alpha, double beta, double gamma);

bool is_proper_rotation(const Mat3& r, double tol = kDefaultTol);

/// delta = r1 * diag(d) * r2. Throws std::invalid_argument unless both
/// inputs are proper rotations within tol.
UnitalMap make_unital_rdr(const Mat3& r1, const Vec3& d, const Mat3& r2,
                          double tol = kDefaultTol);

/// SVD-based inverse of make_unital_rdr with sign bookkeeping: both factors
/// come out proper, any reflection is pushed into the sign of d(2).
RDRDecomposition rdr_decompose(const UnitalMap& map);

// ---------------------------------------------------------------------------
// Action and composition
// ---------------------------------------------------------------------------

BlochVector apply(const UnitalMap& map, const BlochVector& w);
BlochVector apply(const AffineQubitMap& map, const BlochVector& w);

/// Linear extension of the map to arbitrary 2x2 complex matrices; agrees
/// with the Bloch action on density matrices and feeds the Choi construction.
Mat2c apply_to_operator(const AffineQubitMap& map, const Mat2c& m);

/// compose(later, earlier): apply `earlier` first. delta = later * earlier.
UnitalMap compose(const UnitalMap& later, const UnitalMap& earlier);
AffineQubitMap compose(const AffineQubitMap& later, const AffineQubitMap& earlier);

// ---------------------------------------------------------------------------
// Validity classification
// ---------------------------------------------------------------------------

/// Positivity of a unital map: the closed unit ball maps into itself, i.e.
/// the largest singular value of delta is at most 1 (up to tol).
bool is_positive(const UnitalMap& map, double tol = kDefaultTol);

/// The weaker necessary conditions obtained from coordinate axes only:
/// every row and every column of delta has squared norm at most 1.
bool satisfies_row_col_bounds(const UnitalMap& map, double tol = kDefaultTol);

/// Largest norm of b + delta * w over the unit sphere |w| = 1. Solved via
/// the secular equation of the constrained quadratic; exact up to bisection
/// tolerance. For unital maps this is the largest singular value.
double max_image_norm(const AffineQubitMap& map);

/// Choi matrix scaled to trace 2: C[(2a+i),(2b+j)] = Lambda(E_ij)(a,b).
/// Hermitian; PSD exactly when the map is completely positive.
Mat4c choi_matrix(const AffineQubitMap& map);

/// Eigenvalues of the Choi matrix, ascending. They sum to 2.
std::array<double, 4> choi_eigenvalues(const AffineQubitMap& map);

bool is_completely_positive(const AffineQubitMap& map, double tol = kDefaultTol);

/// Closed-form CP test for diagonal unital maps diag(c1,c2,c3): the four
/// Pauli-channel probabilities (1 +- c1 +- c2 +- c3)/4 (even sign flips)
/// must be nonnegative. Shares its tolerance convention with the Choi test:
/// the smallest Choi eigenvalue equals twice the smallest probability.
bool cp_diagonal_closed_form(double c1, double c2, double c3,
                             double tol = kDefaultTol);

/// Choi eigenvalues of diag(c1,c2,c3) in closed form (unsorted):
/// {1+c1+c2+c3, 1+c1-c2-c3, 1-c1+c2-c3, 1-c1-c2+c3} / 2.
std::array<double, 4> pauli_choi_eigenvalues(double c1, double c2, double c3);

/// The single-inequality CP criterion c3' + c2' <= 1 + c1' evaluated on the
/// canonically ordered triple: magnitudes sorted descending, all signs
/// folded into the smallest entry so that sign(c1') = sign(c1*c2*c3).
/// Valid for diagonal maps only; equivalent to cp_diagonal_closed_form.
bool cp_inequality_canonical(double c1, double c2, double c3,
                             double tol = kDefaultTol);

/// Determinant witness for infinitesimal divisibility: det(delta) >= 0
/// (up to tol). Necessary, not sufficient, hence "witness".
bool divisibility_witness(const UnitalMap& map, double tol = kDefaultTol);

/// Kraus operators from the eigendecomposition of the Choi matrix. Throws
/// NotCompletelyPositiveError if the smallest Choi eigenvalue is below -tol.
/// Eigenvalues in [-tol, cutoff] are treated as zero and dropped so nearly
/// degenerate maps do not come back as spurious rank-4 sets.
KrausSet kraus_from_map(const AffineQubitMap& map, double tol = kDefaultTol,
                        double cutoff = kKrausCutoff);

/// rho -> sum_k A_k rho A_k^dagger.
DensityMatrix kraus_apply(const KrausSet& kraus, const DensityMatrix& rho);

/// || sum_k A_k^dagger A_k - I ||  (zero for trace-preserving sets).
double kraus_trace_defect(const KrausSet& kraus);

/// || sum_k A_k A_k^dagger - I ||  (zero for unital sets).
double kraus_unitality_defect(const KrausSet& kraus);

ChannelReport classify(const AffineQubitMap& map, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Seed-deterministic sampling
// ---------------------------------------------------------------------------

/// Deterministic RNG wrapper. The scaling from engine words to doubles is
/// written out so streams are bit-stable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

/// Uniform proper rotation via a uniform unit quaternion.
Mat3 random_rotation(Rng& rng);

/// Diagonal triple in [-1,1]^3 rejection-sampled against the CP region.
Vec3 random_cp_diagonal(Rng& rng);

/// Positive unital map: random rotations around a diagonal in [-1,1]^3.
UnitalMap random_positive_unital(Rng& rng);

/// CPTP unital map: random rotations around a CP diagonal triple.
UnitalMap random_cptp_unital(Rng& rng);

/// Bloch vector uniform in the closed unit ball.
BlochVector random_state(Rng& rng);

}  // namespace lgk3

#endif  // LGK3_CHANNEL_HPP
