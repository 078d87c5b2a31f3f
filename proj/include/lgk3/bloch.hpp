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

#ifndef LGK3_BLOCH_HPP
#define LGK3_BLOCH_HPP

#include <Eigen/Dense>
#include <complex>

namespace lgk3 {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Complex = std::complex<double>;

/// Default numerical slack for validity predicates. The underlying algebra
/// is exact; every check that compares against it takes an overridable
/// tolerance with this value as the default.
inline constexpr double kDefaultTol = 1e-9;

/// Eigenvalues of a Choi matrix below this cutoff are treated as zero when
/// extracting Kraus operators.
inline constexpr double kKrausCutoff = 1e-12;

const Mat2c& pauli_x();
const Mat2c& pauli_y();
const Mat2c& pauli_z();

/// State of a two-level system up to the identity part: rho = (I + w.sigma)/2.
///
/// Construction does not enforce |w| <= 1; intermediate channel algebra
/// (rows of transfer matrices, unnormalized images) legitimately produces
/// vectors outside the ball. Use is_physical() where a state is required.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 vec() const { return {x, y, z}; }
  static BlochVector from(const Vec3& v) { return {v.x(), v.y(), v.z()}; }

  double norm() const { return vec().norm(); }
  bool is_physical(double tol = kDefaultTol) const { return norm() <= 1.0 + tol; }
  bool is_pure(double tol = kDefaultTol) const { return std::abs(norm() - 1.0) <= tol; }

  BlochVector operator-() const { return {-x, -y, -z}; }
};

/// 2x2 complex density matrix. Alias instead of a wrapper: all validity
/// conditions are predicates, matching BlochVector.
using DensityMatrix = Mat2c;

bool is_valid_density(const DensityMatrix& rho, double tol = kDefaultTol);

/// Fixed projective measurement direction. Normalized on construction;
/// the observable is Q = n.sigma with outcomes +-1.
class MeasurementAxis {
 public:
  /// Defaults to +z, the convention every closed-form expression assumes.
  MeasurementAxis() : n_(0.0, 0.0, 1.0) {}

  /// Throws std::invalid_argument if |v| is too small to normalize.
  explicit MeasurementAxis(const Vec3& v);

  const Vec3& direction() const { return n_; }

  /// Rotation R with R*n = +z. Conjugating a transfer matrix by R moves an
  /// arbitrary-axis problem into the z-convention used everywhere else.
  Mat3 rotation_to_z() const;

 private:
  Vec3 n_;
};

/// rho = (I + w.sigma)/2. Hermitian with unit trace for any w; PSD iff |w| <= 1.
DensityMatrix bloch_to_density(const BlochVector& w);

/// Inverse of bloch_to_density. Throws std::invalid_argument when the input
/// is not Hermitian or not unit-trace within tol.
BlochVector density_to_bloch(const DensityMatrix& rho, double tol = kDefaultTol);

struct ProjectionResult {
  double prob_plus;        // (1 + n.w)/2
  BlochVector post_plus;   // +n
  BlochVector post_minus;  // -n
};

/// Projective measurement of n.sigma on the state w. Throws
/// std::invalid_argument if w is unphysical beyond tol.
ProjectionResult project(const BlochVector& w, const MeasurementAxis& axis = {},
                         double tol = kDefaultTol);

}  // namespace lgk3

#endif  // LGK3_BLOCH_HPP
