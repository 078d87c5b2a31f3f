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

#include "lgk3/bloch.hpp"

#include <stdexcept>

namespace lgk3 {

namespace {
const Complex kI(0.0, 1.0);
}

const Mat2c& pauli_x() {
  static const Mat2c m = (Mat2c() << 0, 1, 1, 0).finished();
  return m;
}

const Mat2c& pauli_y() {
  static const Mat2c m = (Mat2c() << 0, -kI, kI, 0).finished();
  return m;
}

const Mat2c& pauli_z() {
  static const Mat2c m = (Mat2c() << 1, 0, 0, -1).finished();
  return m;
}

bool is_valid_density(const DensityMatrix& rho, double tol) {
  if ((rho - rho.adjoint()).norm() > tol) return false;
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    return false;
  Eigen::SelfAdjointEigenSolver<Mat2c> es(rho, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

MeasurementAxis::MeasurementAxis(const Vec3& v) {
  const double n = v.norm();
  if (n < 1e-12) throw std::invalid_argument("measurement axis must be a nonzero vector");
  n_ = v / n;
}

Mat3 MeasurementAxis::rotation_to_z() const {
  const Vec3 z(0.0, 0.0, 1.0);
  // Quaternion from n to z handles the antiparallel case internally.
  return Eigen::Quaterniond::FromTwoVectors(n_, z).toRotationMatrix();
}

DensityMatrix bloch_to_density(const BlochVector& w) {
  DensityMatrix rho = Mat2c::Identity();
  rho += w.x * pauli_x() + w.y * pauli_y() + w.z * pauli_z();
  return 0.5 * rho;
}

BlochVector density_to_bloch(const DensityMatrix& rho, double tol) {
  if ((rho - rho.adjoint()).norm() > tol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    throw std::invalid_argument("density matrix does not have unit trace");
  // rho10 = (x + i y)/2, rho00 - rho11 = z.
  return {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(),
          rho(0, 0).real() - rho(1, 1).real()};
}

ProjectionResult project(const BlochVector& w, const MeasurementAxis& axis, double tol) {
  if (!w.is_physical(tol))
    throw std::invalid_argument("cannot project an unphysical Bloch vector (|w| > 1)");
  const Vec3 n = axis.direction();
  const double p = 0.5 * (1.0 + n.dot(w.vec()));
  return {p, BlochVector::from(n), BlochVector::from(-n)};
}

}  // namespace lgk3
