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

#include "lgk3/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lgk3 {

NotCompletelyPositiveError::NotCompletelyPositiveError(double min_eigenvalue)
    : std::domain_error([min_eigenvalue] {
        std::ostringstream os;
        os << "map is not completely positive: smallest Choi eigenvalue = "
           << min_eigenvalue;
        return os.str();
      }()),
      min_eigenvalue_(min_eigenvalue) {}

Mat3 rot_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

Mat3 rot_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r;
  r << c, 0, s, 0, 1, 0, -s, 0, c;
  return r;
}

Mat3 rot_zyz(double alpha, double beta, double gamma) {
  return rot_z(alpha) * rot_y(beta) * rot_z(gamma);
}

bool is_proper_rotation(const Mat3& r, double tol) {
  return (r.transpose() * r - Mat3::Identity()).norm() <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

UnitalMap make_unital_rdr(const Mat3& r1, const Vec3& d, const Mat3& r2, double tol) {
  if (!is_proper_rotation(r1, tol) || !is_proper_rotation(r2, tol))
    throw std::invalid_argument("make_unital_rdr: factors must be proper rotations");
  return {r1 * d.asDiagonal() * r2};
}

RDRDecomposition rdr_decompose(const UnitalMap& map) {
  Eigen::JacobiSVD<Mat3> svd(map.delta, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double du = svd.matrixU().determinant() > 0 ? 1.0 : -1.0;
  const double dv = svd.matrixV().determinant() > 0 ? 1.0 : -1.0;
  RDRDecomposition out;
  out.r1 = svd.matrixU() * Vec3(1, 1, du).asDiagonal();
  out.r2 = Vec3(1, 1, dv).asDiagonal() * svd.matrixV().transpose();
  out.d = svd.singularValues();
  out.d(2) *= du * dv;
  return out;
}

BlochVector apply(const UnitalMap& map, const BlochVector& w) {
  return BlochVector::from(map.delta * w.vec());
}

BlochVector apply(const AffineQubitMap& map, const BlochVector& w) {
  return BlochVector::from(map.b + map.delta * w.vec());
}

Mat2c apply_to_operator(const AffineQubitMap& map, const Mat2c& m) {
  // Decompose m = m0 I + mv.sigma with complex coefficients, push the real
  // affine action through by linearity.
  const Complex m0 = 0.5 * m.trace();
  const Eigen::Vector3cd mv(0.5 * (pauli_x() * m).trace(),
                            0.5 * (pauli_y() * m).trace(),
                            0.5 * (pauli_z() * m).trace());
  const Eigen::Vector3cd out = map.delta.cast<Complex>() * mv + m0 * map.b.cast<Complex>();
  Mat2c r = m0 * Mat2c::Identity();
  r += out(0) * pauli_x() + out(1) * pauli_y() + out(2) * pauli_z();
  return r;
}

UnitalMap compose(const UnitalMap& later, const UnitalMap& earlier) {
  return {later.delta * earlier.delta};
}

AffineQubitMap compose(const AffineQubitMap& later, const AffineQubitMap& earlier) {
  return {later.b + later.delta * earlier.b, later.delta * earlier.delta};
}

bool is_positive(const UnitalMap& map, double tol) {
  Eigen::JacobiSVD<Mat3> svd(map.delta);
  return svd.singularValues()(0) <= 1.0 + tol;
}

bool satisfies_row_col_bounds(const UnitalMap& map, double tol) {
  for (int i = 0; i < 3; ++i) {
    if (map.delta.row(i).squaredNorm() > 1.0 + tol) return false;
    if (map.delta.col(i).squaredNorm() > 1.0 + tol) return false;
  }
  return true;
}

double max_image_norm(const AffineQubitMap& map) {
  // max over |w| = 1 of |b + delta w|^2 = w^T A w + 2 g^T w + |b|^2 with
  // A = delta^T delta, g = delta^T b. Stationarity gives w = (lam I - A)^{-1} g
  // with lam >= lam_max(A); |w(lam)| decreases monotonically, so the
  // multiplier is a bisection root. g orthogonal to the top eigenspace is
  // the usual hard case and is handled by completing w along that space.
  Eigen::SelfAdjointEigenSolver<Mat3> es(map.delta.transpose() * map.delta);
  const Vec3 lam = es.eigenvalues();  // ascending
  const Vec3 gh = es.eigenvectors().transpose() * (map.delta.transpose() * map.b);
  const double lmax = lam(2);
  const double bb = map.b.squaredNorm();

  auto value_at = [&](const Vec3& wh) {
    double q = bb;
    for (int i = 0; i < 3; ++i) q += lam(i) * wh(i) * wh(i) + 2.0 * gh(i) * wh(i);
    return std::sqrt(std::max(0.0, q));
  };

  const double gnorm = gh.norm();
  if (gnorm < 1e-15) {
    Vec3 wh = Vec3::Zero();
    wh(2) = 1.0;
    return value_at(wh);
  }

  auto norm2_at = [&](double l) {
    double n2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = l - lam(i);
      if (std::abs(d) < 1e-300) return std::numeric_limits<double>::infinity();
      n2 += gh(i) * gh(i) / (d * d);
    }
    return n2;
  };

  // Hard case: no mass on the top eigenspace and the complement solution
  // fits inside the sphere.
  const bool top_degenerate = lmax - lam(1) < 1e-14;
  double top_mass = gh(2) * gh(2) + (top_degenerate ? gh(1) * gh(1) : 0.0);
  if (top_mass < 1e-28) {
    Vec3 wh = Vec3::Zero();
    double n2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (lmax - lam(i) > 1e-14) {
        wh(i) = gh(i) / (lmax - lam(i));
        n2 += wh(i) * wh(i);
      }
    }
    if (n2 <= 1.0) {
      wh(2) = std::sqrt(1.0 - n2);
      return value_at(wh);
    }
  }

  double lo = lmax, hi = lmax + gnorm + 1.0;
  while (norm2_at(hi) > 1.0) hi = lmax + 2.0 * (hi - lmax);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (norm2_at(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
  }
  const double l = 0.5 * (lo + hi);
  Vec3 wh;
  for (int i = 0; i < 3; ++i) wh(i) = gh(i) / (l - lam(i));
  if (wh.norm() > 1e-12) wh /= wh.norm();
  return value_at(wh);
}

Mat4c choi_matrix(const AffineQubitMap& map) {
  Mat4c c = Mat4c::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Mat2c eij = Mat2c::Zero();
      eij(i, j) = 1.0;
      const Mat2c out = apply_to_operator(map, eij);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) c(2 * a + i, 2 * b + j) = out(a, b);
    }
  }
  return c;
}

std::array<double, 4> choi_eigenvalues(const AffineQubitMap& map) {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(choi_matrix(map), Eigen::EigenvaluesOnly);
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = es.eigenvalues()(i);
  return out;
}

bool is_completely_positive(const AffineQubitMap& map, double tol) {
  return choi_eigenvalues(map)[0] >= -tol;
}

std::array<double, 4> pauli_choi_eigenvalues(double c1, double c2, double c3) {
  return {0.5 * (1 + c1 + c2 + c3), 0.5 * (1 + c1 - c2 - c3),
          0.5 * (1 - c1 + c2 - c3), 0.5 * (1 - c1 - c2 + c3)};
}

bool cp_diagonal_closed_form(double c1, double c2, double c3, double tol) {
  const auto ev = pauli_choi_eigenvalues(c1, c2, c3);
  return *std::min_element(ev.begin(), ev.end()) >= -tol;
}

bool cp_inequality_canonical(double c1, double c2, double c3, double tol) {
  // Composing with pi rotations flips signs of pairs of entries, so every
  // diagonal map is equivalent to one with at most the smallest-magnitude
  // entry negative, carrying the sign of the determinant.
  std::array<double, 3> a{std::abs(c1), std::abs(c2), std::abs(c3)};
  std::sort(a.begin(), a.end(), std::greater<>());
  const double sign = (c1 * c2 * c3 < 0.0) ? -1.0 : 1.0;
  return a[0] + a[1] <= 1.0 + sign * a[2] + tol;
}

bool divisibility_witness(const UnitalMap& map, double tol) {
  return map.delta.determinant() >= -tol;
}

KrausSet kraus_from_map(const AffineQubitMap& map, double tol, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(choi_matrix(map));
  if (es.eigenvalues()(0) < -tol)
    throw NotCompletelyPositiveError(es.eigenvalues()(0));
  KrausSet out;
  for (int k = 3; k >= 0; --k) {  // largest eigenvalue first
    const double ev = es.eigenvalues()(k);
    if (ev <= cutoff) continue;
    const Eigen::Vector4cd v = es.eigenvectors().col(k);
    Mat2c a;
    a << v(0), v(1), v(2), v(3);  // row-major unvec of (2a + i)
    out.ops.push_back(std::sqrt(ev) * a);
  }
  return out;
}

DensityMatrix kraus_apply(const KrausSet& kraus, const DensityMatrix& rho) {
  Mat2c out = Mat2c::Zero();
  for (const auto& a : kraus.ops) out += a * rho * a.adjoint();
  return out;
}

double kraus_trace_defect(const KrausSet& kraus) {
  Mat2c s = Mat2c::Zero();
  for (const auto& a : kraus.ops) s += a.adjoint() * a;
  return (s - Mat2c::Identity()).norm();
}

double kraus_unitality_defect(const KrausSet& kraus) {
  Mat2c s = Mat2c::Zero();
  for (const auto& a : kraus.ops) s += a * a.adjoint();
  return (s - Mat2c::Identity()).norm();
}

ChannelReport classify(const AffineQubitMap& map, double tol) {
  ChannelReport r;
  r.is_trace_preserving = true;  // structural in the affine representation
  r.is_unital = map.is_unital(tol);
  r.choi_eigenvalues = choi_eigenvalues(map);
  r.is_completely_positive = r.choi_eigenvalues[0] >= -tol;
  r.determinant = map.delta.determinant();
  r.divisibility_witness = r.determinant >= -tol;
  if (r.is_unital)
    r.is_positive = is_positive(UnitalMap{map.delta}, tol);
  else
    r.is_positive = max_image_norm(map) <= 1.0 + tol;
  return r;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Mat3 random_rotation(Rng& rng) {
  // Shoemake's method: uniform unit quaternion from three uniforms.
  const double u1 = rng.uniform(), u2 = rng.uniform(), u3 = rng.uniform();
  const double twopi = 2.0 * M_PI;
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  const Eigen::Quaterniond q(b * std::cos(twopi * u3), a * std::sin(twopi * u2),
                             a * std::cos(twopi * u2), b * std::sin(twopi * u3));
  return q.toRotationMatrix();
}

Vec3 random_cp_diagonal(Rng& rng) {
  for (;;) {
    const Vec3 c(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    if (cp_diagonal_closed_form(c(0), c(1), c(2), 0.0)) return c;
  }
}

UnitalMap random_positive_unital(Rng& rng) {
  const Mat3 r1 = random_rotation(rng);
  const Vec3 d(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
  const Mat3 r2 = random_rotation(rng);
  return {r1 * d.asDiagonal() * r2};
}

UnitalMap random_cptp_unital(Rng& rng) {
  const Mat3 r1 = random_rotation(rng);
  const Vec3 d = random_cp_diagonal(rng);
  const Mat3 r2 = random_rotation(rng);
  return {r1 * d.asDiagonal() * r2};
}

BlochVector random_state(Rng& rng) {
  for (;;) {
    const Vec3 w(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    if (w.squaredNorm() <= 1.0) return BlochVector::from(w);
  }
}

}  // namespace lgk3
