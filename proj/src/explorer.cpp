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

#include "lgk3/explorer.hpp"

#include <cmath>
#include <limits>

namespace lgk3 {

namespace {

constexpr double kPi = M_PI;
constexpr double kTwoPi = 2.0 * M_PI;

void require_unit_interval_open(double v, const char* name) {
  if (!(v >= 0.0 && v < 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1)");
}

}  // namespace

std::pair<UnitalMap, UnitalMap> make_lueders_pair(const LuedersFamilyPoint& p) {
  require_unit_interval_open(p.c, "c");
  require_unit_interval_open(p.c_prime, "c_prime");
  const Mat3 d12 = rot_zyz(p.phi, kPi / 3.0, p.gamma) * Vec3(p.c, p.c, 1.0).asDiagonal();
  const Mat3 d23 = Vec3(p.c_prime, p.c_prime, 1.0).asDiagonal() *
                   rot_zyz(p.gamma_prime, kPi / 3.0, -p.phi);
  return {UnitalMap{d12}, UnitalMap{d23}};
}

double reversed_sequence_z(double c, double c_prime, double gamma, double gamma_prime) {
  return 0.25 * (1.0 - 3.0 * c * c_prime * std::cos(gamma + gamma_prime));
}

namespace {

// Map construction for each constraint set. The forward direction of the
// correlators reads column 3 of d12 and row 3 of d23, so the searches only
// need those degrees of freedom; everything else is fixed by the set.

struct SearchSpace {
  std::vector<AxisSpec> axes;
  std::vector<std::string> names;
  std::function<std::optional<double>(const std::vector<double>&)> objective;
  std::function<std::pair<UnitalMap, UnitalMap>(const std::vector<double>&)> maps;
};

double k3_polar(double r1, double t1, double p1, double r2, double t2, double p2) {
  return k3_algebraic({r1, r2, t1, t2, p1, p2});
}

SearchSpace positive_unital_space() {
  SearchSpace s;
  s.axes = {{0, 1}, {0, 1}, {0, kPi}, {0, kPi}, {0, kTwoPi}, {0, kTwoPi}};
  s.names = {"r1", "r2", "theta1", "theta2", "phi1", "phi2"};
  s.objective = [](const std::vector<double>& x) -> std::optional<double> {
    return k3_polar(x[0], x[2], x[4], x[1], x[3], x[5]);
  };
  s.maps = [](const std::vector<double>& x) {
    // Uniform scaling keeps the polar data of the relevant column/row and
    // is positive for r <= 1.
    const Mat3 d12 = rot_z(x[4]) * rot_y(x[2]) * (x[0] * Mat3::Identity());
    const Mat3 d23 = x[1] * (rot_z(x[5]) * rot_y(x[3])).transpose();
    return std::make_pair(UnitalMap{d12}, UnitalMap{d23});
  };
  return s;
}

SearchSpace cptp_divisible_space() {
  SearchSpace s;
  s.axes = {{0, 1}, {0, kPi}, {0, 1}, {0, kPi}, {0, kTwoPi}, {0, 1}};
  s.names = {"r1", "theta1", "r2", "theta2", "dphi", "c"};
  // diag(c, c, r) is CP iff r >= 2c - 1 (r, c >= 0); det = c^2 r >= 0 holds
  // throughout the box.
  auto feasible = [](double r, double c) { return r >= 2.0 * c - 1.0; };
  s.objective = [feasible](const std::vector<double>& x) -> std::optional<double> {
    if (!feasible(x[0], x[5]) || !feasible(x[2], x[5])) return std::nullopt;
    // Row 3 of diag(c,c,r2)*Ry(theta2) has azimuth pi: (-r2 sin t2, 0, r2 cos t2).
    return k3_polar(x[0], x[1], x[4], x[2], x[3], kPi);
  };
  s.maps = [](const std::vector<double>& x) {
    const Mat3 d12 =
        rot_z(x[4]) * rot_y(x[1]) * Vec3(x[5], x[5], x[0]).asDiagonal();
    const Mat3 d23 = Vec3(x[5], x[5], x[2]).asDiagonal() * rot_y(x[3]);
    return std::make_pair(UnitalMap{d12}, UnitalMap{d23});
  };
  return s;
}

SearchSpace reversed_order_space(double c, double c_prime) {
  SearchSpace s;
  s.axes = {{0, kTwoPi}, {0, kTwoPi}, {0, kTwoPi}};
  s.names = {"gamma", "gamma_prime", "phi"};
  auto build = [c, c_prime](const std::vector<double>& x) {
    const auto pair = make_lueders_pair({x[2], x[0], x[1], c, c_prime});
    // Reversed temporal order: the decohering family map drives the first
    // interval, the unitary-like one the second.
    return std::make_pair(pair.second, pair.first);
  };
  s.objective = [build](const std::vector<double>& x) -> std::optional<double> {
    const auto [first, second] = build(x);
    return correlators_from_maps(first, second).k3;
  };
  s.maps = build;
  return s;
}

SearchSpace shrink_limited_space(double shrink) {
  SearchSpace s;
  s.axes = {{0, kPi}, {0, kPi}, {0, kTwoPi}};
  s.names = {"theta1", "theta2", "dphi"};
  auto build = [shrink](const std::vector<double>& x) {
    const Mat3 d12 = rot_z(x[2]) * rot_y(x[0]);
    const Mat3 d23 = shrink * rot_y(x[1]);
    return std::make_pair(UnitalMap{d12}, UnitalMap{d23});
  };
  s.objective = [build](const std::vector<double>& x) -> std::optional<double> {
    const auto [d12, d23] = build(x);
    return correlators_from_maps(d12, d23).k3;
  };
  s.maps = build;
  return s;
}

SearchSpace space_for(const SearchConfig& config) {
  switch (config.constraint) {
    case ConstraintSet::PositiveUnital:
      return positive_unital_space();
    case ConstraintSet::CptpDivisible:
      return cptp_divisible_space();
    case ConstraintSet::ReversedOrder:
      require_unit_interval_open(config.c, "c");
      require_unit_interval_open(config.c_prime, "c_prime");
      return reversed_order_space(config.c, config.c_prime);
    case ConstraintSet::ShrinkLimited:
      if (!(config.shrink > 0.0 && config.shrink <= 1.0))
        throw std::invalid_argument("shrink must lie in (0, 1]");
      return shrink_limited_space(config.shrink);
  }
  throw std::invalid_argument("unknown constraint set");
}

}  // namespace

SearchResult maximize_k3(const SearchConfig& config) {
  if (config.grid < 3) throw std::invalid_argument("grid resolution must be >= 3");
  if (!(config.refine_tol > 0.0))
    throw std::invalid_argument("refine_tol must be positive");

  const SearchSpace space = space_for(config);
  BoxProblem problem{space.axes, space.objective};
  OptimizeOptions opts;
  opts.grid = config.grid;
  opts.refine_tol = config.refine_tol;
  opts.threads = config.threads;
  const OptimizeOutcome outcome = maximize_on_box(problem, opts);

  SearchResult r;
  r.best_k3 = outcome.best;
  for (std::size_t i = 0; i < space.names.size(); ++i)
    r.argmax.emplace_back(space.names[i], outcome.argmax[i]);
  std::tie(r.d12, r.d23) = space.maps(outcome.argmax);
  r.evaluations = outcome.evaluations;
  r.constraint_violations = outcome.infeasible;
  return r;
}

std::vector<SweepPoint> shrink_sweep(const std::vector<double>& s_values,
                                     const SearchConfig& base) {
  std::vector<SweepPoint> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    SearchConfig cfg = base;
    cfg.constraint = ConstraintSet::ShrinkLimited;
    cfg.shrink = s;
    const SearchResult res = maximize_k3(cfg);
    out.push_back({s, res.best_k3, res.argmax});
  }
  return out;
}

std::vector<BlochVector> bloch_trajectory(const std::vector<UnitalMap>& legs,
                                          const BlochVector& start,
                                          int samples_per_leg) {
  if (samples_per_leg < 2)
    throw std::invalid_argument("bloch_trajectory: samples_per_leg must be >= 2");

  std::vector<BlochVector> out;
  out.reserve(legs.size() * static_cast<std::size_t>(samples_per_leg));
  Vec3 leg_start = start.vec();
  for (const auto& leg : legs) {
    const RDRDecomposition rdr = rdr_decompose(leg);
    const Eigen::AngleAxisd a1(rdr.r1);
    const Eigen::AngleAxisd a2(rdr.r2);
    const Vec3 leg_end = leg.delta * leg_start;
    for (int step = 0; step < samples_per_leg; ++step) {
      if (step == 0) {
        out.push_back(BlochVector::from(leg_start));
        continue;
      }
      if (step == samples_per_leg - 1) {
        out.push_back(BlochVector::from(leg_end));
        continue;
      }
      const double t = static_cast<double>(step) / (samples_per_leg - 1);
      const Mat3 r1t = Eigen::AngleAxisd(t * a1.angle(), a1.axis()).toRotationMatrix();
      const Mat3 r2t = Eigen::AngleAxisd(t * a2.angle(), a2.axis()).toRotationMatrix();
      const Vec3 dt = Vec3::Ones() + t * (rdr.d - Vec3::Ones());
      out.push_back(BlochVector::from(r1t * dt.asDiagonal() * r2t * leg_start));
    }
    leg_start = leg_end;
  }
  return out;
}

CertificateReport threshold_certificate(const std::vector<CandidateRecord>& records,
                                        double k3_threshold, double norm_threshold) {
  CertificateReport report;
  report.min_norm = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].k3 < k3_threshold) continue;
    ++report.checked;
    const double norm = (records[i].d23.delta * Vec3(0, 0, 1)).norm();
    report.min_norm = std::min(report.min_norm, norm);
    if (norm >= norm_threshold)
      ++report.passed;
    else
      report.counterexamples.push_back(i);
  }
  if (report.checked == 0) report.min_norm = 0.0;
  return report;
}

}  // namespace lgk3
