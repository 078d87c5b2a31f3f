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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lgk3/explorer.hpp"
#include "lgk3/io.hpp"
#include "lgk3/protocol.hpp"

namespace py = pybind11;
using namespace lgk3;

namespace {

// Maps cross the boundary as plain 3x3 arrays (the delta block); the affine
// translation b is an optional second argument where it matters.

py::dict lg_dict(const LGResult& r) {
  py::dict d;
  d["c12"] = r.c12;
  d["c23"] = r.c23;
  d["c13"] = r.c13;
  d["k3"] = r.k3;
  return d;
}

py::dict report_dict(const ChannelReport& r) {
  py::dict d;
  d["trace_preserving"] = r.is_trace_preserving;
  d["unital"] = r.is_unital;
  d["positive"] = r.is_positive;
  d["completely_positive"] = r.is_completely_positive;
  d["divisibility_witness"] = r.divisibility_witness;
  d["choi_eigenvalues"] = r.choi_eigenvalues;
  d["determinant"] = r.determinant;
  return d;
}

ConstraintSet constraint_from(const std::string& name) {
  if (name == "positive") return ConstraintSet::PositiveUnital;
  if (name == "cptp") return ConstraintSet::CptpDivisible;
  if (name == "reversed") return ConstraintSet::ReversedOrder;
  if (name == "shrink") return ConstraintSet::ShrinkLimited;
  throw std::invalid_argument("constraint must be positive, cptp, reversed or shrink");
}

py::dict search_dict(const SearchResult& r) {
  py::dict d;
  d["best_k3"] = r.best_k3;
  py::dict argmax;
  for (const auto& [k, v] : r.argmax) argmax[py::str(k)] = v;
  d["argmax"] = argmax;
  d["d12"] = Mat3(r.d12.delta);
  d["d23"] = Mat3(r.d23.delta);
  d["evaluations"] = r.evaluations;
  d["constraint_violations"] = r.constraint_violations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Leggett-Garg K3 engine for unital qubit channels";
  m.attr("__version__") = LGK3_VERSION;

  // qubit states
  m.def(
      "bloch_to_density",
      [](const Vec3& w) -> Mat2c { return bloch_to_density(BlochVector::from(w)); },
      py::arg("w"), "Density matrix (I + w.sigma)/2.");
  m.def(
      "density_to_bloch",
      [](const Mat2c& rho) -> Vec3 { return density_to_bloch(rho).vec(); },
      py::arg("rho"));
  m.def(
      "project",
      [](const Vec3& w, const Vec3& axis) {
        const auto r = project(BlochVector::from(w), MeasurementAxis(axis));
        return py::make_tuple(r.prob_plus, Vec3(r.post_plus.vec()),
                              Vec3(r.post_minus.vec()));
      },
      py::arg("w"), py::arg("axis") = Vec3(0, 0, 1),
      "Returns (prob_plus, post_plus, post_minus).");

  // channel algebra
  m.def("rot_z", &rot_z, py::arg("angle"));
  m.def("rot_y", &rot_y, py::arg("angle"));
  m.def("rot_zyz", &rot_zyz, py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
  m.def(
      "make_unital_rdr",
      [](const Mat3& r1, const Vec3& d, const Mat3& r2) -> Mat3 {
        return make_unital_rdr(r1, d, r2).delta;
      },
      py::arg("r1"), py::arg("d"), py::arg("r2"));
  m.def(
      "rdr_decompose",
      [](const Mat3& delta) {
        const auto r = rdr_decompose(UnitalMap{delta});
        return py::make_tuple(Mat3(r.r1), Vec3(r.d), Mat3(r.r2));
      },
      py::arg("delta"));
  m.def(
      "apply", [](const Mat3& delta, const Vec3& w) -> Vec3 { return delta * w; },
      py::arg("delta"), py::arg("w"));
  m.def(
      "compose",
      [](const Mat3& later, const Mat3& earlier) -> Mat3 { return later * earlier; },
      py::arg("later"), py::arg("earlier"));
  m.def(
      "is_positive",
      [](const Mat3& delta, double tol) { return is_positive(UnitalMap{delta}, tol); },
      py::arg("delta"), py::arg("tol") = kDefaultTol);
  m.def(
      "choi_matrix",
      [](const Mat3& delta, const Vec3& b) -> Mat4c {
        return choi_matrix(AffineQubitMap(b, delta));
      },
      py::arg("delta"), py::arg("b") = Vec3(0, 0, 0));
  m.def(
      "choi_eigenvalues",
      [](const Mat3& delta, const Vec3& b) {
        return choi_eigenvalues(AffineQubitMap(b, delta));
      },
      py::arg("delta"), py::arg("b") = Vec3(0, 0, 0));
  m.def(
      "is_completely_positive",
      [](const Mat3& delta, const Vec3& b, double tol) {
        return is_completely_positive(AffineQubitMap(b, delta), tol);
      },
      py::arg("delta"), py::arg("b") = Vec3(0, 0, 0), py::arg("tol") = kDefaultTol);
  m.def(
      "divisibility_witness",
      [](const Mat3& delta, double tol) {
        return divisibility_witness(UnitalMap{delta}, tol);
      },
      py::arg("delta"), py::arg("tol") = kDefaultTol);
  m.def(
      "kraus_from_map",
      [](const Mat3& delta, const Vec3& b) {
        std::vector<Mat2c> ops = kraus_from_map(AffineQubitMap(b, delta)).ops;
        return ops;
      },
      py::arg("delta"), py::arg("b") = Vec3(0, 0, 0));
  m.def(
      "classify",
      [](const Mat3& delta, const Vec3& b, double tol) {
        return report_dict(classify(AffineQubitMap(b, delta), tol));
      },
      py::arg("delta"), py::arg("b") = Vec3(0, 0, 0), py::arg("tol") = kDefaultTol);

  // correlators
  m.def(
      "correlators_from_maps",
      [](const Mat3& d12, const Mat3& d23) {
        return lg_dict(correlators_from_maps(UnitalMap{d12}, UnitalMap{d23}));
      },
      py::arg("d12"), py::arg("d23"));
  m.def(
      "k3_algebraic",
      [](double r1, double r2, double theta1, double theta2, double phi1, double phi2) {
        return k3_algebraic({r1, r2, theta1, theta2, phi1, phi2});
      },
      py::arg("r1"), py::arg("r2"), py::arg("theta1"), py::arg("theta2"),
      py::arg("phi1"), py::arg("phi2"));
  m.def(
      "params_from_maps",
      [](const Mat3& d12, const Mat3& d23) {
        const auto p = params_from_maps(UnitalMap{d12}, UnitalMap{d23});
        py::dict d;
        d["r1"] = p.r1;
        d["r2"] = p.r2;
        d["theta1"] = p.theta1;
        d["theta2"] = p.theta2;
        d["phi1"] = p.phi1;
        d["phi2"] = p.phi2;
        return d;
      },
      py::arg("d12"), py::arg("d23"));
  m.def(
      "k3_unitary",
      [](double theta1, double theta2, double gamma) {
        return k3_unitary({theta1, theta2, gamma});
      },
      py::arg("theta1"), py::arg("theta2"), py::arg("gamma"));

  // protocol oracle
  m.def(
      "simulate_protocol",
      [](const Vec3& initial, const Mat3& d12, const Mat3& d23, const Vec3& axis) {
        ProtocolSpec spec;
        spec.initial_state = bloch_to_density(BlochVector::from(initial));
        spec.map12 = UnitalMap{d12};
        spec.map23 = UnitalMap{d23};
        spec.axis = MeasurementAxis(axis);
        const auto res = simulate_protocol(spec);
        py::dict d = lg_dict(res.lg);
        d["p12"] = py::make_tuple(res.p12.pp, res.p12.pm, res.p12.mp, res.p12.mm);
        d["p23"] = py::make_tuple(res.p23.pp, res.p23.pm, res.p23.mp, res.p23.mm);
        d["p13"] = py::make_tuple(res.p13.pp, res.p13.pm, res.p13.mp, res.p13.mm);
        return d;
      },
      py::arg("initial"), py::arg("d12"), py::arg("d23"),
      py::arg("axis") = Vec3(0, 0, 1));
  m.def(
      "simulate_unitary_protocol",
      [](double theta1, double theta2, double gamma, double alpha) {
        return lg_dict(simulate_unitary_protocol({theta1, theta2, gamma}, alpha));
      },
      py::arg("theta1"), py::arg("theta2"), py::arg("gamma"), py::arg("alpha") = 0.5);
  m.def("state_independence_probe",
        [](const Mat3& d12, const Mat3& d23, int n_states, std::uint64_t seed) {
          return state_independence_probe(UnitalMap{d12}, UnitalMap{d23}, n_states,
                                          seed);
        },
        py::arg("d12"), py::arg("d23"), py::arg("n_states") = 100, py::arg("seed") = 0);

  // explorer
  m.def(
      "make_lueders_pair",
      [](double phi, double gamma, double gamma_prime, double c, double c_prime) {
        const auto pair = make_lueders_pair({phi, gamma, gamma_prime, c, c_prime});
        return py::make_tuple(Mat3(pair.first.delta), Mat3(pair.second.delta));
      },
      py::arg("phi"), py::arg("gamma"), py::arg("gamma_prime"), py::arg("c"),
      py::arg("c_prime"));
  m.def("reversed_sequence_z", &reversed_sequence_z, py::arg("c"), py::arg("c_prime"),
        py::arg("gamma"), py::arg("gamma_prime"));
  m.def(
      "maximize_k3",
      [](const std::string& constraint, int grid, double tol, double shrink, double c,
         double c_prime, int threads) {
        SearchConfig cfg;
        cfg.constraint = constraint_from(constraint);
        cfg.grid = grid;
        cfg.refine_tol = tol;
        cfg.shrink = shrink;
        cfg.c = c;
        cfg.c_prime = c_prime;
        cfg.threads = threads;
        return search_dict(maximize_k3(cfg));
      },
      py::arg("constraint") = "positive", py::arg("grid") = 25, py::arg("tol") = 1e-8,
      py::arg("shrink") = 1.0, py::arg("c") = 0.99, py::arg("c_prime") = 0.99,
      py::arg("threads") = 0);
  m.def(
      "shrink_sweep",
      [](const std::vector<double>& s_values, int grid) {
        SearchConfig base;
        base.grid = grid;
        std::vector<std::pair<double, double>> out;
        for (const auto& pt : shrink_sweep(s_values, base))
          out.emplace_back(pt.s, pt.max_k3);
        return out;
      },
      py::arg("s_values"), py::arg("grid") = 25);
  m.def(
      "bloch_trajectory",
      [](const std::vector<Mat3>& legs, const Vec3& start, int samples_per_leg) {
        std::vector<UnitalMap> maps;
        maps.reserve(legs.size());
        for (const auto& d : legs) maps.push_back(UnitalMap{d});
        const auto points =
            bloch_trajectory(maps, BlochVector::from(start), samples_per_leg);
        Eigen::MatrixXd out(points.size(), 3);
        for (std::size_t i = 0; i < points.size(); ++i)
          out.row(static_cast<Eigen::Index>(i)) = points[i].vec().transpose();
        return out;
      },
      py::arg("legs"), py::arg("start") = Vec3(0, 0, 1),
      py::arg("samples_per_leg") = 16);
  m.def(
      "threshold_certificate",
      [](const std::vector<std::tuple<double, Mat3, Mat3>>& records) {
        std::vector<CandidateRecord> recs;
        recs.reserve(records.size());
        for (const auto& [k3, d12, d23] : records)
          recs.push_back({k3, UnitalMap{d12}, UnitalMap{d23}});
        const auto rep = threshold_certificate(recs);
        py::dict d;
        d["checked"] = rep.checked;
        d["passed"] = rep.passed;
        d["counterexamples"] = rep.counterexamples;
        d["min_norm"] = rep.min_norm;
        d["ok"] = rep.ok();
        return d;
      },
      py::arg("records"), "Each record is (k3, d12, d23).");

  // parsing helpers shared with the CLI formats
  m.def("parse_angle", &parse_angle, py::arg("text"),
        "Plain decimals or pi-fraction literals such as 'pi/3'.");
  m.def(
      "parse_map_spec",
      [](const std::string& text) {
        const AffineQubitMap m = parse_map_spec(text);
        return py::make_tuple(Vec3(m.b), Mat3(m.delta));
      },
      py::arg("text"), "Returns (b, delta) from a CLI map spec string.");

  py::register_exception<NotCompletelyPositiveError>(m, "NotCompletelyPositiveError",
                                                     PyExc_ValueError);
}
