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

#ifndef LGK3_OPTIMIZE_HPP
#define LGK3_OPTIMIZE_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lgk3 {

// Deterministic maximizer for smooth, cheap, possibly multimodal objectives
// on a box: exhaustive lattice scan, then Nelder-Mead refinement from the
// best lattice points. Constraints are handled by feasibility filtering
// (the objective returns nullopt), never by penalties. Ties are broken
// lexicographically by parameter vector, so the result is reproducible for
// a fixed grid regardless of thread count.

struct AxisSpec {
  double lo = 0.0;
  double hi = 1.0;
};

struct BoxProblem {
  std::vector<AxisSpec> axes;
  // Pure function; called concurrently during the lattice scan.
  std::function<std::optional<double>(const std::vector<double>&)> objective;
};

struct OptimizeOptions {
  int grid = 25;               // lattice resolution per dimension (>= 3)
  double refine_tol = 1e-8;    // simplex-diameter stop for refinement
  int top_k = 8;               // refinement starts
  int max_refine_evals = 4000; // per start
  int threads = 0;             // 0 = hardware concurrency
};

struct OptimizeOutcome {
  double best = 0.0;
  std::vector<double> argmax;
  long long evaluations = 0;
  long long infeasible = 0;
};

/// Thrown when no lattice point is feasible; distinct from numerical
/// failures, which surface as std::runtime_error.
class EmptyFeasibleSetError : public std::runtime_error {
 public:
  EmptyFeasibleSetError() : std::runtime_error("no feasible point in the search box") {}
};

OptimizeOutcome maximize_on_box(const BoxProblem& problem, const OptimizeOptions& opts);

}  // namespace lgk3

#endif  // LGK3_OPTIMIZE_HPP
