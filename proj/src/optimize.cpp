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

#include "lgk3/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>

namespace lgk3 {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct Candidate {
  double value = kNegInf;
  std::vector<double> x;
};

// Total order: higher value first, lexicographically smaller parameter
// vector first among equals. Makes every reduction order-independent.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.x < b.x;
}

class TopK {
 public:
  explicit TopK(std::size_t k) : k_(k) {}

  void offer(Candidate c) {
    auto pos = std::lower_bound(items_.begin(), items_.end(), c, better);
    items_.insert(pos, std::move(c));
    if (items_.size() > k_) items_.pop_back();
  }

  void merge(const TopK& other) {
    for (const auto& c : other.items_) offer(c);
  }

  const std::vector<Candidate>& items() const { return items_; }

 private:
  std::size_t k_;
  std::vector<Candidate> items_;  // sorted, best first
};

std::vector<double> decode(const std::vector<AxisSpec>& axes, int grid,
                           std::uint64_t index) {
  const std::size_t d = axes.size();
  std::vector<double> x(d);
  for (std::size_t i = d; i-- > 0;) {
    const auto step = index % static_cast<std::uint64_t>(grid);
    index /= static_cast<std::uint64_t>(grid);
    x[i] = axes[i].lo +
           (axes[i].hi - axes[i].lo) * static_cast<double>(step) / (grid - 1);
  }
  return x;  // index 0 is lexicographically smallest
}

void clamp_to_box(const std::vector<AxisSpec>& axes, std::vector<double>& x) {
  for (std::size_t i = 0; i < axes.size(); ++i)
    x[i] = std::clamp(x[i], axes[i].lo, axes[i].hi);
}

struct RefineResult {
  Candidate best;
  long long evaluations = 0;
};

RefineResult nelder_mead(const BoxProblem& problem, const OptimizeOptions& opts,
                         const Candidate& seed, double initial_step_fraction) {
  const std::size_t d = problem.axes.size();
  RefineResult out;

  auto eval = [&](std::vector<double> x) {
    clamp_to_box(problem.axes, x);
    ++out.evaluations;
    const auto v = problem.objective(x);
    return Candidate{v ? *v : kNegInf, std::move(x)};
  };

  std::vector<Candidate> simplex;
  simplex.reserve(d + 1);
  simplex.push_back(seed);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<double> x = seed.x;
    const double span = problem.axes[i].hi - problem.axes[i].lo;
    double h = span * initial_step_fraction;
    if (h == 0.0) h = 1e-8;
    x[i] = (x[i] + h <= problem.axes[i].hi) ? x[i] + h : x[i] - h;
    simplex.push_back(eval(std::move(x)));
  }

  auto order = [&] { std::sort(simplex.begin(), simplex.end(), better); };
  order();

  while (out.evaluations < opts.max_refine_evals) {
    // Convergence: value spread or simplex extent small enough.
    const double spread = simplex.front().value - simplex.back().value;
    double extent = 0.0;
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        extent = std::max(extent, std::abs(simplex[i].x[j] - simplex.front().x[j]));
    const double scale = std::max(1.0, std::abs(simplex.front().value));
    if ((std::isfinite(spread) && spread <= 1e-13 * scale) ||
        extent <= opts.refine_tol)
      break;

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) centroid[j] += simplex[i].x[j];
    }
    for (double& c : centroid) c /= static_cast<double>(d);

    auto affine = [&](double t) {
      std::vector<double> x(d);
      for (std::size_t j = 0; j < d; ++j)
        x[j] = centroid[j] + t * (centroid[j] - simplex.back().x[j]);
      return x;
    };

    const Candidate reflected = eval(affine(1.0));
    if (better(reflected, simplex.front())) {
      const Candidate expanded = eval(affine(2.0));
      simplex.back() = better(expanded, reflected) ? expanded : reflected;
    } else if (better(reflected, simplex[d - 1])) {
      simplex.back() = reflected;
    } else {
      const Candidate contracted = eval(affine(-0.5));
      if (better(contracted, simplex.back())) {
        simplex.back() = contracted;
      } else {
        for (std::size_t i = 1; i <= d; ++i) {
          std::vector<double> x(d);
          for (std::size_t j = 0; j < d; ++j)
            x[j] = 0.5 * (simplex[i].x[j] + simplex.front().x[j]);
          simplex[i] = eval(std::move(x));
        }
      }
    }
    order();
  }

  out.best = simplex.front();
  return out;
}

}  // namespace

OptimizeOutcome maximize_on_box(const BoxProblem& problem, const OptimizeOptions& opts) {
  const std::size_t d = problem.axes.size();
  if (d == 0) throw std::invalid_argument("maximize_on_box: no axes");
  if (opts.grid < 3) throw std::invalid_argument("maximize_on_box: grid must be >= 3");
  if (!(opts.refine_tol > 0.0))
    throw std::invalid_argument("maximize_on_box: refine_tol must be positive");

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(opts.grid);

  int n_threads = opts.threads > 0
                      ? opts.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::clamp<int>(n_threads, 1, 32);

  std::vector<TopK> tops(n_threads, TopK(static_cast<std::size_t>(opts.top_k)));
  std::vector<long long> infeasible_counts(n_threads, 0);
  const std::uint64_t chunk = (total + n_threads - 1) / n_threads;

  auto scan = [&](int t) {
    const std::uint64_t begin = chunk * t;
    const std::uint64_t end = std::min(total, begin + chunk);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      std::vector<double> x = decode(problem.axes, opts.grid, idx);
      const auto v = problem.objective(x);
      if (!v) {
        ++infeasible_counts[t];
        continue;
      }
      tops[t].offer(Candidate{*v, std::move(x)});
    }
  };

  if (n_threads == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(scan, t);
    for (auto& th : pool) th.join();
  }

  TopK merged(static_cast<std::size_t>(opts.top_k));
  long long infeasible = 0;
  for (int t = 0; t < n_threads; ++t) {
    merged.merge(tops[t]);
    infeasible += infeasible_counts[t];
  }

  OptimizeOutcome out;
  out.infeasible = infeasible;
  out.evaluations = static_cast<long long>(total) - infeasible;
  if (merged.items().empty()) throw EmptyFeasibleSetError();

  const double step_fraction = 0.5 / (opts.grid - 1);
  Candidate best = merged.items().front();
  for (const auto& seed : merged.items()) {
    RefineResult r = nelder_mead(problem, opts, seed, step_fraction);
    out.evaluations += r.evaluations;
    if (better(r.best, best)) best = r.best;
  }
  if (!std::isfinite(best.value))
    throw std::runtime_error("maximize_on_box: refinement produced no finite value");

  out.best = best.value;
  out.argmax = best.x;
  return out;
}

}  // namespace lgk3
