// Copyright 2026 The QVC Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qvc::opt {

struct OptimizerConfig {
  /// Objective-evaluation budget.
  int max_iterations = 400;
  /// Initial and final trust-region radius.
  double rho_begin = 1.0;
  double rho_end = 1e-4;
  /// Seed for initial_theta.
  std::uint64_t seed = 0;
  /// When set, a CSV trace (iteration,rho,best_value) is written here.
  std::optional<std::filesystem::path> trace_path;

  /// Throws ConfigError unless 0 < rho_end < rho_begin and max_iterations >= 1.
  void validate() const;
};

enum class StopReason {
  Converged,        // rho reached rho_end
  BudgetExhausted,  // max_iterations evaluations used
  NonFinite,        // objective or constraint returned NaN/inf
  Degenerate,       // simplex could not be repaired
};

std::string_view to_string(StopReason reason) noexcept;

struct TraceEntry {
  int iteration = 0;  // 1-based evaluation index
  double rho = 0.0;
  double best_value = 0.0;
};

struct OptimizationResult {
  std::vector<double> best_theta;
  double best_value = 0.0;
  /// Largest constraint violation at best_theta (0 when unconstrained).
  double max_violation = 0.0;
  int evaluations_used = 0;
  bool converged = false;
  StopReason reason = StopReason::BudgetExhausted;
  std::string diagnostic;
  std::vector<TraceEntry> trace;
};

using Objective = std::function<double(std::span<const double>)>;
/// Fills `out` (length = number of constraints) with values required >= 0.
using Constraints = std::function<void(std::span<const double> x, std::span<double> out)>;

/// Powell's COBYLA without constraints.
OptimizationResult minimize(const Objective& objective, std::span<const double> initial,
                            const OptimizerConfig& config = {});

/// Powell's COBYLA subject to constraints(x) >= 0 componentwise. Returns the
/// best feasible point seen, or the least infeasible one if none was.
OptimizationResult minimize_constrained(const Objective& objective, const Constraints& constraints,
                                        int num_constraints, std::span<const double> initial,
                                        const OptimizerConfig& config = {});

/// Uniform draw from [-pi, pi]^num_params, deterministic in seed.
std::vector<double> initial_theta(int num_params, std::uint64_t seed);

void write_trace_csv(const std::vector<TraceEntry>& trace, const std::filesystem::path& path);

namespace detail {

/// Solution of the linear-programming trust-region subproblem.
struct SubproblemStep {
  std::vector<double> step;
  bool on_boundary = false;
};

/// Over |d| <= rho: first minimise the largest violation of the linearised
/// constraints c + G^T d >= 0, then minimise g.d without increasing that
/// violation. `G` is column-major n x m.
SubproblemStep solve_trust_region_lp(std::span<const double> g, std::span<const double> G,
                                     std::span<const double> c, double rho);

/// min |E l - f| subject to l >= 0. E is column-major rows x cols.
std::vector<double> nnls(std::span<const double> E, int rows, int cols, std::span<const double> f);

}  // namespace detail

}  // namespace qvc::opt
