// Copyright 2026 The gexit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEXIT_EXITSIM_HPP_
#define GEXIT_EXITSIM_HPP_

#include <cstdint>
#include <vector>

#include "gexit/rng.hpp"

namespace gexit {

// Drift b(x) = beta * x.
struct LinearDriftModel {
  double beta = 1.0;
};

/// One conditioned-exit experiment for dX = beta X dt + epsilon dW started at
/// x0 = -epsilon * a on the interval (left, right).
struct ExitProblem {
  LinearDriftModel model;
  double epsilon = 0.01;
  double a = 1.0;
  double left = -1.0;
  double right = 1.0;
  double step = 1e-3;
  double guard_horizon = 0.0;

  /// Fills in guard_horizon = ln(1/epsilon)/beta + 40/beta and validates.
  static ExitProblem make(double beta, double epsilon, double a,
                          double step = 1e-3);

  /// Throws std::invalid_argument on any violated invariant: beta > 0,
  /// epsilon > 0, a > 0, left < x0 < 0 < right, 0 < step <= 1e-2,
  /// guard_horizon >= ln(1/epsilon)/beta + 20/beta.
  void validate() const;

  double start() const { return -epsilon * a; }
  /// ln(1/epsilon)/beta, the deterministic part of the exit time.
  double centering() const;
  /// a * sqrt(2 beta); the exit is to the right in the small-noise limit
  /// iff a standard Gaussian exceeds this level.
  double threshold() const;
};

enum class ExitSide { left, right };

struct ExitRecord {
  double tau = 0.0;
  ExitSide side = ExitSide::left;
  double normalized_time = 0.0;  // tau - ln(1/epsilon)/beta
  std::uint64_t steps_taken = 0;
};

struct AcceptedExit {
  std::uint64_t attempt_index = 0;
  ExitRecord record;
};

struct ConditionedSample {
  std::vector<AcceptedExit> records;  // ascending attempt_index
  std::uint64_t attempts = 0;
};

/// Discretised I_t = int_0^t exp(-beta s) dW(s) on t_k = k * step, run until
/// exp(-beta T) <= 1e-9 so that I_T stands in for I_infinity.
struct NoiseRealization {
  double beta = 1.0;
  double step = 1e-3;
  std::vector<double> times;
  std::vector<double> I_values;
  double I_infinity = 0.0;
  double I_sup = 0.0;
};

/// Exact Gaussian transition
///   X(t+h) = e^{beta h} X(t) + epsilon sqrt((e^{2 beta h} - 1)/(2 beta)) xi,
/// stopped at the first grid time outside (left, right). One normal draw
/// per step. Throws GuardExceeded past guard_horizon.
ExitRecord simulate_exit_exact(const ExitProblem& problem, RngStream& rng);

/// Euler-Maruyama baseline X(t+h) = X + beta X h + epsilon sqrt(h) xi.
ExitRecord simulate_exit_euler(const ExitProblem& problem, RngStream& rng);

/// Exact-step path X(0), X(h), ..., X(steps h) without exit stopping.
std::vector<double> trace_exact_path(const ExitProblem& problem,
                                     RngStream& rng, std::size_t steps);

struct SamplerOptions {
  std::uint64_t budget = 1'000'000'000;
  unsigned workers = 1;
  std::uint64_t block_size = 4096;
};

/// Rejection sampler for exits through the right end. Attempt i is driven by
/// rng.substream(i); attempts run in fixed-size blocks and are merged in
/// attempt order, so the result does not depend on options.workers.
///
/// Throws BudgetExceeded when the attempt count would exceed options.budget,
/// including up front when n_accept / gaussian_tail(threshold) already does.
ConditionedSample sample_conditioned_exits(const ExitProblem& problem,
                                           std::uint64_t n_accept,
                                           const RngStream& rng,
                                           const SamplerOptions& options = {});

/// Draws the noise functional with the same normal sequence that
/// simulate_exit_exact would consume from an identical stream.
NoiseRealization make_noise_realization(double beta, double step,
                                        RngStream& rng);

/// Exit time from the closed form X(t) = epsilon e^{beta t} (-a + I_t):
/// first grid time at which it leaves (left, right). Throws GuardExceeded if
/// the crossing is not on the noise grid.
ExitRecord duhamel_exit_time(const NoiseRealization& noise,
                             const ExitProblem& problem);

/// Standard Gaussian conditioned on exceeding r. Plain rejection for r < 1,
/// exponential proposal with rate (r + sqrt(r^2 + 4))/2 otherwise.
double truncated_gaussian(double r, RngStream& rng);

/// Draw from the small-noise limit of tau - ln(1/epsilon)/beta given a right
/// exit: -ln(N - r)/beta + ln(2 beta)/(2 beta), N > r = a sqrt(2 beta).
double limit_law_sample(double beta, double a, RngStream& rng);

/// CDF of the same law, R(r + sqrt(2 beta) e^{-beta x}) / R(r).
double limit_law_cdf(double beta, double a, double x);

}  // namespace gexit

#endif  // GEXIT_EXITSIM_HPP_
