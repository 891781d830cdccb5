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

#include "gexit/exitsim.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "gexit/distributions.hpp"
#include "gexit/errors.hpp"
#include "parallel.hpp"

namespace gexit {
namespace {

ExitRecord make_record(const ExitProblem& problem, std::uint64_t k,
                       double state) {
  ExitRecord rec;
  rec.steps_taken = k;
  rec.tau = static_cast<double>(k) * problem.step;
  rec.side = state >= problem.right ? ExitSide::right : ExitSide::left;
  rec.normalized_time = rec.tau - problem.centering();
  return rec;
}

std::uint64_t guard_steps(const ExitProblem& problem) {
  return static_cast<std::uint64_t>(
      std::floor(problem.guard_horizon / problem.step));
}

[[noreturn]] void throw_guard(const ExitProblem& problem) {
  throw GuardExceeded("no exit before guard horizon " +
                      std::to_string(problem.guard_horizon));
}

// Number of grid steps until exp(-beta T) <= 1e-9.
std::size_t noise_steps(double beta, double step) {
  const double horizon = std::log(1e9) / beta;
  return static_cast<std::size_t>(std::ceil(horizon / step));
}

}  // namespace

ExitProblem ExitProblem::make(double beta, double epsilon, double a,
                              double step) {
  ExitProblem p;
  p.model.beta = beta;
  p.epsilon = epsilon;
  p.a = a;
  p.step = step;
  if (beta > 0.0 && epsilon > 0.0) {
    p.guard_horizon = std::log(1.0 / epsilon) / beta + 40.0 / beta;
  }
  p.validate();
  return p;
}

void ExitProblem::validate() const {
  const auto fail = [](const char* what) {
    throw std::invalid_argument(std::string("ExitProblem: ") + what);
  };
  if (!(model.beta > 0.0) || !std::isfinite(model.beta)) fail("beta must be > 0");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) fail("epsilon must be > 0");
  if (!(a > 0.0) || !std::isfinite(a)) fail("a must be > 0");
  if (!(left < start() && start() < 0.0 && 0.0 < right)) {
    fail("start -epsilon*a must lie in (left, 0)");
  }
  if (!(step > 0.0 && step <= 1e-2)) fail("step must be in (0, 1e-2]");
  if (!(guard_horizon >= centering() + 20.0 / model.beta)) {
    fail("guard_horizon below ln(1/epsilon)/beta + 20/beta");
  }
}

double ExitProblem::centering() const {
  return std::log(1.0 / epsilon) / model.beta;
}

double ExitProblem::threshold() const { return a * std::sqrt(2.0 * model.beta); }

ExitRecord simulate_exit_exact(const ExitProblem& problem, RngStream& rng) {
  const double beta = problem.model.beta;
  const double h = problem.step;
  const double growth = std::exp(beta * h);
  const double kick =
      problem.epsilon * std::sqrt(std::expm1(2.0 * beta * h) / (2.0 * beta));
  const std::uint64_t max_steps = guard_steps(problem);
  double x = problem.start();
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    x = growth * x + kick * rng.normal();
    if (x <= problem.left || x >= problem.right) {
      return make_record(problem, k, x);
    }
  }
  throw_guard(problem);
}

ExitRecord simulate_exit_euler(const ExitProblem& problem, RngStream& rng) {
  const double drift = problem.model.beta * problem.step;
  const double kick = problem.epsilon * std::sqrt(problem.step);
  const std::uint64_t max_steps = guard_steps(problem);
  double x = problem.start();
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    x = x + drift * x + kick * rng.normal();
    if (x <= problem.left || x >= problem.right) {
      return make_record(problem, k, x);
    }
  }
  throw_guard(problem);
}

std::vector<double> trace_exact_path(const ExitProblem& problem,
                                     RngStream& rng, std::size_t steps) {
  const double beta = problem.model.beta;
  const double h = problem.step;
  const double growth = std::exp(beta * h);
  const double kick =
      problem.epsilon * std::sqrt(std::expm1(2.0 * beta * h) / (2.0 * beta));
  std::vector<double> path;
  path.reserve(steps + 1);
  double x = problem.start();
  path.push_back(x);
  for (std::size_t k = 0; k < steps; ++k) {
    x = growth * x + kick * rng.normal();
    path.push_back(x);
  }
  return path;
}

ConditionedSample sample_conditioned_exits(const ExitProblem& problem,
                                           std::uint64_t n_accept,
                                           const RngStream& rng,
                                           const SamplerOptions& options) {
  problem.validate();
  if (n_accept == 0) {
    throw std::invalid_argument("sample_conditioned_exits: n_accept must be >= 1");
  }
  if (options.block_size == 0) {
    throw std::invalid_argument("sample_conditioned_exits: block_size must be >= 1");
  }
  const double rate = gaussian_tail(problem.threshold());
  const double expected = static_cast<double>(n_accept) / rate;
  if (!(expected <= static_cast<double>(options.budget))) {
    throw BudgetExceeded(
        "expected " + std::to_string(expected) + " attempts for " +
        std::to_string(n_accept) + " right exits exceeds budget " +
        std::to_string(options.budget) + "; use the limit-law sampler");
  }

  struct BlockResult {
    std::vector<AcceptedExit> accepted;
    std::optional<std::uint64_t> guard_failure;
  };

  const unsigned workers = std::max(1u, options.workers);
  ConditionedSample out;
  out.records.reserve(n_accept);
  std::uint64_t next_start = 0;

  while (next_start < options.budget) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> blocks;
    for (unsigned w = 0; w < workers && next_start < options.budget; ++w) {
      const std::uint64_t end =
          std::min(options.budget, next_start + options.block_size);
      blocks.emplace_back(next_start, end);
      next_start = end;
    }
    std::vector<BlockResult> results(blocks.size());
    detail::parallel_for(blocks.size(), workers, [&](std::size_t b) {
      auto& res = results[b];
      for (std::uint64_t i = blocks[b].first; i < blocks[b].second; ++i) {
        RngStream stream = rng.substream(i);
        try {
          const ExitRecord rec = simulate_exit_exact(problem, stream);
          if (rec.side == ExitSide::right) res.accepted.push_back({i, rec});
        } catch (const GuardExceeded&) {
          res.guard_failure = i;
          return;
        }
      }
    });
    // Merge in attempt order. A guard failure only matters if it happened
    // before the n_accept-th acceptance.
    for (const auto& res : results) {
      for (const auto& acc : res.accepted) {
        out.records.push_back(acc);
        if (out.records.size() == n_accept) {
          if (res.guard_failure && *res.guard_failure < acc.attempt_index) {
            throw_guard(problem);
          }
          out.attempts = acc.attempt_index + 1;
          return out;
        }
      }
      if (res.guard_failure) throw_guard(problem);
    }
  }
  throw BudgetExceeded("attempt budget " + std::to_string(options.budget) +
                       " exhausted after " + std::to_string(out.records.size()) +
                       " right exits");
}

NoiseRealization make_noise_realization(double beta, double step,
                                        RngStream& rng) {
  if (!(beta > 0.0) || !(step > 0.0 && step <= 1e-2)) {
    throw std::invalid_argument("make_noise_realization: need beta > 0, step in (0, 1e-2]");
  }
  const std::size_t n = noise_steps(beta, step);
  const double scale = std::sqrt(-std::expm1(-2.0 * beta * step) / (2.0 * beta));
  NoiseRealization noise;
  noise.beta = beta;
  noise.step = step;
  noise.times.resize(n + 1);
  noise.I_values.resize(n + 1);
  noise.I_values[0] = 0.0;
  double value = 0.0;
  double sup = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    noise.times[k] = static_cast<double>(k) * step;
    if (k > 0) {
      const double t_prev = static_cast<double>(k - 1) * step;
      value += std::exp(-beta * t_prev) * scale * rng.normal();
      noise.I_values[k] = value;
      sup = std::max(sup, std::abs(value));
    }
  }
  noise.I_infinity = value;
  noise.I_sup = sup;
  return noise;
}

ExitRecord duhamel_exit_time(const NoiseRealization& noise,
                             const ExitProblem& problem) {
  problem.validate();
  if (noise.beta != problem.model.beta || noise.step != problem.step) {
    throw std::invalid_argument(
        "duhamel_exit_time: noise and problem disagree on beta or step");
  }
  const double beta = problem.model.beta;
  for (std::size_t k = 1; k < noise.I_values.size(); ++k) {
    const double x = problem.epsilon * std::exp(beta * noise.times[k]) *
                     (-problem.a + noise.I_values[k]);
    if (x <= problem.left || x >= problem.right) {
      return make_record(problem, k, x);
    }
  }
  throw GuardExceeded("duhamel_exit_time: no crossing on the noise grid");
}

double truncated_gaussian(double r, RngStream& rng) {
  if (!std::isfinite(r)) {
    throw std::invalid_argument("truncated_gaussian: r must be finite");
  }
  if (r < 1.0) {
    for (;;) {
      const double z = rng.normal();
      if (z > r) return z;
    }
  }
  const double rate = 0.5 * (r + std::sqrt(r * r + 4.0));
  for (;;) {
    const double z = r + rng.exponential() / rate;
    const double d = z - rate;
    if (rng.uniform() <= std::exp(-0.5 * d * d) && z > r) return z;
  }
}

double limit_law_sample(double beta, double a, RngStream& rng) {
  if (!(beta > 0.0) || !(a > 0.0)) {
    throw std::invalid_argument("limit_law_sample: need beta > 0, a > 0");
  }
  const double r = a * std::sqrt(2.0 * beta);
  const double n = truncated_gaussian(r, rng);
  return -std::log(n - r) / beta + std::log(2.0 * beta) / (2.0 * beta);
}

double limit_law_cdf(double beta, double a, double x) {
  if (!(beta > 0.0) || !(a > 0.0)) {
    throw std::invalid_argument("limit_law_cdf: need beta > 0, a > 0");
  }
  const double r = a * std::sqrt(2.0 * beta);
  const double shift = std::sqrt(2.0 * beta) * std::exp(-beta * x);
  if (!std::isfinite(shift)) return 0.0;
  const double value =
      std::exp(gaussian_log_tail(r + shift) - gaussian_log_tail(r));
  return std::min(1.0, value);
}

}  // namespace gexit
