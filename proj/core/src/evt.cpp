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

#include "gexit/evt.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gexit/errors.hpp"
#include "parallel.hpp"

namespace gexit {
namespace {

constexpr double kBracketLo = 0.0;
constexpr double kBracketHi = 50.0;
constexpr double kBisectionWidth = 1e-3;
constexpr double kTailRelTol = 1e-13;
constexpr int kMaxNewton = 60;

}  // namespace

NormalizingSequence solve_normalizers(const TailModel& model, std::uint64_t n) {
  if (n < 2) {
    throw std::invalid_argument("solve_normalizers: n must be >= 2");
  }
  const double nd = static_cast<double>(n);
  const double target = 1.0 / nd;
  double lo = kBracketLo;
  double hi = kBracketHi;
  const double tail_lo = model.tail(lo);
  if (!(tail_lo >= target) || !(model.tail(hi) <= target)) {
    throw NoBracket("solve_normalizers: tail never reaches 1/" +
                    std::to_string(n) + " on [0, 50]");
  }

  double b = lo;
  if (tail_lo != target) {
    while (hi - lo > kBisectionWidth) {
      const double mid = 0.5 * (lo + hi);
      (model.tail(mid) > target ? lo : hi) = mid;
    }
    b = 0.5 * (lo + hi);
    const double log_n = std::log(nd);
    for (int it = 0; it < kMaxNewton; ++it) {
      const double t = model.tail(b);
      if (std::abs(t * nd - 1.0) <= kTailRelTol) break;
      // d/db ln tail(b) = -density(b) / tail(b)
      const double g = std::log(t) + log_n;
      const double slope = -model.density(b) / t;
      double next = b - g / slope;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      (model.tail(next) > target ? lo : hi) = next;
      b = next;
    }
  }

  NormalizingSequence seq;
  seq.n = n;
  seq.b_n = b;
  seq.a_n = model.scaling_a(b);
  if (!(seq.a_n > 0.0) || !std::isfinite(seq.a_n)) {
    throw std::invalid_argument("solve_normalizers: scaling a(b_n) is not finite and positive");
  }
  return seq;
}

double gnedenko_lhs(const TailModel& model, const NormalizingSequence& seq,
                    double x) {
  return static_cast<double>(seq.n) * model.tail(seq.a_n * x + seq.b_n);
}

double max_cdf(const TailModel& model, const NormalizingSequence& seq,
               double x) {
  const double t = model.tail(seq.a_n * x + seq.b_n);
  return std::exp(static_cast<double>(seq.n) * std::log1p(-t));
}

double criterion_cdf(const TailModel& model, const NormalizingSequence& seq,
                     double x) {
  return std::exp(-gnedenko_lhs(model, seq, x));
}

EmpiricalSample sample_normalized_max(const Sampler& sampler,
                                      const NormalizingSequence& seq,
                                      std::uint64_t replicas,
                                      const RngStream& rng, unsigned workers) {
  if (seq.n < 3) {
    throw std::invalid_argument("sample_normalized_max: n must be >= 3");
  }
  if (replicas == 0) {
    throw std::invalid_argument("sample_normalized_max: replicas must be >= 1");
  }
  std::vector<double> values(replicas);
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (replicas + kChunk - 1) / kChunk;
  detail::parallel_for(chunks, workers, [&](std::size_t c) {
    const std::size_t end = std::min<std::size_t>(replicas, (c + 1) * kChunk);
    for (std::size_t j = c * kChunk; j < end; ++j) {
      RngStream stream = rng.substream(j);
      double best = -std::numeric_limits<double>::infinity();
      for (std::uint64_t i = 0; i < seq.n; ++i) {
        best = std::max(best, sampler(stream));
      }
      values[j] = (best - seq.b_n) / seq.a_n;
    }
  });
  return EmpiricalSample(std::move(values));
}

}  // namespace gexit
