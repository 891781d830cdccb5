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

#ifndef GEXIT_EVT_HPP_
#define GEXIT_EVT_HPP_

#include <cstdint>
#include <functional>

#include "gexit/distributions.hpp"
#include "gexit/rng.hpp"
#include "gexit/stats.hpp"

namespace gexit {

/// Affine normalisation (a_n, b_n) for maxima of n i.i.d. draws: b_n solves
/// tail(b_n) = 1/n and a_n = scaling_a(b_n), which for the Gaussian gives
/// a_n = 1/b_n.
struct NormalizingSequence {
  std::uint64_t n = 0;
  double a_n = 1.0;
  double b_n = 0.0;
};

/// Bracket [0, 50], bisection to width 1e-3, then Newton on ln tail(b) + ln n
/// until |n tail(b) - 1| <= 1e-13.
///
/// Throws std::invalid_argument for n < 2 or when a_n comes out non-positive
/// or infinite (the Gaussian at n = 2, where b_2 = 0), and NoBracket when
/// 1/n is not attained on the bracket.
NormalizingSequence solve_normalizers(const TailModel& model, std::uint64_t n);

/// n * tail(a_n x + b_n); tends to -ln Lambda(x) = e^{-x} for F in D(Lambda).
double gnedenko_lhs(const TailModel& model, const NormalizingSequence& seq,
                    double x);

/// F^n(a_n x + b_n), evaluated as exp(n log1p(-tail)).
double max_cdf(const TailModel& model, const NormalizingSequence& seq,
               double x);

/// exp(-n tail(a_n x + b_n)): the max-law approximation that the criterion
/// predicts. Agrees with max_cdf up to O(1/n).
double criterion_cdf(const TailModel& model, const NormalizingSequence& seq,
                     double x);

using Sampler = std::function<double(RngStream&)>;

/// Draws `replicas` normalised maxima (max_i X_i - b_n) / a_n of seq.n
/// draws each. Replica j uses rng.substream(j), so output is independent of
/// the worker count. Requires seq.n >= 3 and replicas >= 1.
EmpiricalSample sample_normalized_max(const Sampler& sampler,
                                      const NormalizingSequence& seq,
                                      std::uint64_t replicas,
                                      const RngStream& rng,
                                      unsigned workers = 1);

}  // namespace gexit

#endif  // GEXIT_EVT_HPP_
