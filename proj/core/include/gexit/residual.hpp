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

#ifndef GEXIT_RESIDUAL_HPP_
#define GEXIT_RESIDUAL_HPP_

#include "gexit/distributions.hpp"

namespace gexit {

// Every function here conditions on X > r and throws ZeroTail when
// model.tail(r) is zero.

/// P{X - r > x | X > r} = tail(r + x) / tail(r), x >= 0.
double residual_tail(const TailModel& model, double r, double x);

/// tail(r + a(r) x) / tail(r). Tends to e^{-x} for F in D(Lambda).
double scaled_residual(const TailModel& model, double r, double x);

/// H_r(x) = P{-ln(X - r) <= x | X > r} = tail(r + e^{-x}) / tail(r).
double log_residual_cdf(const TailModel& model, double r, double x);

/// H_r(x - ln a(r)); tends to Lambda(x). Equals scaled_residual(r, e^{-x})
/// before any limit is taken.
double shifted_log_residual_cdf(const TailModel& model, double r, double x);

/// Scaling borrowed from the maxima side: a(r) = a_n for the n with
/// 1/(n+1) <= tail(r) < 1/n. Requires that n >= 3.
double scaling_from_maxima(const TailModel& model, double r);

}  // namespace gexit

#endif  // GEXIT_RESIDUAL_HPP_
