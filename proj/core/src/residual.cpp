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

#include "gexit/residual.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "gexit/errors.hpp"
#include "gexit/evt.hpp"

namespace gexit {
namespace {

double conditioning_tail(const TailModel& model, double r) {
  const double t = model.tail(r);
  if (!(t > 0.0)) {
    throw ZeroTail("tail(" + std::to_string(r) + ") underflows to zero");
  }
  return t;
}

}  // namespace

double residual_tail(const TailModel& model, double r, double x) {
  if (!(x >= 0.0)) {
    throw std::invalid_argument("residual_tail: x must be >= 0");
  }
  const double denom = conditioning_tail(model, r);
  return model.tail(r + x) / denom;
}

double scaled_residual(const TailModel& model, double r, double x) {
  const double denom = conditioning_tail(model, r);
  return model.tail(r + model.scaling_a(r) * x) / denom;
}

double log_residual_cdf(const TailModel& model, double r, double x) {
  const double denom = conditioning_tail(model, r);
  return model.tail(r + std::exp(-x)) / denom;
}

double shifted_log_residual_cdf(const TailModel& model, double r, double x) {
  return log_residual_cdf(model, r, x - std::log(model.scaling_a(r)));
}

double scaling_from_maxima(const TailModel& model, double r) {
  const double t = conditioning_tail(model, r);
  // n < 1/t <= n + 1
  const double inv = 1.0 / t;
  const auto n = static_cast<std::uint64_t>(std::ceil(inv)) - 1;
  if (n < 3) {
    throw std::invalid_argument("scaling_from_maxima: tail(r) too large, n < 3");
  }
  return solve_normalizers(model, n).a_n;
}

}  // namespace gexit
