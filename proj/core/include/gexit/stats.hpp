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

#ifndef GEXIT_STATS_HPP_
#define GEXIT_STATS_HPP_

#include <functional>
#include <span>
#include <vector>

#include "gexit/grid.hpp"

namespace gexit {

// Immutable sorted sample. Throws std::invalid_argument if empty or if any
// value is NaN.
class EmpiricalSample {
 public:
  explicit EmpiricalSample(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t count() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

// Fraction of values <= x (right-continuous).
double ecdf(const EmpiricalSample& sample, double x);

// sup_x |F_n(x) - F(x)|, evaluated at both sides of every jump.
double ks_one_sample(const EmpiricalSample& sample,
                     const std::function<double(double)>& cdf);

// sup_x |F_n(x) - G_m(x)| over the pooled sample points, both ECDFs taken
// right-continuous.
double ks_two_sample(const EmpiricalSample& s1, const EmpiricalSample& s2);

// max_i |y1_i - y2_i|. Throws GridMismatch if the abscissae differ.
double grid_sup_distance(const GridCurve& c1, const GridCurve& c2);

}  // namespace gexit

#endif  // GEXIT_STATS_HPP_
