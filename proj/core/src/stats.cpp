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

#include "gexit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gexit/errors.hpp"

namespace gexit {

EmpiricalSample::EmpiricalSample(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("EmpiricalSample: empty sample");
  }
  if (std::any_of(values_.begin(), values_.end(),
                  [](double v) { return std::isnan(v); })) {
    throw std::invalid_argument("EmpiricalSample: NaN value");
  }
  std::sort(values_.begin(), values_.end());
}

double ecdf(const EmpiricalSample& sample, double x) {
  const auto v = sample.values();
  const auto below = std::upper_bound(v.begin(), v.end(), x) - v.begin();
  return static_cast<double>(below) / static_cast<double>(v.size());
}

double ks_one_sample(const EmpiricalSample& sample,
                     const std::function<double(double)>& cdf) {
  const auto v = sample.values();
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    const double above = static_cast<double>(i + 1) / n;
    const double below = static_cast<double>(i) / n;
    d = std::max({d, std::abs(above - f), std::abs(below - f)});
  }
  return d;
}

double ks_two_sample(const EmpiricalSample& s1, const EmpiricalSample& s2) {
  const auto a = s1.values();
  const auto b = s2.values();
  const double n = static_cast<double>(a.size());
  const double m = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() || j < b.size()) {
    double t;
    if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
      t = a[i];
    } else {
      t = b[j];
    }
    // Step past every copy of t in both samples before comparing.
    while (i < a.size() && a[i] <= t) ++i;
    while (j < b.size() && b[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n -
                             static_cast<double>(j) / m));
  }
  return d;
}

double grid_sup_distance(const GridCurve& c1, const GridCurve& c2) {
  if (c1.xs() != c2.xs()) {
    throw GridMismatch("grid_sup_distance: curves on different grids");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    d = std::max(d, std::abs(c1.ys()[i] - c2.ys()[i]));
  }
  return d;
}

}  // namespace gexit
