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

#include "gexit/grid.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "gexit/errors.hpp"

namespace gexit {

GridCurve::GridCurve(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) {
    throw std::invalid_argument("GridCurve: xs and ys differ in length");
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i]) || !std::isfinite(ys_[i])) {
      throw std::invalid_argument("GridCurve: non-finite value");
    }
    if (i > 0 && !(xs_[i] > xs_[i - 1])) {
      throw std::invalid_argument("GridCurve: xs not strictly increasing");
    }
  }
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) {
    throw std::invalid_argument("make_grid: bounds and step must be finite");
  }
  if (!(step > 0.0) || hi < lo) {
    throw std::invalid_argument("make_grid: need step > 0 and hi >= lo");
  }
  const auto count =
      static_cast<std::size_t>(std::floor((hi - lo) / step * (1.0 + 1e-9))) +
      1;
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = lo + static_cast<double>(i) * step;
  }
  return xs;
}

GridCurve tabulate(const std::vector<double>& xs,
                   const std::function<double(double)>& f) {
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (double x : xs) ys.push_back(f(x));
  return GridCurve(xs, std::move(ys));
}

void write_comparison_csv(std::ostream& out, const GridCurve& exact,
                          const GridCurve& limit) {
  if (exact.xs() != limit.xs()) {
    throw GridMismatch("write_comparison_csv: curves on different grids");
  }
  out << "x,exact,limit,abs_error\n";
  char line[128];
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double e = exact.ys()[i];
    const double l = limit.ys()[i];
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n",
                  exact.xs()[i], e, l, std::abs(e - l));
    out << line;
  }
}

}  // namespace gexit
