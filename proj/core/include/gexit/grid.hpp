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

#ifndef GEXIT_GRID_HPP_
#define GEXIT_GRID_HPP_

#include <functional>
#include <iosfwd>
#include <vector>

namespace gexit {

// Sampled curve on strictly increasing abscissae.
class GridCurve {
 public:
  GridCurve() = default;
  // Throws std::invalid_argument unless xs is strictly increasing, the
  // sizes match and every value is finite.
  GridCurve(std::vector<double> xs, std::vector<double> ys);

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  std::size_t size() const { return xs_.size(); }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// Points lo, lo + step, ... up to hi (inclusive within step/1e9). Each point
// is computed as lo + i * step so there is no accumulated drift.
std::vector<double> make_grid(double lo, double hi, double step);

GridCurve tabulate(const std::vector<double>& xs,
                   const std::function<double(double)>& f);

// CSV with header x,exact,limit,abs_error. Throws GridMismatch.
void write_comparison_csv(std::ostream& out, const GridCurve& exact,
                          const GridCurve& limit);

}  // namespace gexit

#endif  // GEXIT_GRID_HPP_
