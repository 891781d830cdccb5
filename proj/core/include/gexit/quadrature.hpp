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

#ifndef GEXIT_QUADRATURE_HPP_
#define GEXIT_QUADRATURE_HPP_

#include <functional>

namespace gexit {

// Adaptive Simpson on [lo, hi] with Richardson correction. The tolerance is
// absolute and split between halves on each refinement.
double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double tol = 1e-10, int max_depth = 50);

}  // namespace gexit

#endif  // GEXIT_QUADRATURE_HPP_
