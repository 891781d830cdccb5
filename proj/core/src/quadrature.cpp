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

#include "gexit/quadrature.hpp"

#include <cmath>

namespace gexit {
namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, const Panel& p,
              double tol, int depth) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
  const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  const Panel lp{p.a, lm, p.m, p.fa, flm, p.fm, left};
  const Panel rp{p.m, rm, p.b, p.fm, frm, p.fb, right};
  return refine(f, lp, 0.5 * tol, depth - 1) +
         refine(f, rp, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo,
                        double hi, double tol, int max_depth) {
  // Start from a handful of panels so a narrow peak is not missed by the
  // first three samples.
  constexpr int kInitialPanels = 64;
  const double width = (hi - lo) / kInitialPanels;
  double total = 0.0;
  for (int i = 0; i < kInitialPanels; ++i) {
    const double a = lo + i * width;
    const double b = (i + 1 == kInitialPanels) ? hi : lo + (i + 1) * width;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const Panel p{a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb)};
    total += refine(f, p, tol / kInitialPanels, max_depth);
  }
  return total;
}

}  // namespace gexit
