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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gexit/distributions.hpp"
#include "gexit/errors.hpp"
#include "gexit/grid.hpp"
#include "gexit/rng.hpp"
#include "gexit/stats.hpp"

using namespace gexit;

namespace {

// Direct definition: sup over a dense scan of |F_n(x) - F(x)| including the
// left limits at sample points.
double brute_ks(std::vector<double> v, const std::function<double(double)>& cdf) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double left = static_cast<double>(
        std::lower_bound(v.begin(), v.end(), v[i]) - v.begin()) / n;
    const double right = static_cast<double>(
        std::upper_bound(v.begin(), v.end(), v[i]) - v.begin()) / n;
    d = std::max({d, std::abs(left - cdf(v[i])), std::abs(right - cdf(v[i]))});
  }
  return d;
}

double brute_ks2(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto frac = [](const std::vector<double>& s, double t) {
    return static_cast<double>(std::count_if(s.begin(), s.end(),
                                             [t](double v) { return v <= t; })) /
           static_cast<double>(s.size());
  };
  double d = 0.0;
  for (double t : pooled) d = std::max(d, std::abs(frac(a, t) - frac(b, t)));
  return d;
}

}  // namespace

TEST_CASE("ecdf edges") {
  const EmpiricalSample s({3.0, 1.0, 2.0});
  CHECK(ecdf(s, 0.5) == 0.0);
  CHECK(ecdf(s, 3.0) == 1.0);
  CHECK(ecdf(s, 2.0) == doctest::Approx(2.0 / 3.0));
  const EmpiricalSample one({4.0});
  CHECK(ecdf(one, 4.0) == 1.0);
  CHECK(ecdf(one, std::nextafter(4.0, 0.0)) == 0.0);
  CHECK_THROWS_AS(EmpiricalSample({}), std::invalid_argument);
  CHECK_THROWS_AS(EmpiricalSample({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("ecdf is nondecreasing and right-continuous on random samples") {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> v(1 + gen() % 50);
    for (auto& x : v) x = std::round(nd(gen) * 4.0) / 4.0;  // force ties
    const EmpiricalSample s(v);
    double prev = 0.0;
    for (double x : make_grid(-4.0, 4.0, 0.01)) {
      const double f = ecdf(s, x);
      CHECK(f >= prev);
      prev = f;
    }
    for (double x : s.values()) {
      CHECK(ecdf(s, x) == ecdf(s, x + 1e-12));
      CHECK(ecdf(s, x) > ecdf(s, std::nextafter(x, -1e300)));
    }
  }
}

TEST_CASE("one-sample KS edge cases") {
  CHECK(ks_one_sample(EmpiricalSample({0.1, 0.5, 0.9}), [](double) { return 0.0; }) == 1.0);
  CHECK(ks_one_sample(EmpiricalSample({0.0}), gaussian_cdf) == doctest::Approx(0.5));
}

TEST_CASE("one-sample KS agrees with brute force and is transform invariant") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> v(2 + gen() % 40);
    for (auto& x : v) x = std::round(nd(gen) * 8.0) / 8.0;
    const double d = ks_one_sample(EmpiricalSample(v), gaussian_cdf);
    CHECK(d == doctest::Approx(brute_ks(v, gaussian_cdf)).epsilon(1e-14));
    // x -> x^3 applied to the sample and to the cdf argument.
    std::vector<double> cubed(v);
    for (auto& x : cubed) x = x * x * x;
    const double dc = ks_one_sample(EmpiricalSample(cubed), [](double y) {
      return gaussian_cdf(std::cbrt(y));
    });
    CHECK(dc == doctest::Approx(d).epsilon(1e-12));
  }
}

TEST_CASE("one-sample KS on a sample from the cdf itself") {
  RngStream s(99, 0);
  std::vector<double> v(10000);
  for (auto& x : v) x = s.normal();
  CHECK(ks_one_sample(EmpiricalSample(v), gaussian_cdf) <= 1.63 / std::sqrt(1e4));
}

TEST_CASE("two-sample KS") {
  const EmpiricalSample a({1.0, 2.0, 3.0});
  CHECK(ks_two_sample(a, a) == 0.0);
  CHECK(ks_two_sample(a, EmpiricalSample({10.0, 11.0})) == 1.0);

  std::mt19937_64 gen(5);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> x(1 + gen() % 30), y(1 + gen() % 30);
    for (auto& v : x) v = std::round(nd(gen) * 3.0) / 3.0;
    for (auto& v : y) v = std::round(nd(gen) * 3.0) / 3.0;
    const double d = ks_two_sample(EmpiricalSample(x), EmpiricalSample(y));
    CHECK(d == doctest::Approx(brute_ks2(x, y)).epsilon(1e-14));
    std::vector<double> xc(x), yc(y);
    for (auto& v : xc) v = v * v * v;
    for (auto& v : yc) v = v * v * v;
    CHECK(ks_two_sample(EmpiricalSample(xc), EmpiricalSample(yc)) ==
          doctest::Approx(d).epsilon(1e-14));
  }

  RngStream s1(1, 0), s2(2, 0);
  std::vector<double> u(10000), w(10000);
  for (auto& v : u) v = s1.normal();
  for (auto& v : w) v = s2.normal();
  CHECK(ks_two_sample(EmpiricalSample(u), EmpiricalSample(w)) <=
        1.36 * std::sqrt(2.0 / 1e4));
}

TEST_CASE("grid sup distance") {
  const auto xs = make_grid(0.0, 1.0, 0.1);
  const GridCurve c1 = tabulate(xs, [](double x) { return x * x; });
  const GridCurve c2 = tabulate(xs, [](double x) { return x * x + 0.25; });
  CHECK(grid_sup_distance(c1, c1) == 0.0);
  CHECK(grid_sup_distance(c1, c2) == doctest::Approx(0.25).epsilon(1e-14));
  const GridCurve other = tabulate(make_grid(0.0, 1.0, 0.2), [](double) { return 0.0; });
  CHECK_THROWS_AS(grid_sup_distance(c1, other), GridMismatch);

  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> y1(xs.size()), y2(xs.size());
    double scan = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      y1[i] = ud(gen);
      y2[i] = ud(gen);
      scan = std::max(scan, std::abs(y1[i] - y2[i]));
    }
    CHECK(grid_sup_distance(GridCurve(xs, y1), GridCurve(xs, y2)) == scan);
  }
}

TEST_CASE("grid construction") {
  const auto xs = make_grid(-1.0, 5.0, 1e-3);
  CHECK(xs.size() == 6001);
  CHECK(xs.front() == -1.0);
  CHECK(xs.back() == doctest::Approx(5.0));
  CHECK_THROWS_AS(make_grid(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.0, INFINITY, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(GridCurve({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(GridCurve({0.0, 1.0}, {1.0}), std::invalid_argument);
}
