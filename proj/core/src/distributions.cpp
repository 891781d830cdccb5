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

#include "gexit/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gexit {
namespace {

constexpr double kInvSqrt2 = 0.707106781186547524400844362104849;

// Above this the tail goes through the continued fraction.
constexpr double kContinuedFractionCut = 8.0;
constexpr int kContinuedFractionDepth = 80;

// exp(-r^2/2) with r^2 split into its rounded value and the exact rounding
// error, so the exponent is not perturbed by ~r^2 * eps.
double exp_neg_half_square(double r) {
  const double sq = r * r;
  const double err = std::fma(r, r, -sq);
  return std::exp(-0.5 * sq) * std::exp(-0.5 * err);
}

// Laplace continued fraction R(r)/phi(r) = 1/(r + 1/(r + 2/(r + 3/(r + ...)))),
// evaluated bottom-up. Converges for r > 0; at r >= 8 the fixed depth is far
// past machine precision.
double mills_continued_fraction(double r) {
  double t = r;
  for (int k = kContinuedFractionDepth; k >= 1; --k) {
    t = r + k / t;
  }
  return 1.0 / t;
}

}  // namespace

double gumbel_density(double x) {
  return std::exp(-x - std::exp(-x));
}

double gumbel_cdf(double x) {
  return std::exp(-std::exp(-x));
}

double gumbel_identity_residual(double x) {
  return -std::log(gumbel_cdf(std::exp(-x))) - gumbel_cdf(x);
}

double gaussian_density(double x) {
  return kInvSqrt2Pi * exp_neg_half_square(x);
}

double gaussian_cdf(double x) {
  return gaussian_tail(-x);
}

double gaussian_tail(double r) {
  if (r <= kContinuedFractionCut) {
    return 0.5 * std::erfc(r * kInvSqrt2);
  }
  return gaussian_density(r) * mills_continued_fraction(r);
}

double gaussian_log_tail(double r) {
  if (r <= kContinuedFractionCut) {
    return std::log(gaussian_tail(r));
  }
  return -0.5 * r * r - kLogSqrt2Pi + std::log(mills_continued_fraction(r));
}

double gaussian_log_scaled_tail(double r) {
  if (r <= kContinuedFractionCut) {
    return std::log(gaussian_tail(r)) + 0.5 * r * r;
  }
  return std::log(mills_continued_fraction(r)) - kLogSqrt2Pi;
}

double gaussian_mills_ratio(double r) {
  if (r <= kContinuedFractionCut) {
    return gaussian_tail(r) / gaussian_density(r);
  }
  return mills_continued_fraction(r);
}

double gaussian_tail_asymptotic(double r) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("gaussian_tail_asymptotic: r must be > 0");
  }
  return gaussian_density(r) / r;
}

double conditional_density_p_r(double r, double x) {
  const double e = std::exp(-x);
  const double half_e_sq = 0.5 * e * e;
  if (!std::isfinite(half_e_sq)) {
    return 0.0;
  }
  // -x - (e + r)^2/2 - ln sqrt(2 pi) - ln R(r), with r^2/2 folded into the
  // scaled log tail.
  const double exponent =
      -x - half_e_sq - r * e - kLogSqrt2Pi - gaussian_log_scaled_tail(r);
  return std::exp(exponent);
}

double shifted_density(double r, double x) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("shifted_density: r must be > 0");
  }
  return conditional_density_p_r(r, x + std::log(r));
}

TailModel gaussian_model() {
  TailModel m;
  m.name = "gaussian";
  m.cdf = [](double x) { return gaussian_cdf(x); };
  m.tail = [](double x) { return gaussian_tail(x); };
  m.density = [](double x) { return gaussian_density(x); };
  m.scaling_a = [](double r) {
    if (!(r > 0.0)) {
      throw std::invalid_argument(
          "gaussian scaling a(r) = 1/r needs r > 0");
    }
    return 1.0 / r;
  };
  return m;
}

TailModel exponential_model() {
  TailModel m;
  m.name = "exponential";
  m.cdf = [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); };
  m.tail = [](double x) { return x <= 0.0 ? 1.0 : std::exp(-x); };
  m.density = [](double x) { return x < 0.0 ? 0.0 : std::exp(-x); };
  m.scaling_a = [](double) { return 1.0; };
  return m;
}

}  // namespace gexit
