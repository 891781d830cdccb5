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

#ifndef GEXIT_DISTRIBUTIONS_HPP_
#define GEXIT_DISTRIBUTIONS_HPP_

#include <functional>
#include <string>

namespace gexit {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
inline constexpr double kLogSqrt2Pi = 0.918938533204672741780329736406;

// Gumbel law Lambda(x) = exp(-exp(-x)).
double gumbel_density(double x);
double gumbel_cdf(double x);

// -ln Lambda(exp(-x)) - Lambda(x). Zero up to rounding for every finite x.
double gumbel_identity_residual(double x);

double gaussian_density(double x);
double gaussian_cdf(double x);

/// Upper tail 1 - G(r) of the standard Gaussian, evaluated without
/// cancellation. Uses erfc up to r = 8 and the Laplace continued fraction
/// for the Mills ratio beyond. Relative accuracy ~1e-15 while the result is
/// a normal double (r below ~37.5); underflows to zero past r ~ 38.6.
double gaussian_tail(double r);

/// ln(1 - G(r)), finite for every finite r.
double gaussian_log_tail(double r);

/// ln(1 - G(r)) + r^2/2. Bounded by -ln(r) - ln(sqrt(2 pi)) for large r, so it
/// never overflows where the tail itself underflows.
double gaussian_log_scaled_tail(double r);

/// Mills ratio (1 - G(r)) / phi(r).
double gaussian_mills_ratio(double r);

/// Leading-order tail phi(r) / r. Throws std::invalid_argument for r <= 0.
double gaussian_tail_asymptotic(double r);

/// Density of -ln(N - r) given N > r, N standard Gaussian:
///   p_r(x) = phi(exp(-x) + r) exp(-x) / (1 - G(r)).
/// The r^2/2 term of the exponent is cancelled against the log tail before
/// exponentiating, so the value is finite for large r.
double conditional_density_p_r(double r, double x);

/// Density of -ln(N - r) - ln r given N > r, i.e. p_r(x + ln r).
/// Converges to gumbel_density(x) as r grows. Throws for r <= 0.
double shifted_density(double r, double x);

/// A distribution on the real line described by its CDF, a directly computed
/// tail, its density and a residual-life scaling function a(r) for which
/// tail(r + a(r) x) / tail(r) -> exp(-x).
struct TailModel {
  std::string name;
  std::function<double(double)> cdf;
  std::function<double(double)> tail;
  std::function<double(double)> density;
  std::function<double(double)> scaling_a;
};

/// Standard Gaussian, a(r) = 1/r (defined for r > 0).
TailModel gaussian_model();

/// Unit exponential, a(r) = 1. Memoryless, so its residual life is exactly
/// exponential for every r.
TailModel exponential_model();

}  // namespace gexit

#endif  // GEXIT_DISTRIBUTIONS_HPP_
