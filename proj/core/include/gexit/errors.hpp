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

#ifndef GEXIT_ERRORS_HPP_
#define GEXIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gexit {

// Contract violations on arguments are reported as std::invalid_argument.
// The types below are runtime conditions a caller may want to handle.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A simulated path did not leave the domain before the guard horizon.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Rejection sampling would need more attempts than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A root-finder could not bracket the requested tail level.
class NoBracket : public Error {
 public:
  using Error::Error;
};

// The conditioning tail probability underflowed to zero.
class ZeroTail : public Error {
 public:
  using Error::Error;
};

// Two curves were compared on different abscissae.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace gexit

#endif  // GEXIT_ERRORS_HPP_
