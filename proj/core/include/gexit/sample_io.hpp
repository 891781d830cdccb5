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

#ifndef GEXIT_SAMPLE_IO_HPP_
#define GEXIT_SAMPLE_IO_HPP_

#include <iosfwd>
#include <vector>

#include "gexit/exitsim.hpp"
#include "gexit/stats.hpp"

namespace gexit {

// Sample files: header "attempt_index,tau,side,normalized_time", one row
// per accepted exit, reals printed with 17 significant digits so that a
// read-back reproduces every double exactly.
void write_exit_csv(std::ostream& out, const std::vector<AcceptedExit>& rows);

// Throws std::runtime_error on a malformed header or row.
std::vector<AcceptedExit> read_exit_csv(std::istream& in);

EmpiricalSample normalized_times(const std::vector<AcceptedExit>& rows);

}  // namespace gexit

#endif  // GEXIT_SAMPLE_IO_HPP_
