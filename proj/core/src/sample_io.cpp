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

#include "gexit/sample_io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gexit {
namespace {

constexpr std::string_view kHeader = "attempt_index,tau,side,normalized_time";

template <typename T>
T parse_field(std::string_view field, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error("read_exit_csv: bad field '" + std::string(field) +
                             "' on line " + std::to_string(line_no));
  }
  return value;
}

}  // namespace

void write_exit_csv(std::ostream& out, const std::vector<AcceptedExit>& rows) {
  out << kHeader << '\n';
  char line[160];
  for (const auto& row : rows) {
    std::snprintf(line, sizeof line, "%llu,%.17g,%s,%.17g\n",
                  static_cast<unsigned long long>(row.attempt_index),
                  row.record.tau,
                  row.record.side == ExitSide::right ? "right" : "left",
                  row.record.normalized_time);
    out << line;
  }
}

std::vector<AcceptedExit> read_exit_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("read_exit_csv: missing or unexpected header");
  }
  std::vector<AcceptedExit> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string_view rest(line);
    std::string_view fields[4];
    for (int i = 0; i < 4; ++i) {
      const auto comma = rest.find(',');
      if ((i < 3) == (comma == std::string_view::npos)) {
        throw std::runtime_error("read_exit_csv: expected 4 fields on line " +
                                 std::to_string(line_no));
      }
      fields[i] = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{}
                                             : rest.substr(comma + 1);
    }
    AcceptedExit row;
    row.attempt_index = parse_field<unsigned long long>(fields[0], line_no);
    row.record.tau = parse_field<double>(fields[1], line_no);
    if (fields[2] == "right") {
      row.record.side = ExitSide::right;
    } else if (fields[2] == "left") {
      row.record.side = ExitSide::left;
    } else {
      throw std::runtime_error("read_exit_csv: bad side on line " +
                               std::to_string(line_no));
    }
    row.record.normalized_time = parse_field<double>(fields[3], line_no);
    rows.push_back(row);
  }
  return rows;
}

EmpiricalSample normalized_times(const std::vector<AcceptedExit>& rows) {
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& row : rows) values.push_back(row.record.normalized_time);
  return EmpiricalSample(std::move(values));
}

}  // namespace gexit
