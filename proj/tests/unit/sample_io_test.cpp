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

#include <random>
#include <sstream>

#include "gexit/sample_io.hpp"

using namespace gexit;

TEST_CASE("exit csv round-trips every double exactly") {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> ud(-50.0, 50.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<AcceptedExit> rows(1 + gen() % 200);
    std::uint64_t idx = 0;
    for (auto& row : rows) {
      idx += 1 + gen() % 1000;
      row.attempt_index = idx;
      row.record.normalized_time = ud(gen) * std::exp(ud(gen) / 5.0);
      row.record.tau = std::abs(ud(gen));
      row.record.side = gen() % 2 ? ExitSide::right : ExitSide::left;
    }
    std::stringstream ss;
    write_exit_csv(ss, rows);
    const auto back = read_exit_csv(ss);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(back[i].attempt_index == rows[i].attempt_index);
      CHECK(back[i].record.tau == rows[i].record.tau);
      CHECK(back[i].record.side == rows[i].record.side);
      CHECK(back[i].record.normalized_time == rows[i].record.normalized_time);
    }
  }
}

TEST_CASE("exit csv format and errors") {
  std::vector<AcceptedExit> rows(1);
  rows[0].attempt_index = 7;
  rows[0].record.tau = 0.1;
  rows[0].record.side = ExitSide::right;
  rows[0].record.normalized_time = -0.5;
  std::stringstream ss;
  write_exit_csv(ss, rows);
  CHECK(ss.str() ==
        "attempt_index,tau,side,normalized_time\n"
        "7,0.10000000000000001,right,-0.5\n");

  std::stringstream bad_header("a,b,c,d\n1,2,right,3\n");
  CHECK_THROWS_AS(read_exit_csv(bad_header), std::runtime_error);
  std::stringstream bad_side("attempt_index,tau,side,normalized_time\n1,2,up,3\n");
  CHECK_THROWS_AS(read_exit_csv(bad_side), std::runtime_error);
  std::stringstream short_row("attempt_index,tau,side,normalized_time\n1,2,right\n");
  CHECK_THROWS_AS(read_exit_csv(short_row), std::runtime_error);
  std::stringstream bad_num("attempt_index,tau,side,normalized_time\n1,x,right,3\n");
  CHECK_THROWS_AS(read_exit_csv(bad_num), std::runtime_error);

  CHECK(normalized_times(rows).values()[0] == -0.5);
}
