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

#ifndef GEXIT_RNG_HPP_
#define GEXIT_RNG_HPP_

#include <array>
#include <cstdint>

namespace gexit {

/// Philox4x32-10 block function (Salmon et al., SC'11). Stateless: maps a
/// 128-bit counter and a 64-bit key to 128 random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

std::uint64_t splitmix64(std::uint64_t x);

/// Reproducible random stream keyed by (seed, stream_id).
///
/// The Philox key is the seed; the counter is (block index, stream_id), so
/// any draw is a pure function of (seed, stream_id, position). A stream is
/// single-owner. Copying it forks the sequence: both copies produce the
/// same values from that point on.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();

  /// Standard Gaussian by Box-Muller; pairs are cached.
  double normal();

  /// Unit-rate exponential.
  double exponential();

  /// Independent child stream. Children of different (seed, stream_id)
  /// parents, or with different indices, do not share counters.
  RngStream substream(std::uint64_t index) const;

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gexit

#endif  // GEXIT_RNG_HPP_
