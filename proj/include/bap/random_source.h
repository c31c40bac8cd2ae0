// Copyright 2026 The BAP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BAP_RANDOM_SOURCE_H_
#define BAP_RANDOM_SOURCE_H_

#include <array>
#include <cstdint>

namespace bap {

// Philox4x32-10 block function (Salmon et al., SC'11). Exposed for the
// known-answer tests.
std::array<uint32_t, 4> Philox4x32(std::array<uint32_t, 4> counter,
                                   std::array<uint32_t, 2> key);

// Counter-based random stream addressed by (seed, stream). The seed is the
// Philox key and the stream id occupies the high half of the counter, so two
// sources with different stream ids never share a block. Single owner; not
// thread-safe.
class RandomSource {
 public:
  RandomSource(uint64_t seed, uint64_t stream);

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  uint32_t NextU32();
  uint64_t NextU64();

  // Uniform on the open interval (0, 1) with 53 random bits.
  double Uniform();

  // Standard normal variate (Box-Muller, both outputs used).
  double Normal();

 private:
  void Refill();

  uint64_t seed_;
  uint64_t stream_;
  uint64_t block_ = 0;
  std::array<uint32_t, 4> buffer_{};
  int buffered_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace bap

#endif  // BAP_RANDOM_SOURCE_H_
