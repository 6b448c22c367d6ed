// Copyright 2026 The apdhg Authors
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

#ifndef APDHG_RANDOM_H_
#define APDHG_RANDOM_H_

#include <cstdint>

namespace apdhg {

// Counter-based SplitMix64 stream.
//
// Draw k (k = 0, 1, 2, ...) of the stream with seed S is
//   Mix(S + (k + 1) * 0x9E3779B97F4A7C15)   (arithmetic mod 2^64)
// where Mix is the SplitMix64 finalizer. This is bit-identical to the
// reference sequential SplitMix64 generator seeded with S, so any
// implementation can reproduce a stream from (seed, index) alone.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  static constexpr std::uint64_t Mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Draw number `index` of the stream, independent of the cursor.
  std::uint64_t At(std::uint64_t index) const {
    return Mix(seed_ + (index + 1) * kGamma);
  }

  std::uint64_t Next() { return At(counter_++); }

  // Uniform on (0, 1]: the top 53 bits plus one, scaled by 2^-53.
  double NextOpenClosed() {
    return static_cast<double>((Next() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double NextUniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(Next() >> 11) * 0x1.0p-53);
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace apdhg

#endif  // APDHG_RANDOM_H_
