// Copyright 2026 The Occam Graph Authors.
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

#ifndef OCCAM_RANDOM_HPP_
#define OCCAM_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace occam {

// SplitMix64 finalizer. Used to turn structured seeds (base ^ index) into
// well-mixed generator states.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for replicate `replicate` of sweep cell `cell` under base seed `base`:
// a per-cell stream key xor'ed with the replicate index.
std::uint64_t replicate_seed(std::uint64_t base, std::uint64_t cell,
                             std::uint64_t replicate);

// 64-bit Mersenne Twister keyed through splitmix64. Satisfies
// UniformRandomBitGenerator so it composes with <random> distributions.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  // Uniform on the open interval (0, 1) with 53 random bits; identical
  // across standard libraries.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace occam

#endif  // OCCAM_RANDOM_HPP_
