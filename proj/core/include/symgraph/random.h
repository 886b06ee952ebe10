// Copyright 2026 The SymGraph Authors
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

#ifndef SYMGRAPH_RANDOM_H_
#define SYMGRAPH_RANDOM_H_

#include <cstdint>
#include <random>

namespace symgraph {

// Every generator in the library takes an explicit engine of this type.
using Rng = std::mt19937_64;

// Number of rejection-sampling attempts before a sampler reports
// generation-retry-exhausted.
inline constexpr int kMaxRetries = 1000;

inline int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double UniformReal(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for the index-th sample of a build. Depends only on its arguments, so
// samples can be generated in any order or in parallel.
inline std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index) {
  return SplitMix64(SplitMix64(base) ^ SplitMix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace symgraph

#endif  // SYMGRAPH_RANDOM_H_
