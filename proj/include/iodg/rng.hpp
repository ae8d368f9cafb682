// Copyright 2026 The iodgraph Authors.
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

#ifndef IODG_RNG_HPP_
#define IODG_RNG_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace iodg {

// splitmix64. Seeded outputs are stable across platforms and standard
// library versions, which the reproducibility contract relies on
// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;  // rejection sampling, unbiased
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  bool coin(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

// Stable seed derivation for per-item streams (census shards, per-child
// crossover seeds). Mixing is splitmix64's finalizer over a running state.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0) {
  Rng r(seed ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xc2b2ae3d27d4eb4full));
  return r.next();
}

}  // namespace iodg

#endif  // IODG_RNG_HPP_
