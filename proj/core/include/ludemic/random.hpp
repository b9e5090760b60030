// Copyright 2026 The Ludemic Authors
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

#ifndef LUDEMIC_RANDOM_HPP_
#define LUDEMIC_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace ludemic {

// Reproducible random stream: std::mt19937_64 (fully specified by the C++
// standard) seeded through std::seed_seq. Bounded draws use Lemire's
// multiply-and-reject method, so results do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}

  // Independent stream `stream` derived from `seed`.
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound); bound must be positive.
  std::uint32_t Below(std::uint32_t bound) {
    std::uint64_t m = static_cast<std::uint64_t>(Low32()) * bound;
    std::uint32_t low = static_cast<std::uint32_t>(m);
    if (low < bound) {
      const std::uint32_t threshold = (0u - bound) % bound;
      while (low < threshold) {
        m = static_cast<std::uint64_t>(Low32()) * bound;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  // A seed for stream `stream`, for handing to another Rng.
  static std::uint64_t Split(std::uint64_t seed, std::uint64_t stream) {
    Rng child(seed, stream);
    return child.Next();
  }

 private:
  std::uint32_t Low32() { return static_cast<std::uint32_t>(engine_()); }

  std::mt19937_64 engine_;
};

}  // namespace ludemic

#endif  // LUDEMIC_RANDOM_HPP_
