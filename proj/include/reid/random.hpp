// Copyright 2026 The reid Authors
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

#ifndef REID_RANDOM_HPP_
#define REID_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace reid {

// Portable random stream. std::mt19937_64 and std::seed_seq are fully
// specified by the standard, but the std distributions are not, so the
// conversions below are done by hand to keep output identical across
// standard libraries.
class Rng {
 public:
  // Independent stream for (seed, path...), e.g. (seed, kSample, replicate).
  Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> path = {}) {
    std::vector<std::uint32_t> words;
    const auto push = [&](std::uint64_t x) {
      words.push_back(static_cast<std::uint32_t>(x));
      words.push_back(static_cast<std::uint32_t>(x >> 32));
    };
    push(seed);
    for (std::uint64_t p : path) push(p);
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace reid

#endif  // REID_RANDOM_HPP_
