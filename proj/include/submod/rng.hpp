// Copyright 2026 The Authors.
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

#ifndef SUBMOD_RNG_HPP
#define SUBMOD_RNG_HPP

#include <cstdint>
#include <vector>

#include "submod/rational.hpp"

namespace submod {

// SplitMix64. Used instead of <random> distributions so that seeded runs are
// byte-identical across standard libraries; per-trial seeds derive
// deterministically from the root seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant for test
  // instance generation but kept tiny by the 64-bit state anyway.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

  int next_int(int lo, int hi) {  // inclusive ends
    return lo + static_cast<int>(next_below(
                    static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool next_bool() { return (next_u64() & 1u) != 0; }

  // Rational with numerator in [-range, range] and denominator in [1, den].
  Rational next_rational(int range, int den) {
    int num = next_int(-range, range);
    int d = next_int(1, den);
    return Rational(num, d);
  }

  Rational next_nonneg_rational(int range, int den) {
    int num = next_int(0, range);
    int d = next_int(1, den);
    return Rational(num, d);
  }

  // Child generator for trial `index`; independent streams per trial.
  Rng child(std::uint64_t index) const {
    Rng c(state_ ^ (0x5851f42d4c957f2dull * (index + 1)));
    c.next_u64();
    return c;
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(next_below(static_cast<std::uint64_t>(i + 1)));
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace submod

#endif  // SUBMOD_RNG_HPP
