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

#ifndef SUBMOD_CERTIFICATE_HPP
#define SUBMOD_CERTIFICATE_HPP

#include <cstdint>
#include <string>

namespace submod {

// Outcome of a checkable claim. Witness text is empty when the claim holds;
// seeds and trial counts are recorded so runs can be reproduced bit-for-bit.
struct Certificate {
  std::string claim;
  bool holds = false;
  std::string witness;
  std::uint64_t seed = 0;
  int trials = 0;

  static Certificate pass(std::string claim, std::uint64_t seed = 0,
                          int trials = 0) {
    return Certificate{std::move(claim), true, "", seed, trials};
  }
  static Certificate fail(std::string claim, std::string witness,
                          std::uint64_t seed = 0, int trials = 0) {
    return Certificate{std::move(claim), false, std::move(witness), seed,
                       trials};
  }
};

}  // namespace submod

#endif  // SUBMOD_CERTIFICATE_HPP
