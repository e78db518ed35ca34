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

#ifndef SUBMOD_ERRORS_HPP
#define SUBMOD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace submod {

enum class ErrorCode {
  IncompleteTable,
  DuplicateEntry,
  NegativeCapacity,
  ShapeError,
  NotConcave,
  InvalidDistribution,
  NotPD,
  InvalidKernel,
  NotAnIdeal,
  TooLarge,
  GroundMismatch,
  NotSubmodular,
  NotSupermodular,
  NotIncreasing,
  NegativeWeight,
  PreconditionFailed,
  BadArgument,
  NotDiverging,
  RankMismatch,
  BadCoefficient,
  NotComonotonic,
  SandwichViolated,
  BetaNotMinorizing,
  NotMinorizing,
  NotAMatroidRank,
  NotSurjective,
  EmptyWindow,
  NotAPartition,
  NotSubadditive,
  NormalizationViolated,
  InternalError,
};

const char* error_code_name(ErrorCode code);

// All library failures throw this. `witness_masks` carries the subsets
// involved in a violated inequality, when there is one to report.
class SubmodError : public std::runtime_error {
 public:
  SubmodError(ErrorCode code, const std::string& message,
              std::vector<std::uint32_t> witness_masks = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness_masks)) {}

  ErrorCode code() const { return code_; }
  const std::vector<std::uint32_t>& witness_masks() const { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::uint32_t> witness_;
};

}  // namespace submod

#endif  // SUBMOD_ERRORS_HPP
