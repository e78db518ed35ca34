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

#ifndef SUBMOD_GROUND_HPP
#define SUBMOD_GROUND_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "submod/errors.hpp"

namespace submod {

// A subset of a ground set, encoded as a bitmask: bit i set <=> atom i is in
// the subset, in the order fixed by the GroundSet at construction.
using Subset = std::uint32_t;

int popcount(Subset mask);

// Soft limit on ground sizes for enumeration-backed operations, overridable
// through the SUBMOD_MAX_N environment variable. Raised limits are reported
// as "uncertified" by the CLI.
int max_ground_size();
void require_ground_size(int n, const char* operation);

// Ordered list of distinct atom labels. All subset encodings refer to this
// order; two ground sets are interchangeable only if they are equal.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  Subset full_mask() const {
    return size() == 0 ? 0u : ((Subset{1} << size()) - 1u);
  }
  std::uint64_t subset_count() const { return std::uint64_t{1} << size(); }

  const std::string& label(int i) const;
  const std::vector<std::string>& labels() const { return labels_; }
  int index(const std::string& label) const;  // BadArgument if absent
  bool has(const std::string& label) const;

  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> subset_labels(Subset mask) const;  // sorted by atom order
  std::string subset_name(Subset mask) const;                 // "{a,b}"

  bool operator==(const GroundSet& other) const {
    return labels_ == other.labels_;
  }
  bool operator!=(const GroundSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

void require_same_ground(const GroundSet& a, const GroundSet& b,
                         const char* operation);

// Ground set of the disjoint union I ∪ J. Colliding labels from the right
// side are renamed deterministically by appending "'" until distinct.
GroundSet disjoint_union_ground(const GroundSet& left, const GroundSet& right);

}  // namespace submod

#endif  // SUBMOD_GROUND_HPP
