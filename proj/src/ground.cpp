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

#include "submod/ground.hpp"

#include <bit>
#include <cstdlib>
#include <set>

namespace submod {

int popcount(Subset mask) { return std::popcount(mask); }

int max_ground_size() {
  static const int limit = [] {
    if (const char* env = std::getenv("SUBMOD_MAX_N")) {
      int value = std::atoi(env);
      if (value > 0 && value <= 30) return value;
    }
    return 20;
  }();
  return limit;
}

void require_ground_size(int n, const char* operation) {
  if (n > max_ground_size()) {
    throw SubmodError(ErrorCode::TooLarge,
                      std::string(operation) + ": ground size " +
                          std::to_string(n) + " exceeds limit " +
                          std::to_string(max_ground_size()) +
                          " (set SUBMOD_MAX_N to raise)");
  }
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.size() > 30) {
    throw SubmodError(ErrorCode::TooLarge, "ground set larger than 30 atoms");
  }
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i].empty()) {
      throw SubmodError(ErrorCode::BadArgument, "empty atom label");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw SubmodError(ErrorCode::BadArgument,
                        "duplicate atom label '" + labels_[i] + "'");
    }
  }
}

const std::string& GroundSet::label(int i) const {
  if (i < 0 || i >= size()) {
    throw SubmodError(ErrorCode::BadArgument, "atom index out of range");
  }
  return labels_[i];
}

int GroundSet::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw SubmodError(ErrorCode::BadArgument, "unknown atom '" + label + "'");
  }
  return it->second;
}

bool GroundSet::has(const std::string& label) const {
  return index_.count(label) > 0;
}

Subset GroundSet::subset_of(const std::vector<std::string>& labels) const {
  Subset mask = 0;
  for (const auto& l : labels) mask |= Subset{1} << index(l);
  return mask;
}

std::vector<std::string> GroundSet::subset_labels(Subset mask) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (mask & (Subset{1} << i)) out.push_back(labels_[i]);
  }
  return out;
}

std::string GroundSet::subset_name(Subset mask) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (mask & (Subset{1} << i)) {
      if (!first) out += ",";
      out += labels_[i];
      first = false;
    }
  }
  return out + "}";
}

void require_same_ground(const GroundSet& a, const GroundSet& b,
                         const char* operation) {
  if (a != b) {
    throw SubmodError(ErrorCode::GroundMismatch,
                      std::string(operation) + ": ground sets differ");
  }
}

GroundSet disjoint_union_ground(const GroundSet& left,
                                const GroundSet& right) {
  std::vector<std::string> labels = left.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (const auto& l : right.labels()) {
    std::string candidate = l;
    while (used.count(candidate)) candidate += "'";
    used.insert(candidate);
    labels.push_back(candidate);
  }
  return GroundSet(labels);
}

}  // namespace submod
