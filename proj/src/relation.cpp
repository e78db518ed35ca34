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

#include "submod/relation.hpp"

namespace submod {

Relation::Relation(GroundSet left, GroundSet right,
                   const std::vector<std::pair<int, int>>& pairs)
    : left_(std::move(left)),
      right_(std::move(right)),
      nbr_(left_.size(), 0) {
  for (const auto& [u, w] : pairs) {
    if (u < 0 || u >= left_.size() || w < 0 || w >= right_.size()) {
      throw SubmodError(ErrorCode::BadArgument, "relation pair out of range");
    }
    nbr_[u] |= Subset{1} << w;
  }
}

Relation::Relation(GroundSet left, GroundSet right,
                   std::vector<Subset> neighborhoods)
    : left_(std::move(left)),
      right_(std::move(right)),
      nbr_(std::move(neighborhoods)) {
  if (static_cast<int>(nbr_.size()) != left_.size()) {
    throw SubmodError(ErrorCode::ShapeError, "one neighborhood per left atom");
  }
  for (Subset nb : nbr_) {
    if (nb > right_.full_mask()) {
      throw SubmodError(ErrorCode::BadArgument, "neighborhood out of range");
    }
  }
}

Subset Relation::neighborhood(int left_atom) const {
  if (left_atom < 0 || left_atom >= left_.size()) {
    throw SubmodError(ErrorCode::BadArgument, "left atom out of range");
  }
  return nbr_[left_atom];
}

bool Relation::adjacent(int left_atom, int right_atom) const {
  return (neighborhood(left_atom) >> right_atom) & 1u;
}

Subset Relation::image(Subset x) const {
  Subset out = 0;
  for (int u = 0; u < left_.size(); ++u) {
    if (x & (Subset{1} << u)) out |= nbr_[u];
  }
  return out;
}

Subset Relation::coimage(Subset x) const {
  Subset out = right_.full_mask();
  for (int u = 0; u < left_.size(); ++u) {
    if (x & (Subset{1} << u)) out &= nbr_[u];
  }
  return out;
}

}  // namespace submod
