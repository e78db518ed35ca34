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

#ifndef SUBMOD_RELATION_HPP
#define SUBMOD_RELATION_HPP

#include <utility>
#include <vector>

#include "submod/ground.hpp"

namespace submod {

// R between two ground sets, stored as per-left-atom neighborhood masks.
class Relation {
 public:
  Relation(GroundSet left, GroundSet right,
           const std::vector<std::pair<int, int>>& pairs);
  Relation(GroundSet left, GroundSet right,
           std::vector<Subset> neighborhoods);

  const GroundSet& left() const { return left_; }
  const GroundSet& right() const { return right_; }
  Subset neighborhood(int left_atom) const;
  bool adjacent(int left_atom, int right_atom) const;

  // R(X) = { w : exists u in X with (u,w) in R }.
  Subset image(Subset x) const;
  // R^cc(X) = { w : for all u in X, (u,w) in R }; coimage(empty) = full right.
  Subset coimage(Subset x) const;

 private:
  GroundSet left_;
  GroundSet right_;
  std::vector<Subset> nbr_;
};

inline Subset relation_image(const Relation& rel, Subset x) {
  return rel.image(x);
}
inline Subset relation_coimage(const Relation& rel, Subset x) {
  return rel.coimage(x);
}

}  // namespace submod

#endif  // SUBMOD_RELATION_HPP
