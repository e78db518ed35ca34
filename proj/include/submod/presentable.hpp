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

#ifndef SUBMOD_PRESENTABLE_HPP
#define SUBMOD_PRESENTABLE_HPP

#include <string>
#include <vector>

#include "submod/set_function.hpp"

namespace submod {

// Rational subinterval of [0,1] with tracked end openness. Openness matters
// for the set algebra (complements, disjointness); measure ignores it.
struct RInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool empty() const {
    return lo > hi || (lo == hi && !(lo_closed && hi_closed));
  }
  bool contains(const Rational& x) const;
  bool operator==(const RInterval& other) const {
    return lo == other.lo && hi == other.hi && lo_closed == other.lo_closed &&
           hi_closed == other.hi_closed;
  }
};

// Finite union of rational subintervals of [0,1], kept canonical: sorted,
// pairwise disjoint, with touching compatible intervals merged. Canonical
// forms are unique, so equality is structural.
class PresentableSet {
 public:
  PresentableSet() = default;
  explicit PresentableSet(std::vector<RInterval> parts);

  static PresentableSet empty_set() { return PresentableSet(); }
  static PresentableSet unit();  // [0,1]
  static PresentableSet interval(const Rational& lo, const Rational& hi,
                                 bool lo_closed = true, bool hi_closed = true);

  const std::vector<RInterval>& parts() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool contains(const Rational& x) const;

  PresentableSet unite(const PresentableSet& other) const;
  PresentableSet intersect(const PresentableSet& other) const;
  PresentableSet difference(const PresentableSet& other) const;
  PresentableSet complement() const;  // within [0,1]

  Rational measure() const;
  // Supremum of the point set; 0 for the empty set by convention (the
  // infimum of [0,1]), making sup a normalized increasing setfunction.
  Rational sup() const;

  bool operator==(const PresentableSet& other) const {
    return parts_ == other.parts_;
  }
  bool operator!=(const PresentableSet& other) const {
    return !(*this == other);
  }

  std::string to_string() const;  // e.g. "[0/1,1/2) u [3/4,1/1]"

 private:
  std::vector<RInterval> parts_;  // canonical
};

// Finite quotient of the presentable algebra: a partition of [0,1] into
// presentable cells, one ground atom per cell. Subsets of the quotient pull
// back to presentable sets, so every finite-module operation applies to
// interval-defined setfunctions.
struct PresentableQuotient {
  GroundSet ground;
  std::vector<PresentableSet> cells;

  PresentableSet pullback(Subset mask) const;
};

// Validates that the cells are pairwise disjoint with union [0,1];
// NotAPartition otherwise. Labels default to c0, c1, ...
PresentableQuotient presentable_quotient(
    const std::vector<PresentableSet>& cells,
    const std::vector<std::string>& labels = {});

// phi(X) = sup(pullback(X)): increasing submodular (the interval supremum).
SetFunction quotient_sup_function(const PresentableQuotient& quotient);
// phi(X) = lambda(pullback(X)): a charge.
SetFunction quotient_measure_function(const PresentableQuotient& quotient);

}  // namespace submod

#endif  // SUBMOD_PRESENTABLE_HPP
