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

#ifndef SUBMOD_CHARGE_HPP
#define SUBMOD_CHARGE_HPP

#include <vector>

#include "submod/set_function.hpp"

namespace submod {

struct StepFunction;

// Finitely additive signed measure on a finite ground set: a vector of atom
// values. Additivity is structural, alpha(X) = sum_{x in X} atom(x).
struct Charge {
  GroundSet ground;
  std::vector<Rational> atom;

  Charge() = default;
  Charge(GroundSet g, std::vector<Rational> values);

  int n() const { return ground.size(); }

  Rational operator()(Subset mask) const;
  Rational total() const { return (*this)(ground.full_mask()); }

  // alpha^(w) = sum_x w(x) alpha({x}).
  Rational dot(const StepFunction& w) const;

  bool nonnegative() const;

  SetFunction as_setfunction() const;  // flags {Modular, Normalized}

  Charge operator+(const Charge& other) const;
  Charge operator-(const Charge& other) const;
  Charge scaled(const Rational& c) const;

  // Charge join/meet: (alpha v beta)(X) = max_{Y subseteq X} ..., which for
  // charges is the atomwise max/min.
  Charge join(const Charge& other) const;
  Charge meet(const Charge& other) const;

  // Jordan decomposition parts (atomwise).
  Charge positive() const;
  Charge negative() const;
};

// alpha <= phi on every subset; first violating subset otherwise.
std::optional<Subset> minorization_violation(const Charge& alpha,
                                             const SetFunction& phi);

}  // namespace submod

#endif  // SUBMOD_CHARGE_HPP
